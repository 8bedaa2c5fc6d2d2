#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "igusa/error.hpp"
#include "igusa/oracle.hpp"
#include "igusa/zeta.hpp"
#include "systems.hpp"

using namespace igusa;
using igusa::testing::kXY;
using cd = std::complex<double>;

namespace {

constexpr double kTol = 1e-12;
const cd I(0, 1);

}  // namespace

TEST(Counts, SmallCases) {
  EXPECT_EQ(count_Nm(igusa::testing::line_squares(), PrimeContext(3), 1), 1u);
  EXPECT_EQ(count_Nm(parse_system({"x", "y"}, kXY), PrimeContext(5), 2), 1u);
  EXPECT_EQ(count_Nm(igusa::testing::line_squares(), PrimeContext(3), 0), 1u);
  auto t = congruence_table(igusa::testing::line_squares(), PrimeContext(5), 2);
  EXPECT_FALSE(t.raw);
  EXPECT_EQ(t.counts.size(), 3u);
  EXPECT_EQ(t.normalized[0], 1);
  EXPECT_THROW(count_Nm(igusa::testing::cone_section(), PrimeContext(5), 4, 1e6), BudgetExceeded);
}

TEST(ExpSum, DirectValues) {
  PrimeContext ctx(3);
  auto sys = igusa::testing::line_squares();
  EXPECT_NEAR(std::abs(exp_sum(sys, ctx, 0, 1) - cd(1)), 0, kTol);
  cd want = (1.0 + 2.0 * std::exp(I * (4 * std::numbers::pi / 3))) / 3.0;
  EXPECT_NEAR(std::abs(exp_sum(sys, ctx, 1, 1) - want), 0, kTol);
}

TEST(ExpSum, DecayFitOnExactPowers) {
  std::vector<std::size_t> lv = {1, 2, 3};
  std::vector<cd> vals = {cd(std::pow(5.0, -0.5)), cd(std::pow(5.0, -1.0)), cd(0, std::pow(5.0, -1.5))};
  EXPECT_NEAR(fit_decay_exponent(lv, vals, 5), -0.5, 1e-12);
}

TEST(CellIntegral, ThreeCases) {
  PrimeContext ctx(5);
  auto sq = igusa::testing::line_squares();
  auto out = cell_integral(sq, ctx, IntVec{1, 1}, 1, IntVec{1, 1});
  EXPECT_EQ(out.kind, CellCase::Outside);
  EXPECT_TRUE(out.value.is_zero());

  auto part = cell_integral(sq, ctx, IntVec{1, 24}, 2, IntVec{1, 1});
  EXPECT_EQ(part.kind, CellCase::Partial);
  EXPECT_EQ(part.k, 0u);
  EXPECT_TRUE(part.value.equals(RatFun::constant(5, mpq_class(1, 25))));

  auto in = cell_integral(parse_system({"x-y", "x^2-y^2"}, kXY), ctx, IntVec{1, 1}, 1, IntVec{1, 1});
  EXPECT_EQ(in.kind, CellCase::Inside);
  auto want = RatFun(5, QPoly::monomial(mpq_class(1, 5) * mpq_class(4, 5), 1), {{GeomFactor{-1, 1}, 1}});
  EXPECT_TRUE(in.value.equals(want));
}

TEST(Characters, OrthogonalityAndLogs) {
  PrimeContext ctx(7);
  for (std::uint64_t j = 0; j < 6; ++j) {
    Character chi(ctx, j);
    cd s = 0;
    for (std::uint64_t v = 1; v < 7; ++v) s += chi(v);
    EXPECT_NEAR(std::abs(s), j == 0 ? 6.0 : 0.0, 1e-12);
    EXPECT_NEAR(std::abs(chi(0)), 0, 1e-15);
    auto inv = chi.inverse();
    for (std::uint64_t v = 1; v < 7; ++v) EXPECT_NEAR(std::abs(chi(v) * inv(v) - cd(1)), 0, 1e-12);
  }
  Character g(ctx, 1);
  EXPECT_EQ(g.generator(), 3u);
  EXPECT_EQ(g.log(3), 1u);
  EXPECT_EQ(g.log(1), 0u);
  EXPECT_THROW(Character(ctx, 6), DomainError);
}

TEST(Characters, CoefficientExtraction) {
  PrimeContext ctx(3);
  auto sq = igusa::testing::line_squares();
  EXPECT_NEAR(std::abs(coeff_extract(sq, ctx, 0, Character::trivial(ctx)) - cd(2.0 / 3)), 0, kTol);
  EXPECT_NEAR(std::abs(coeff_extract(sq, ctx, 1, Character::trivial(ctx))), 0, kTol);
  EXPECT_NEAR(std::abs(coeff_extract(sq, ctx, 0, Character::quadratic(ctx)) - cd(-2.0 / 3)), 0, kTol);
  EXPECT_EQ(coeff_extract_exact(sq, ctx, 0), mpq_class(2, 3));
}

TEST(Characters, GaussianSums) {
  EXPECT_NEAR(std::abs(gaussian_sum(Character::quadratic(PrimeContext(5))) - cd(std::sqrt(5.0) / 4)), 0, kTol);
  EXPECT_NEAR(std::abs(gaussian_sum(Character::quadratic(PrimeContext(3))) - I * (std::sqrt(3.0) / 2)), 0, kTol);
  EXPECT_THROW(gaussian_sum(Character::trivial(PrimeContext(5))), DomainError);
  // |g|^2 = p / (p-1)^2 for every nontrivial character
  PrimeContext ctx(11);
  for (std::uint64_t j = 1; j < 10; ++j) EXPECT_NEAR(std::norm(gaussian_sum(Character(ctx, j))), 11.0 / 100, 1e-12);
}

TEST(StationaryPhase, ResidualVanishesOnSmoothLine) {
  PrimeContext ctx(5);
  auto sq = igusa::testing::line_squares();
  EXPECT_EQ(stationary_phase_residual(sq, ctx, 0, 1), 0.0);
  for (std::size_t m : {1, 2}) {
    for (std::uint64_t u : {1, 2}) EXPECT_LT(stationary_phase_residual(sq, ctx, m, u), 1e-9) << m << "," << u;
  }
}

TEST(TruncatedMeasures, FullRegionMatchesCoefficients) {
  PrimeContext ctx(3);
  auto sq = igusa::testing::line_squares();
  auto res = truncated_measures(sq, ctx, 3, 5, Region::Full, 3);
  EXPECT_TRUE(res.stable);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(res.at_r[k], coeff_extract_exact(sq, ctx, k)) << k;
}

TEST(TruncatedMeasures, OriginRegionMatchesEngine) {
  PrimeContext ctx(3);
  auto sys = igusa::testing::pencil(2);
  EngineOptions opts;
  auto tay = zeta_origin(sys, ctx, opts).zeta.taylor(2);
  for (std::size_t r : {5, 6}) {
    auto res = truncated_measures(sys, ctx, r, r + 2, Region::Origin, 2);
    EXPECT_EQ(res.at_r[2], tay[2]) << r;
  }
}

TEST(TruncatedMeasures, RejectsTruncation) {
  PrimeContext ctx(3);
  EXPECT_THROW(truncated_measures(igusa::testing::line_squares(), ctx, 2, 3, Region::Full, 3), DomainError);
  EXPECT_THROW(truncated_measures(igusa::testing::line_squares(), ctx, 4, 3, Region::Full, 1), DomainError);
  EXPECT_EQ(to_string(Region::Origin), "origin");
}
