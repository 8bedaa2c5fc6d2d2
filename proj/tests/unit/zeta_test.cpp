#include <set>

#include <gtest/gtest.h>

#include "igusa/error.hpp"
#include "igusa/oracle.hpp"
#include "igusa/zeta.hpp"
#include "systems.hpp"

using namespace igusa;
using igusa::testing::kXY;
using igusa::testing::kXYZ;

namespace {

std::uint64_t torus_zeros(std::uint64_t p, int k) {
  std::uint64_t n = 0;
  PrimeContext ctx(p);
  auto f = parse_polynomial("x^" + std::to_string(k) + "+y^" + std::to_string(k), kXY);
  for (std::int64_t x = 1; x < static_cast<std::int64_t>(p); ++x) {
    for (std::int64_t y = 1; y < static_cast<std::int64_t>(p); ++y) n += evaluate_mod(f, IntVec{x, y}, p) == 0;
  }
  return n;
}

}  // namespace

TEST(Weights, ConeSectionRays) {
  auto gs = build_polyhedra(igusa::testing::cone_section());
  EXPECT_EQ(t_weight(gs, IntVec{2, 1, 1}), 8);
  EXPECT_EQ(q_weight(gs, IntVec{2, 1, 1}), -3);
  EXPECT_EQ(t_weight(gs, IntVec{1, 1, 1}), 6);
  EXPECT_EQ(q_weight(gs, IntVec{1, 1, 1}), -2);
}

TEST(ComputeS, SingleRays) {
  auto gs = build_polyhedra(igusa::testing::cone_section());
  EXPECT_TRUE(compute_S(make_cone({{2, 1, 1}}), gs, 5).equals(RatFun::geometric_tail(5, -3, 8)));
  for (int k = 2; k <= 4; ++k) {
    auto g = build_polyhedra(igusa::testing::pencil(k));
    EXPECT_TRUE(compute_S(make_cone({{1, 1}}), g, 5).equals(RatFun::geometric_tail(5, k - 2, 2))) << k;
  }
}

TEST(ComputeS, ZeroWeightGeneratorRejected) {
  // direction (0,1) has q_weight = -1 + 1 = 0 and t_weight = 0: the factor 1/(1 - 1) is undefined
  auto gs = build_polyhedra(parse_system({"y", "x + y"}, kXY));
  EXPECT_THROW(compute_S(make_cone({{0, 1}}), gs, 5), DomainError);
}

TEST(ComputeL, CountFactor) {
  PrimeContext ctx(5);
  EXPECT_TRUE(compute_L(igusa::testing::cone_section(), IntVec{3, 1, 1}, ctx)
                  .equals(RatFun::constant(5, mpq_class(16, 25))));
  EXPECT_TRUE(compute_L(igusa::testing::pencil(2), IntVec{1, 1}, ctx).equals(RatFun::constant(5, mpq_class(8, 5))));
  // c_closed contributes t (1 - q^-1) / (1 - q^-1 t)
  auto L = compute_L(TorusCount{0, 2}, 2, 2, 3);
  auto want = RatFun(3, QPoly::monomial(mpq_class(2, 3) * mpq_class(2, 3), 1), {{GeomFactor{-1, 1}, 1}});
  EXPECT_TRUE(L.equals(want));
}

TEST(Zeta, PencilClosedForm) {
  for (std::uint64_t p : {3, 5, 7}) {
    for (int k = 2; k <= 4; ++k) {
      EngineOptions opts;
      opts.require_certificates = false;
      auto rep = zeta_origin(igusa::testing::pencil(k), PrimeContext(p), opts);
      const mpq_class A(torus_zeros(p, k));
      auto want = RatFun::geometric_tail(p, k - 2, 2) * (A * qpow(p, -1));
      EXPECT_TRUE(rep.zeta.equals(want)) << "p=" << p << " k=" << k << ": " << rep.zeta.to_t_string();
    }
  }
}

TEST(Zeta, LineSquaresClosedForm) {
  for (std::uint64_t p : {3, 7, 11}) {
    auto rep = zeta_full(igusa::testing::line_squares(), PrimeContext(p));
    auto want = RatFun::inverse_factor(p, -1, 2) * (1 - qpow(p, -1));
    EXPECT_TRUE(rep.zeta.equals(want)) << p << ": " << rep.zeta.to_t_string();
  }
}

TEST(Zeta, ConeSectionOriginAtFive) {
  auto rep = zeta_origin(igusa::testing::cone_section(), PrimeContext(5));
  EXPECT_EQ(rep.zeta.to_s_string(),
            "(12*5^{-4-6s} + 12*5^{-4-8s} - 24*5^{-7-14s})/((1 - 5^{-3-8s})*(1 - 5^{-2-6s}))");
  std::set<mpq_class> cands;
  for (const auto& c : rep.candidates.lines) cands.insert(c.re);
  EXPECT_EQ(cands, (std::set<mpq_class>{-1, mpq_class(-3, 8), mpq_class(-1, 3)}));
  ASSERT_TRUE(rep.candidates.gamma_f);
  EXPECT_EQ(*rep.candidates.gamma_f, mpq_class(-1, 3));
  for (const auto& pl : rep.poles) {
    EXPECT_TRUE(pl.candidate);
    EXPECT_EQ(pl.line.multiplicity, 1u);
  }
  ASSERT_TRUE(rep.beta_f);
  EXPECT_EQ(*rep.beta_f, mpq_class(-1, 3));
}

TEST(Zeta, ContributionsSumToZeta) {
  auto rep = zeta_full(igusa::testing::cone_section(), PrimeContext(3));
  RatFun sum = rep.L0;
  for (const auto& c : rep.contributions) {
    EXPECT_TRUE(c.product.equals(c.L * c.S));
    sum += c.product;
  }
  EXPECT_TRUE(sum.equals(rep.zeta));
}

TEST(Zeta, TriangulationOrderDoesNotMatter) {
  auto sys = igusa::testing::cone_section();
  PrimeContext ctx(3);
  auto base = zeta_full(sys, ctx);
  EngineOptions opts;
  opts.ray_order = std::vector<std::size_t>{6, 5, 4, 3, 2, 1, 0};
  auto other = zeta_full(sys, ctx, opts);
  EXPECT_TRUE(base.zeta.equals(other.zeta));
}

TEST(Zeta, SeriesMatchesCoefficientOracle) {
  PrimeContext ctx(5);
  auto sys = igusa::testing::line_squares();
  auto tay = zeta_full(sys, ctx).zeta.taylor(3);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(tay[k], coeff_extract_exact(sys, ctx, k)) << k;
}

TEST(Poincare, MatchesCongruenceCounts) {
  PrimeContext ctx(3);
  for (auto sys : {igusa::testing::line_squares(), igusa::testing::cone_section()}) {
    auto P = poincare_series(sys, ctx);
    auto table = congruence_table(sys, ctx, 3);
    EXPECT_EQ(P.taylor(3), table.normalized);
  }
}

TEST(Hypotheses, DegenerateSystemRaises) {
  auto sys = parse_system({"x+2*y", "x^2+x*y+y^2"}, kXY);
  EXPECT_THROW(zeta_full(sys, PrimeContext(3)), HypothesisError);
  EngineOptions opts;
  opts.require_certificates = false;
  auto rep = zeta_full(sys, PrimeContext(3), opts);
  EXPECT_FALSE(rep.hypotheses.nondegenerate);
  EXPECT_FALSE(rep.hypotheses.enforced);
  ASSERT_TRUE(rep.hypotheses.witness);
}

TEST(Hypotheses, NonConvenientRaises) {
  EXPECT_THROW(zeta_full(parse_system({"x+y", "x*y"}, kXY), PrimeContext(5)), HypothesisError);
}

TEST(Hypotheses, PoincareNeedsGoodReduction) {
  // x^2 + y^2 is singular at the origin
  EXPECT_THROW(poincare_series(igusa::testing::pencil(2), PrimeContext(5)), HypothesisError);
}
