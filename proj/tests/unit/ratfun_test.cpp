#include <gtest/gtest.h>

#include "igusa/error.hpp"
#include "igusa/ratfun.hpp"

using namespace igusa;

namespace {

std::vector<mpq_class> q_list(std::initializer_list<mpq_class> v) { return v; }

}  // namespace

TEST(QPoly, DivmodAndGcd) {
  QPoly a({-1, 0, 1});  // t^2 - 1
  QPoly b({-1, 1});     // t - 1
  auto [quo, rem] = a.divmod(b);
  EXPECT_EQ(quo, QPoly({1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(QPoly::gcd(a, QPoly({1, 1}) * b * b), QPoly({-1, 0, 1}));
  EXPECT_EQ(QPoly({0, 0, 3}).derivative(), QPoly({0, 6}));
  EXPECT_EQ(QPoly({1, 2, 0, 0}).degree(), 1);
}

TEST(RatFun, Identities) {
  const std::uint64_t q = 5;
  auto r = RatFun::geometric_tail(q, -3, 8);
  EXPECT_TRUE((r + RatFun::zero(q)).equals(r));
  EXPECT_TRUE((r * RatFun::constant(q, 1)).equals(r));
  RatFun factor(q, factor_poly(q, {2, 3}));
  EXPECT_TRUE((factor * RatFun::inverse_factor(q, 2, 3)).equals(RatFun::constant(q, 1)));
}

TEST(RatFun, Telescoping) {
  const std::uint64_t q = 7;
  auto inv = RatFun::inverse_factor(q, -1, 1);
  auto sum = inv + inv * RatFun::monomial(q, mpq_class(-1, 7), 1);
  EXPECT_TRUE(sum.equals(RatFun::constant(q, 1)));
  EXPECT_TRUE(sum.denominator().empty());
}

TEST(RatFun, SharedFactorsAdd) {
  const std::uint64_t p = 5;
  mpq_class c = (1 - mpq_class(1, 5)) * (1 - mpq_class(1, 5));
  auto row = RatFun::geometric_tail(p, -3, 8) * RatFun::geometric_tail(p, -2, 6) * c;
  auto sum = row + row + row;
  EXPECT_EQ(sum.denominator().size(), 2u);
  EXPECT_TRUE(sum.equals(row * 3));
  // numerator 3 (1-p^-1)^2 p^-5 t^14
  EXPECT_EQ(sum.numerator(), QPoly::monomial(3 * c * qpow(p, -5), 14));
}

TEST(RatFun, CancellationInProducts) {
  const std::uint64_t p = 5;
  mpq_class a = 1 - mpq_class(1, 5);
  auto r = RatFun::constant(p, a) * RatFun::constant(p, qpow(p, -1) / a) * RatFun::geometric_tail(p, -3, 8);
  EXPECT_TRUE(r.equals(RatFun::geometric_tail(p, -3, 8) * qpow(p, -1)));
}

TEST(RatFun, Taylor) {
  auto a = RatFun::inverse_factor(5, -1, 1) * mpq_class(4, 5);
  EXPECT_EQ(a.taylor(2), q_list({mpq_class(4, 5), mpq_class(4, 25), mpq_class(4, 125)}));
  EXPECT_EQ(RatFun::inverse_factor(3, 2, 1).taylor(2), q_list({1, 9, 81}));
  EXPECT_EQ(RatFun::geometric_tail(3, 0, 2).taylor(5), q_list({0, 0, 1, 0, 1, 0}));
}

TEST(RatFun, PoleLines) {
  auto a = RatFun::inverse_factor(5, -1, 1) * mpq_class(4, 5);
  auto poles = a.poles();
  ASSERT_EQ(poles.size(), 1u);
  EXPECT_EQ(poles[0].re, -1);
  EXPECT_EQ(poles[0].period, 1);
  EXPECT_EQ(poles[0].multiplicity, 1u);

  auto sq = RatFun::inverse_factor(5, -2, 6) * RatFun::inverse_factor(5, -2, 6);
  ASSERT_EQ(sq.poles().size(), 1u);
  EXPECT_EQ(sq.poles()[0].multiplicity, 2u);
  EXPECT_EQ(sq.poles()[0].re, mpq_class(-1, 3));
  EXPECT_EQ(sq.poles()[0].period, 6);
}

TEST(RatFun, CancelledFactorLeavesNoPole) {
  // (1 - q^-1 t) / (1 - q^-2 t^2) = 1 / (1 + q^-1 t): poles on Re(s) = -1 with odd residue class only
  const std::uint64_t q = 3;
  RatFun r(q, factor_poly(q, {-1, 1}), {{{-2, 2}, 1}});
  auto poles = r.poles();
  ASSERT_EQ(poles.size(), 1u);
  EXPECT_EQ(poles[0].re, -1);
  EXPECT_EQ(poles[0].period, 2);
  // and a full cancellation
  RatFun s(q, factor_poly(q, {-2, 2}), {{{-2, 2}, 1}});
  EXPECT_TRUE(s.poles().empty());
}

TEST(RatFun, Rendering) {
  auto z = RatFun::geometric_tail(5, 0, 2) * mpq_class(8, 5);
  EXPECT_EQ(z.to_s_string(), "8*5^{-1-2s}/(1 - 5^{-2s})");
  EXPECT_EQ(to_string(mpq_class(-3, 4)), "-3/4");
}

TEST(RatFun, MixedPrimesRejected) {
  EXPECT_THROW(RatFun::constant(3, 1) + RatFun::constant(5, 1), DomainError);
}
