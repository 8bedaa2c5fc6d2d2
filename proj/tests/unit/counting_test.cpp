#include <gtest/gtest.h>

#include "igusa/counting.hpp"
#include "igusa/error.hpp"
#include "systems.hpp"

using namespace igusa;
using igusa::testing::kXY;
using igusa::testing::kXYZ;

TEST(TorusCount, ConeSectionDirections) {
  PrimeContext ctx(5);
  auto sys = igusa::testing::cone_section();
  EXPECT_EQ(torus_count(sys, IntVec{3, 1, 1}, ctx), (TorusCount{16, 0}));
  EXPECT_EQ(torus_count(sys, IntVec{1, 1, 1}, ctx), (TorusCount{12, 0}));
}

TEST(TorusCount, PencilDiagonal) {
  PrimeContext ctx(5);
  EXPECT_EQ(torus_count(igusa::testing::pencil(2), IntVec{1, 1}, ctx), (TorusCount{8, 0}));
  // -1 is not a square mod 3
  EXPECT_EQ(torus_count(igusa::testing::pencil(2), IntVec{1, 1}, PrimeContext(3)), (TorusCount{0, 0}));
}

TEST(TorusCount, RespectsBudget) {
  PrimeContext ctx(101);
  EXPECT_THROW(torus_count(igusa::testing::cone_section(), IntVec{1, 1, 1}, ctx, 1e3), BudgetExceeded);
}

TEST(Jacobian, Rank) {
  PrimeContext ctx(5);
  EXPECT_EQ(jacobian_rank(parse_system({"x+y-z"}, kXYZ), IntVec{3, 1, 4}, ctx), 1u);
  EXPECT_EQ(jacobian_rank(parse_system({"x^2", "y^2"}, kXY), IntVec{1, 1}, ctx), 2u);
  EXPECT_EQ(jacobian_rank(parse_system({"x^2", "y^2"}, kXY), IntVec{0, 1}, ctx), 1u);
}

TEST(FaceSystem, Componentwise) {
  auto fs = face_system(igusa::testing::cone_section(), IntVec{2, 1, 1});
  EXPECT_EQ(fs[0], parse_polynomial("y-z", kXYZ));
  EXPECT_EQ(fs[1], parse_polynomial("y^8+z^8+x^2*y^2*z^2", kXYZ));
}

TEST(Nondegeneracy, ConeSectionCertifies) {
  for (std::uint64_t p : {5, 7}) {
    auto c = check_nondegenerate(igusa::testing::cone_section(), PrimeContext(p), Scope::Global);
    EXPECT_TRUE(c.ok) << p;
    EXPECT_FALSE(c.witness);
    EXPECT_GT(c.directions_checked, 0u);
  }
}

TEST(Nondegeneracy, PencilAtOrigin) {
  EXPECT_TRUE(check_nondegenerate(igusa::testing::pencil(2), PrimeContext(5), Scope::AtOrigin).ok);
}

TEST(Nondegeneracy, CollapsedCurveHasWitness) {
  auto sys = parse_system({igusa::testing::kCollapsedCurve}, kXY);
  bool found = false;
  for (std::uint64_t p = 3; p <= 41 && !found; p += 2) {
    if (!is_prime(p)) continue;
    PrimeContext ctx(p);
    auto c = check_nondegenerate(sys, ctx, Scope::AtOrigin);
    if (!c.ok) {
      ASSERT_TRUE(c.witness);
      EXPECT_TRUE(verify_witness(sys, *c.witness, ctx));
      EXPECT_EQ(c.witness->direction, (IntVec{1, 1}));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Nondegeneracy, ForgedWitnessIsRejected) {
  auto sys = igusa::testing::cone_section();
  PrimeContext ctx(5);
  DegeneracyWitness w{{1, 1, 1}, {1, 1, 2}, 0};
  EXPECT_FALSE(verify_witness(sys, w, ctx));
}

TEST(GoodReduction, Examples) {
  EXPECT_TRUE(check_good_reduction(parse_system({"x+y-z"}, kXYZ), PrimeContext(5)));
  EXPECT_FALSE(check_good_reduction(parse_system({"x^2+y^2-z^2"}, kXYZ), PrimeContext(5)));
  EXPECT_TRUE(check_good_reduction(parse_system({"x+y"}, kXY), PrimeContext(3)));
  EXPECT_EQ(to_string(Scope::AtOrigin), "at_origin");
  EXPECT_EQ(to_string(Scope::Global), "global");
}
