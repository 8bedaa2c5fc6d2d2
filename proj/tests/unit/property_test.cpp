#include <gtest/gtest.h>

#include "properties.hpp"

using namespace igusa::props;

TEST(Properties, ParallelepipedCountIsIndex) {
  auto o = parallelepiped_count(200, 1);
  EXPECT_EQ(o.cases, 200u);
  EXPECT_TRUE(o.passed) << o.first_failure;
}

TEST(Properties, FanPartitionsTheOrthant) {
  auto o = fan_partition(1000, 2);
  EXPECT_TRUE(o.passed) << o.first_failure;
}

TEST(Properties, RatFunAgreesWithPlainFractions) {
  auto o = ratfun_reference(500, 3);
  EXPECT_TRUE(o.passed) << o.first_failure;
}

TEST(Properties, ExpSumConjugationSymmetry) {
  auto o = expsum_conjugation(1e-9);
  EXPECT_GT(o.cases, 0u);
  EXPECT_TRUE(o.passed) << o.first_failure;
}
