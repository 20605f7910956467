// Copyright 2026 The ryser-transfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ryser {
namespace {

using testing::Rng;

// x^q against y^q k^p computed in full; the reference for cmp_power.
std::strong_ordering direct(const Integer& x, const Integer& y, const Integer& k, unsigned long p, unsigned long q) {
  Integer lhs = pow(x, q), rhs = pow(y, q) * pow(k, p);
  return to_ordering(cmp(lhs, rhs));
}

TEST(CmpPower, ExactRootIsEqual) {
  EXPECT_EQ(cmp_power(Integer(16), pow(2UL, 24), 1, 6), std::strong_ordering::equal);
}

TEST(CmpPower, JustAboveRootIsGreater) {
  EXPECT_EQ(cmp_power(Integer(17), pow(2UL, 24), 1, 6), std::strong_ordering::greater);
  EXPECT_EQ(cmp_power(Integer(15), pow(2UL, 24), 1, 6), std::strong_ordering::less);
}

TEST(CmpPower, PaperScheduleIdentity) {
  for (unsigned long r : {2UL, 3UL}) {
    const unsigned long q = 4 * r;
    for (unsigned long i = 1; i <= 2; ++i) {
      Integer lower = pow(Integer(9), pow(q, i).get_ui());
      Integer upper = pow(Integer(9), pow(q, i + 1).get_ui());
      EXPECT_EQ(cmp_power(lower, upper, 1, q), std::strong_ordering::equal) << "r=" << r << " i=" << i;
      EXPECT_EQ(cmp_power(lower + 1, upper, 1, q), std::strong_ordering::greater);
      EXPECT_EQ(cmp_power(lower - 1, upper, 1, q), std::strong_ordering::less);
    }
  }
}

TEST(CmpPower, AgreesWithDirectExpansion) {
  Rng rng(11);
  std::uniform_int_distribution<unsigned long> small(0, 400), pq(1, 7);
  for (int trial = 0; trial < 2000; ++trial) {
    Integer x = small(rng), y = small(rng), k = small(rng) + 1;
    unsigned long p = pq(rng) - 1, q = pq(rng);
    // Plant exact ties often: x = y * k^(p/q) when k is a q-th power.
    if (trial % 3 == 0) {
      Integer base = small(rng) % 20 + 1;
      k = pow(base, q);
      x = y * pow(base, p);
    }
    ASSERT_EQ(cmp_power(x, y, k, p, q), direct(x, y, k, p, q))
        << x.get_str() << " vs " << y.get_str() << "*" << k.get_str() << "^(" << p << "/" << q << ")";
  }
}

TEST(CmpPower, LargeOperandsNearTies) {
  // Thousands of bits with a difference of one: the fast path must defer.
  Integer k = pow(Integer(3), 4000);
  Integer root = pow(Integer(3), 500);
  EXPECT_EQ(cmp_power(root, k, 1, 8), std::strong_ordering::equal);
  EXPECT_EQ(cmp_power(root + 1, k, 1, 8), std::strong_ordering::greater);
  EXPECT_EQ(cmp_power(root, k + 1, 1, 8), std::strong_ordering::less);
}

TEST(CmpPower, RejectsBadArguments) {
  EXPECT_THROW(cmp_power(Integer(1), Integer(1), 1, 0), PreconditionError);
  EXPECT_THROW(cmp_power(Integer(1), Integer(0), 1, 1), PreconditionError);
  EXPECT_THROW(cmp_power(Integer(-1), Integer(4), 1, 2), PreconditionError);
}

TEST(Threshold, RationalAgainstRootThreshold) {
  // 3 * 2^24^(1/6) = 48.
  Threshold t(Rational(3), pow(2UL, 24), 1, 6);
  EXPECT_EQ(compare(Rational(48), t), std::strong_ordering::equal);
  EXPECT_EQ(compare(Rational(97, 2), t), std::strong_ordering::greater);
  EXPECT_EQ(compare(Rational(95, 2), t), std::strong_ordering::less);
  EXPECT_EQ(t.str(), "3*16777216^(1/6)");
}

TEST(Threshold, ThresholdAgainstThreshold) {
  Threshold a(Rational(1), pow(2UL, 24), 1, 6);  // 16
  Threshold b(Rational(2), pow(2UL, 24), 1, 8);  // 2 * 8 = 16
  EXPECT_EQ(compare(a, b), std::strong_ordering::equal);
  EXPECT_EQ(compare(Threshold(Rational(15)), a), std::strong_ordering::less);
  EXPECT_EQ(compare(a, Threshold(Rational(17))), std::strong_ordering::less);
}

TEST(Exact, FloorRootAndBitLength) {
  EXPECT_EQ(floor_root(Integer(1000), 3), 10);
  EXPECT_EQ(floor_root(Integer(999), 3), 9);
  EXPECT_EQ(bit_length(Integer(0)), 0u);
  EXPECT_EQ(bit_length(pow(2UL, 100)), 101u);
}

TEST(Exact, ParseRational) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_THROW(parse_rational("1.5"), InvalidInput);
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

}  // namespace
}  // namespace ryser
