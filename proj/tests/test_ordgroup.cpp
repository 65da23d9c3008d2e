#include <gtest/gtest.h>

#include <random>

#include "dvf/ordgroup.hpp"

using namespace dvf;

TEST(OrdGroup, LexCompare) {
  EXPECT_GT(GroupElem({1, 0}), GroupElem({0, 1000}));
  EXPECT_EQ(GroupElem({0, 0}), GroupElem({0, 0}));
  EXPECT_LT(GroupElem({2, -3}), GroupElem({2, -2}));
  EXPECT_THROW((void)compare(GroupElem({1}), GroupElem({1, 0})), StructuralError);
}

TEST(OrdGroup, TranslationInvariance) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int i = 0; i < 500; ++i) {
    GroupElem a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
    EXPECT_EQ(compare(a, b), compare(a + c, b + c));
    EXPECT_EQ(compare(a, b) < 0, compare(b, a) > 0);
  }
}

TEST(OrdGroup, ZLess) {
  EXPECT_TRUE(is_z_less(ValueGroupDesc::rationals(1)));
  EXPECT_FALSE(is_z_less(ValueGroupDesc::integers(1)));
  EXPECT_FALSE(is_z_less(ValueGroupDesc::integers(2)));
}

// a = [0;1] in Z x Z: any b with a < 3b < 2a has major coordinate 0 and a
// minor integer m with 1 < 3m < 2, which has no solution.
TEST(OrdGroup, IntegerSandwichFailsByCaseSplit) {
  const GroupElem a{0, 1};
  for (long j = -3; j <= 3; ++j)
    for (long i = -10; i <= 10; ++i) {
      GroupElem b{j, i};
      GroupElem three_b = Rational(3) * b;
      EXPECT_FALSE(a < three_b && three_b < a + a) << to_string(b);
    }
}

TEST(OrdGroup, Coarsen) {
  ConvexSubgroup minor{1};
  EXPECT_EQ(coarsen(GroupElem({3, -7}), minor), GroupElem({3}));
  EXPECT_EQ(coarsen(GroupElem({0, 5}), minor), GroupElem({0}));
  EXPECT_EQ(coarsen(GroupElem({-2, 9}), minor), GroupElem({-2}));
  EXPECT_TRUE(minor.contains(GroupElem({0, 5})));
  EXPECT_FALSE(minor.contains(GroupElem({1, -5})));
}

TEST(OrdGroup, CoarsenIsMonotoneHomomorphism) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  ConvexSubgroup minor{1};
  for (int i = 0; i < 300; ++i) {
    GroupElem a{d(rng), d(rng)}, b{d(rng), d(rng)};
    EXPECT_EQ(coarsen(a + b, minor), coarsen(a, minor) + coarsen(b, minor));
    if (a <= b) EXPECT_LE(coarsen(a, minor), coarsen(b, minor));
  }
}

TEST(OrdGroup, StrictBetween) {
  auto q1 = ValueGroupDesc::rationals(1);
  EXPECT_EQ(strict_between(q1, GroupElem({1}), Rational(1, 3), Rational(2, 3)),
            GroupElem(std::vector<Rational>{Rational(1, 2)}));
  EXPECT_EQ(strict_between(q1, GroupElem({1}), Rational(1, 2), Rational(1)),
            GroupElem(std::vector<Rational>{Rational(3, 4)}));
  EXPECT_EQ(strict_between(q1, GroupElem({4}), Rational(0), Rational(1, 8)),
            GroupElem(std::vector<Rational>{Rational(1, 4)}));
  EXPECT_THROW(strict_between(ValueGroupDesc::integers(1), GroupElem({1}), 0, 1), UnsupportedError);
  EXPECT_THROW(strict_between(q1, GroupElem({-1}), 0, 1), DomainError);
}

TEST(OrdGroup, StrictBetweenMixedGroupProperty) {
  ValueGroupDesc g({CoordKind::Integers, CoordKind::Rationals});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-6, 6);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    GroupElem a{d(rng), d(rng)};
    if (a.sign() <= 0) continue;
    Rational p(std::abs(d(rng)), 7), q = p + Rational(1 + std::abs(d(rng)), 5);
    try {
      GroupElem b = strict_between(g, a, p, q);
      EXPECT_TRUE(g.contains(b));
      EXPECT_LT(p * a, b);
      EXPECT_LT(b, q * a);
      ++checked;
    } catch (const DomainError&) {
      // Only allowed when the interval misses Z in the major coordinate.
      const Rational lo = (p * a)[0], hi = (q * a)[0];
      EXPECT_EQ(lo.get_den() != 1 && hi.get_den() != 1 && hi - lo < 1, true);
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(OrdGroup, TextForm) {
  EXPECT_EQ(to_string(GroupElem({1, -2})), "[1;-2]");
  EXPECT_EQ(to_string(GroupElem(std::vector<Rational>{Rational(3, 2)})), "3/2");
  EXPECT_EQ(parse_group_elem("[1;-2]", 2), GroupElem({1, -2}));
  EXPECT_EQ(parse_group_elem("5", 2), GroupElem({0, 5}));
  EXPECT_EQ(parse_group_elem("-3/6", 1), GroupElem(std::vector<Rational>{Rational(-1, 2)}));
  EXPECT_THROW(parse_group_elem("[1;x]", 2), ParseError);
  EXPECT_THROW(parse_group_elem("[1;2;3]", 2), StructuralError);
  EXPECT_EQ(to_string(ExtGroupElem::infinity()), "inf");
}
