#include "trifree/rational.hpp"

#include <gtest/gtest.h>

using trifree::Rat;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rat::parse("3"), Rat(3));
  EXPECT_EQ(Rat::parse("+3"), Rat(3));
  EXPECT_EQ(Rat::parse("-6/8"), Rat(-3, 4));
  EXPECT_EQ(Rat::parse("123456789012345678901234567890/3").str(), "41152263004115226300411522630");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rat::parse(""), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1/2/3"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("0.125"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rat(1, 0), std::domain_error);
}

TEST(Rational, CanonicalStringRoundTrips) {
  for (const Rat& r : {Rat(0), Rat(7), Rat(-3, 9), Rat(1, 3) * Rat(1, 7) + Rat(5, 2)}) {
    EXPECT_EQ(Rat::parse(r.str()), r);
  }
  EXPECT_EQ(Rat(-3, 9).str(), "-1/3");
  EXPECT_EQ(Rat(4, 2).str(), "2");
}

TEST(Rational, ArithmeticIsExact) {
  // 1/3 + 1/6 = 1/2, (2/3)^-1 = 3/2.
  EXPECT_EQ(Rat(1, 3) + Rat(1, 6), Rat(1, 2));
  EXPECT_EQ(Rat(1) / Rat(2, 3), Rat(3, 2));
  EXPECT_EQ(-Rat(2, 5) * Rat(5, 2), Rat(-1));
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
  Rat tenth(1, 10);
  Rat sum;
  for (int i = 0; i < 10; ++i) sum += tenth;
  EXPECT_EQ(sum, Rat(1));
}

TEST(Rational, OrderingAndHelpers) {
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_GT(Rat(-1, 3), Rat(-1, 2));
  EXPECT_EQ(trifree::abs(Rat(-5, 7)), Rat(5, 7));
  EXPECT_EQ(trifree::midpoint(Rat(1, 4), Rat(3, 4)), Rat(1, 2));
  EXPECT_EQ(Rat(-2, 3).sign(), -1);
  EXPECT_TRUE(Rat(6, 3).is_integer());
  EXPECT_DOUBLE_EQ(Rat(3, 8).to_double(), 0.375);
}
