#include "relaxmatch/rational.hpp"

#include <gtest/gtest.h>

#include "relaxmatch/errors.hpp"

namespace relaxmatch {
namespace {

TEST(RationalParse, DecimalStringsAreExact) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("2.50"), Rational(5, 2));
  // 0.1 has no finite binary expansion; exactness means 1/10, not a double.
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("123456789012345678901.5") * 2,
            Rational(BigInt("246913578024691357803")));
}

TEST(RationalParse, FractionStrings) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
}

TEST(RationalParse, RejectsGarbage) {
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1.2.3"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1e3"), ParseError);
  EXPECT_THROW(parse_rational("5 "), ParseError);
}

TEST(RationalFormat, DecimalWhenDenominatorAllows) {
  EXPECT_EQ(format_rational(Rational(3)), "3");
  EXPECT_EQ(format_rational(Rational(-3)), "-3");
  EXPECT_EQ(format_rational(Rational(1, 2)), "0.5");
  EXPECT_EQ(format_rational(Rational(-1, 4)), "-0.25");
  EXPECT_EQ(format_rational(Rational(1, 10)), "0.1");
  EXPECT_EQ(format_rational(Rational(7, 20)), "0.35");
}

TEST(RationalFormat, FractionWhenDenominatorDoesNot) {
  EXPECT_EQ(format_rational(Rational(1, 3)), "1/3");
  EXPECT_EQ(format_rational(Rational(-5, 6)), "-5/6");
}

TEST(RationalFormat, RoundTripsThroughParse) {
  for (int num = -20; num <= 20; ++num)
    for (int den = 1; den <= 12; ++den) {
      Rational value(num, den);
      EXPECT_EQ(parse_rational(format_rational(value)), value);
    }
}

TEST(RationalFormat, FixedDigitsRoundHalfAwayFromZero) {
  EXPECT_EQ(format_fixed(Rational(1, 3), 6), "0.333333");
  EXPECT_EQ(format_fixed(Rational(2, 3), 6), "0.666667");
  EXPECT_EQ(format_fixed(Rational(1, 2), 0), "1");
  EXPECT_EQ(format_fixed(Rational(-1, 2), 0), "-1");
  EXPECT_EQ(format_fixed(Rational(5), 2), "5.00");
  EXPECT_EQ(format_fixed(Rational(-7, 8), 2), "-0.88");
}

TEST(BoundParse, InfinityAndValues) {
  EXPECT_FALSE(parse_bound("inf").has_value());
  EXPECT_EQ(parse_bound("3/2"), Bound(Rational(3, 2)));
  EXPECT_THROW(parse_bound("-1"), ParseError);
  EXPECT_EQ(format_bound(std::nullopt), "inf");
  EXPECT_EQ(format_bound(Rational(5, 4)), "1.25");
  EXPECT_TRUE(within_bound(Rational(7), std::nullopt));
  EXPECT_TRUE(within_bound(Rational(2), Rational(2)));
  EXPECT_FALSE(within_bound(Rational(2), Rational(199, 100)));
}

}  // namespace
}  // namespace relaxmatch
