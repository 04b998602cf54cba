#include <gtest/gtest.h>

#include <random>

#include "enl/errors.hpp"
#include "enl/ordinal.hpp"

using enl::Comparison;
using enl::Ordinal;

TEST(Ordinal, NaturalSumAddsComponentwise) {
  EXPECT_EQ(enl::natural_sum(Ordinal(1, 3), Ordinal(2, 1)), Ordinal(3, 4));
  EXPECT_EQ(enl::natural_sum(Ordinal(0, 5), Ordinal(0, 0)), Ordinal(0, 5));
}

TEST(Ordinal, CompareIsLexicographic) {
  EXPECT_EQ(enl::compare(Ordinal(2, 0), Ordinal(1, 1000000)), Comparison::Greater);
  EXPECT_EQ(enl::compare(Ordinal(0, 7), Ordinal(1, 0)), Comparison::Less);
  EXPECT_EQ(enl::compare(Ordinal(3, 4), Ordinal(3, 4)), Comparison::Equal);
}

TEST(Ordinal, OverflowThrows) {
  Ordinal big(UINT64_MAX, 0);
  EXPECT_THROW(enl::natural_sum(big, Ordinal(1, 0)), enl::OverflowError);
  EXPECT_THROW(enl::natural_sum(Ordinal(0, UINT64_MAX), Ordinal(0, 1)), enl::OverflowError);
}

TEST(Ordinal, TextRoundTrip) {
  for (auto o : {Ordinal(0, 0), Ordinal(0, 5), Ordinal(1, 0), Ordinal(4, 9)})
    EXPECT_EQ(Ordinal::parse(o.to_string()), o) << o;
  EXPECT_EQ(Ordinal::parse("w"), Ordinal(1, 0));
  EXPECT_EQ(Ordinal(1, 3).to_string(), "w*1+3");
  EXPECT_EQ(Ordinal(0, 5).to_string(), "5");
  EXPECT_THROW(Ordinal::parse("w*"), enl::ParseError);
  EXPECT_THROW(Ordinal::parse("x"), enl::ParseError);
  EXPECT_THROW(Ordinal::parse(""), enl::ParseError);
}

TEST(Ordinal, SumPropertiesRandomized) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> d(0, 1000);
  for (int i = 0; i < 2000; ++i) {
    Ordinal a(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng));
    EXPECT_EQ(enl::natural_sum(a, b), enl::natural_sum(b, a));
    EXPECT_EQ(enl::natural_sum(enl::natural_sum(a, b), c), enl::natural_sum(a, enl::natural_sum(b, c)));
    EXPECT_EQ(enl::natural_sum(a, Ordinal()), a);
    // strictly monotone in each argument
    if (a < b) EXPECT_LT(enl::natural_sum(a, c), enl::natural_sum(b, c));
    // comparison is a total order consistent with <=>
    auto cmp = enl::compare(a, b);
    EXPECT_EQ(cmp == Comparison::Less, a < b);
    EXPECT_EQ(cmp == Comparison::Equal, a == b);
  }
}
