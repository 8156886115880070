#include <gtest/gtest.h>

#include <limits>

#include "cellkit/laurent.hpp"

using cellkit::LaurentPoly;

TEST(LaurentPoly, ZeroHasNoTermsAndMinusInfinityDegree) {
  LaurentPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_TRUE(LaurentPoly(0).is_zero());
}

TEST(LaurentPoly, ArithmeticDropsZeros) {
  LaurentPoly a = LaurentPoly::monomial(1) + LaurentPoly::monomial(3);
  LaurentPoly b = LaurentPoly::monomial(3);
  LaurentPoly d = a - b;
  EXPECT_EQ(d, LaurentPoly::monomial(1));
  EXPECT_EQ(d.term_count(), 1u);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(LaurentPoly, ProductAndBar) {
  LaurentPoly q = LaurentPoly::v_plus_v_inverse();
  LaurentPoly sq = q * q;
  EXPECT_EQ(sq, LaurentPoly::from_terms({{-2, 1}, {0, 2}, {2, 1}}));
  EXPECT_TRUE(sq.is_bar_invariant());
  EXPECT_EQ(LaurentPoly::monomial(2, 3).bar(), LaurentPoly::monomial(-2, 3));
  EXPECT_EQ(LaurentPoly::monomial(1).shifted(-3), LaurentPoly::monomial(-2));
}

TEST(LaurentPoly, Formatting) {
  EXPECT_EQ((LaurentPoly::monomial(1) + LaurentPoly::monomial(3)).to_string(), "v + v^3");
  EXPECT_EQ(LaurentPoly::v_plus_v_inverse().to_string(), "v^-1 + v");
  EXPECT_EQ((LaurentPoly(1) - LaurentPoly::monomial(3, 2)).to_string(), "1 - 2v^3");
  EXPECT_EQ(LaurentPoly::monomial(-1, -1).to_string(), "-v^-1");
}

TEST(LaurentPoly, DegreesAndCoefficients) {
  LaurentPoly p = LaurentPoly::from_terms({{4, 2}, {-1, 5}, {4, 1}});
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.min_degree(), -1);
  EXPECT_EQ(p.coefficient(4), 3);
  EXPECT_EQ(p.coefficient(0), 0);
  EXPECT_TRUE(p.has_nonnegative_coefficients());
}

TEST(LaurentPoly, OverflowIsDetected) {
  LaurentPoly big = LaurentPoly::monomial(0, std::numeric_limits<cellkit::Coefficient>::max());
  EXPECT_THROW(big += LaurentPoly(1), std::overflow_error);
  EXPECT_THROW(big *= 2, std::overflow_error);
}
