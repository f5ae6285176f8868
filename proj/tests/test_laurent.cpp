#include <gtest/gtest.h>

#include "ulink/laurent.hpp"

using namespace ulink;

TEST(Laurent, ParseAndRender) {
    auto p = LaurentPoly::parse("2*x^2 + 2*x - 3", "x");
    EXPECT_EQ(p.to_string(), "2*x^2 + 2*x - 3");
    EXPECT_EQ(LaurentPoly::parse("-x^(-3) + x^-1", "x").to_string(), "x^-1 - x^-3");
    EXPECT_EQ(LaurentPoly::parse("0", "x").to_string(), "0");
    EXPECT_THROW(LaurentPoly::parse("2*y", "x"), std::invalid_argument);
    EXPECT_THROW(LaurentPoly::parse("", "x"), std::invalid_argument);
}

TEST(Laurent, Arithmetic) {
    auto x = LaurentPoly::monomial(1, 1, "x");
    auto one = LaurentPoly::constant(1, "x");
    auto p = (x + one) * (x - one);
    EXPECT_EQ(p.to_string(), "x^2 - 1");
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(x.pow(-2).to_string(), "x^-2");
    EXPECT_EQ(LaurentPoly::monomial(-1, 3, "x").pow(-1).to_string(), "-x^-3");
    EXPECT_THROW((x + one).pow(-1), std::domain_error);
    EXPECT_EQ((x + one).pow(3).to_string(), "x^3 + 3*x^2 + 3*x + 1");
}

TEST(Laurent, BigCoefficients) {
    auto p = LaurentPoly::constant(2, "x").pow(100);
    EXPECT_EQ(p.coeff(0).get_str(), "1267650600228229401496703205376");
}

TEST(Laurent, Quarters) {
    // q = t^(-1/4)
    auto q = LaurentPoly::monomial(1, 1, "q");
    EXPECT_EQ(q.to_string_quarters(), "t^(-1/4)");
    EXPECT_EQ(q.pow(-2).to_string_quarters(), "t^(1/2)");
    EXPECT_EQ((q.pow(-16) * LaurentPoly::constant(-1, "q") + q.pow(-12) + q.pow(-4)).to_string_quarters(),
              "-t^4 + t^3 + t");
}

TEST(Laurent, VariableMismatch) {
    auto x = LaurentPoly::monomial(1, 1, "x");
    auto y = LaurentPoly::monomial(1, 1, "y");
    EXPECT_THROW(x + y, std::invalid_argument);
    EXPECT_EQ((x * LaurentPoly::constant(3, "y")).to_string(), "3*x");
}
