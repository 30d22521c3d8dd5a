/*
   Copyright 2026 The cgprob Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "cgprob/biseries.hpp"
#include "cgprob/errors.hpp"
#include "cgprob/laurent_series.hpp"
#include "cgprob/power_series.hpp"
#include "cgprob/qpolynomial.hpp"
#include "cgprob/rational.hpp"
#include "support.hpp"

using namespace cgprob;
using cgprob::testing::ints;
using cgprob::testing::series;

namespace {

const QPolynomial q = QPolynomial::q();

TEST(Rational, ParseCanonicalizes)
{
    EXPECT_EQ(parse_rational("3/9"), Rational(1, 3));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_EQ(to_string(Rational(-5, 10)), "-1/2");
}

TEST(Rational, CeilAndParity)
{
    EXPECT_EQ(ceil_integer(Rational(5, 2)), 3);
    EXPECT_EQ(ceil_integer(Rational(-5, 2)), -2);
    EXPECT_EQ(ceil_integer(Rational(4)), 4);
    EXPECT_TRUE(is_even_integer(Rational(-6)));
    EXPECT_FALSE(is_even_integer(Rational(3)));
    EXPECT_FALSE(is_even_integer(Rational(1, 2)));
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(binomial(2, 5), 0);
}

TEST(QPolynomial, Arithmetic)
{
    const QPolynomial p = (q - 1) * (q + 1);
    EXPECT_EQ(p, q.pow(2) - 1);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(QPolynomial().degree(), -1);
    EXPECT_EQ(p.evaluate(3), 8);
    EXPECT_EQ(p.substitute_power(2), q.pow(4) - 1);
    EXPECT_EQ((q - 1).negate_variable(), -q - 1);
    EXPECT_TRUE((q * Rational(1, 2)).has_integer_coefficients() == false);
    EXPECT_EQ((q - q).is_zero(), true);
}

TEST(QPolynomial, GeneralizedBinomial)
{
    const QPolynomial b = QPolynomial::binomial(q, 2);
    for (long v = 0; v < 8; ++v) {
        EXPECT_EQ(b.evaluate(v), Rational(binomial(v, 2)));
    }
    EXPECT_EQ(QPolynomial::binomial(q, 0), QPolynomial(1));
}

TEST(LaurentSeries, ReciprocalOfQMinusOne)
{
    // 1/(q-1) = x/(1-x)
    const LaurentSeries r = series_reciprocal(q - 1, 6);
    EXPECT_EQ(r.coefficients(), ints({0, 1, 1, 1, 1, 1, 1}));
    EXPECT_TRUE(series_reciprocal(q.pow(5), 3).is_zero());
    EXPECT_EQ(series_reciprocal(q.pow(2) - 1, 6).coefficients(), ints({0, 0, 1, 0, 1, 0, 1}));
}

TEST(LaurentSeries, PrincipalPartAndOrders)
{
    const LaurentSeries p = LaurentSeries::from_polynomial(q - 1, 4);
    EXPECT_TRUE(p.has_principal_part());
    EXPECT_EQ(p.valuation(), -1);
    EXPECT_THROW(p.coefficients(), std::domain_error);
    const LaurentSeries inv = series_inverse(p);
    EXPECT_EQ(inv.order(), 6);
    EXPECT_EQ(inv.coefficients(), ints({0, 1, 1, 1, 1, 1, 1}));
    // Product order = min(na + vb, nb + va).
    const LaurentSeries prod = p * inv;
    EXPECT_EQ(prod.order(), 5);
    EXPECT_EQ(prod, LaurentSeries::one(5));
    EXPECT_THROW(LaurentSeries::one(3).coefficient(4), std::out_of_range);
}

TEST(LaurentSeries, TimesPolynomialLosesDegree)
{
    const LaurentSeries s = series({1, 1, 1, 1, 1}, 4);
    const LaurentSeries t = s * (q - 1);
    EXPECT_EQ(t.order(), 3);
    // (q-1)/(1-x) = q (1-x)/(1-x) = q
    EXPECT_EQ(t.coefficient(-1), 1);
    for (int e = 0; e <= 3; ++e) EXPECT_EQ(t.coefficient(e), 0);
}

TEST(LaurentSeries, SubstitutionsAndEvaluate)
{
    const LaurentSeries s = series({1, 2, 3}, 2);
    const LaurentSeries s2 = s.substitute_power(2);
    EXPECT_EQ(s2.order(), 5);
    EXPECT_EQ(s2.coefficients(), ints({1, 0, 2, 0, 3, 0}));
    EXPECT_EQ(s.negate_variable().coefficients(), ints({1, -2, 3}));
    EXPECT_EQ(s.evaluate(Rational(1, 2)), Rational(1) + 1 + Rational(3, 4));
    EXPECT_THROW(s.truncated(3), std::invalid_argument);
    EXPECT_EQ(s.shifted(2).coefficients(), ints({0, 0, 1, 2, 3}));
}

TEST(LaurentSeries, LogExpRoundTrip)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalSeries r = cgprob::testing::random_unit_series(rng, 10, 5);
        const LaurentSeries a = LaurentSeries::from_coefficients(r.coefficients(), 10);
        EXPECT_EQ(series_exp(series_log(a)), a);
    }
}

TEST(LaurentSeries, PowPolyMatchesRepeatedProduct)
{
    const LaurentSeries a = series({1, 0, 3, -1, 2, 0, 5}, 6);
    LaurentSeries cube = a * a * a;
    EXPECT_EQ(series_pow_poly(a, QPolynomial(3)), cube);
    // a^q * a^-q = 1 with order loss of deg q.
    const LaurentSeries b = series({1, 0, 1, 1, 0, 0, 0, 2}, 7);
    const LaurentSeries up = series_pow_poly(b, q);
    const LaurentSeries down = series_pow_poly(b, -q);
    EXPECT_EQ(up.order(), 6);
    EXPECT_EQ(up * down, LaurentSeries::one(6));
}

TEST(LaurentSeries, PowPolyValuationGuard)
{
    const LaurentSeries a = series({1, 1}, 5);
    EXPECT_THROW(series_pow_poly(a, q), valuation_error);
    try {
        series_pow_poly(a, q * q);
    } catch (const valuation_error& e) {
        EXPECT_EQ(e.offending_degree(), 2);
    }
    EXPECT_THROW(series_exp(series({1}, 3)), valuation_error);
    EXPECT_THROW(series_log(series({2, 1}, 3)), std::invalid_argument);
}

TEST(LaurentSeries, PowPolyWithPolynomialExponent)
{
    // (1 - x^2)^{q} expanded by the binomial series has coefficient of x^2
    // equal to -q, i.e. -x^{-1} x^2 = -x.
    const LaurentSeries a = series({1, 0, -1, 0, 0, 0, 0}, 6);
    const LaurentSeries r = series_pow_poly(a, q);
    EXPECT_EQ(r.order(), 5);
    EXPECT_EQ(r.coefficient(1), -1);
    // x^4 term: binom(q,2) = (q^2 - q)/2 -> (x^2 - x^3)/2.
    EXPECT_EQ(r.coefficient(2), Rational(1, 2));
    // x^3 collects -q^2/2 x^4 and -q^3/6 x^6.
    EXPECT_EQ(r.coefficient(3), Rational(-2, 3));
}

TEST(BiSeries, InverseLogExp)
{
    BiSeries a = BiSeries::one(3, 5);
    a.set(1, series({0, 1, 2}, 5));
    a.set(2, series({1, 0, 0, 3}, 5));
    a.set(3, series({0, 0, -1}, 5));
    EXPECT_EQ(a * biseries_inverse(a), BiSeries::one(3, 5));
    EXPECT_EQ(biseries_exp(biseries_log(a)), a);
    EXPECT_EQ(biseries_pow_poly(a, QPolynomial(2)), a * a);
}

TEST(BiSeries, Substitutions)
{
    BiSeries a = BiSeries::one(4, 3);
    a.set(1, series({0, 1}, 3));
    const BiSeries b = a.substitute_u_power(2);
    EXPECT_EQ(b[2].coefficient(1), 1);
    EXPECT_TRUE(b[1].is_zero());
    EXPECT_EQ(a.negate_u()[1].coefficient(1), -1);
    EXPECT_EQ(a.negate_q()[1].coefficient(1), -1);
    EXPECT_EQ(a.substitute_q_power(2)[1].coefficient(2), 1);
}

TEST(BiSeries, SetNarrowsSharedOrder)
{
    BiSeries a = BiSeries::one(2, 6);
    a.set(1, series({0, 1}, 4));
    EXPECT_EQ(a.order(), 4);
    EXPECT_EQ(a[0].order(), 4);
}

TEST(PowerSeries, InverseAndRationalPower)
{
    const RationalSeries one_minus_x = RationalSeries::from_coefficients(ints({1, -1}), 8);
    const RationalSeries geo = one_minus_x.inverse();
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(geo[k], 1);
    const RationalSeries root = binomial_power(1, -1, Rational(1, 2), 8);
    EXPECT_EQ(root * root, one_minus_x);
    EXPECT_THROW(RationalSeries::from_coefficients(ints({2, 1}), 3).inverse(), std::domain_error);
}

TEST(PowerSeries, PolynomialCoefficients)
{
    const PolySeries s = PolySeries::from_coefficients({QPolynomial(1), -q}, 5);
    const PolySeries inv = s.inverse();
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(inv[k], q.pow(k));
}

} // namespace
