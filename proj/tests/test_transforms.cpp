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

#include "cgprob/counts.hpp"
#include "cgprob/errors.hpp"
#include "cgprob/transforms.hpp"
#include "support.hpp"

using namespace cgprob;
using cgprob::testing::ints;
using cgprob::testing::random_unit_series;

namespace {

/// Plain exponents from the logarithm: log f = -sum_i b_i sum_k x^{ik}/k,
/// so n b_n = -sum_{m | n} mu(n/m) m L_m.
std::vector<Rational> exponents_via_log(const RationalSeries& f)
{
    const int n = f.order();
    const LaurentSeries l = series_log(LaurentSeries::from_coefficients(f.coefficients(), n));
    std::vector<Rational> b;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int m : divisors(k)) acc += mobius(k / m) * m * l.coefficient(m);
        b.push_back(-acc / k);
    }
    return b;
}

RationalSeries from_ints(std::initializer_list<long> v, int order)
{
    return RationalSeries::from_coefficients(ints(v), order);
}

TEST(ProductForm, GeometricSeries)
{
    const auto pf = to_product_form(from_ints({1, 1, 1, 1, 1, 1, 1}, 6));
    EXPECT_EQ(pf.exponents, ints({-1, 0, 0, 0, 0, 0}));
}

TEST(ProductForm, OnePlusX)
{
    const auto pf = to_product_form(from_ints({1, 1}, 6));
    EXPECT_EQ(pf.exponents, ints({-1, 1, 0, 0, 0, 0}));
}

TEST(ProductForm, RejectsNonUnit)
{
    EXPECT_THROW(to_product_form(from_ints({2, 1}, 3)), std::invalid_argument);
    EXPECT_THROW(to_pm_product_form(from_ints({0}, 3)), std::invalid_argument);
}

TEST(ProductForm, RoundTripAndLogOracle)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalSeries f = random_unit_series(rng, 15, 9);
        const ProductForm pf = to_product_form(f);
        EXPECT_TRUE(pf.is_integral());
        EXPECT_EQ(from_product_form(pf), f);
        EXPECT_EQ(pf.exponents, exponents_via_log(f));
    }
}

TEST(ProductForm, IntegralityTransfer)
{
    RationalSeries f = from_ints({1, 2, -1, 0, 4}, 6);
    EXPECT_TRUE(to_product_form(f).is_integral());
    f[3] = Rational(1, 2);
    const ProductForm pf = to_product_form(f);
    EXPECT_FALSE(pf.is_integral());
    EXPECT_EQ(from_product_form(pf), f);
}

TEST(PmProductForm, Examples)
{
    EXPECT_EQ(to_pm_product_form(from_ints({1}, 5)).exponents, ints({0, 0, 0, 0, 0}));
    const auto pf = to_pm_product_form(from_ints({1, -2}, 3));
    EXPECT_EQ(pf.b(1), 1);
    EXPECT_EQ(pf.b(2), 1);
    EXPECT_EQ(pf.b(3), 1);
    // Partial product (1-x)/(1+x) (1-x^2)/(1+x^2) has x^3 coefficient +2.
    ProductForm partial{FormKind::PlusMinus, 3, ints({1, 1, 0})};
    EXPECT_EQ(from_product_form(partial)[3], 2);
}

TEST(PmProductForm, OddCoefficientNamesIndex)
{
    try {
        to_pm_product_form(from_ints({1, 2, 4, 3}, 5));
        FAIL() << "expected parity_error";
    } catch (const parity_error& e) {
        EXPECT_EQ(e.index(), 3);
    }
}

TEST(PmProductForm, RoundTripEven)
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalSeries f = random_unit_series(rng, 15, 6, 2);
        const ProductForm pf = to_pm_product_form(f);
        EXPECT_TRUE(pf.is_integral());
        EXPECT_EQ(from_product_form(pf), f);
    }
}

TEST(Transforms, EvenIntegersLemma)
{
    // f/g has even nonconstant coefficients iff f - g does.
    std::mt19937 rng(5);
    int even_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        RationalSeries f = random_unit_series(rng, 10, 3);
        RationalSeries g = random_unit_series(rng, 10, 3);
        if (trial % 2 == 0) {
            for (int i = 1; i <= 10; ++i) {
                if (!is_even_integer(f[i] - g[i])) g[i] += 1;
            }
        }
        const RationalSeries quotient = f * g.inverse();
        bool quotient_even = true, difference_even = true;
        for (int i = 1; i <= 10; ++i) {
            quotient_even = quotient_even && is_even_integer(quotient[i]);
            difference_even = difference_even && is_even_integer(f[i] - g[i]);
        }
        EXPECT_EQ(quotient_even, difference_even);
        even_cases += difference_even;
    }
    EXPECT_GE(even_cases, 100);
}

BiSeries random_biseries(std::mt19937& rng, int D, int n, int scale, bool (*in_support)(int, int))
{
    std::uniform_int_distribution<int> dist(-4, 4);
    BiSeries f = BiSeries::one(D, n);
    for (int i = 1; i <= D; ++i) {
        std::vector<Rational> c(n + 1);
        for (int j = 1; j <= n; ++j) {
            if (in_support(i, j)) c[j] = scale * dist(rng);
        }
        f.set(i, LaurentSeries::from_coefficients(c, n));
    }
    return f;
}

bool everywhere(int, int) { return true; }
bool steep(int i, int j) { return j >= 2 * i; }

TEST(BiProductForm, Trivial)
{
    EXPECT_TRUE(to_biproduct_form(BiSeries::one(3, 4)).exponents.empty());
    BiSeries f = BiSeries::one(3, 4);
    f.set(1, LaurentSeries::monomial(1, -1, 4));
    const auto pf = to_biproduct_form(f);
    EXPECT_EQ(pf.exponents.size(), 1u);
    EXPECT_EQ(pf.b(1, 1), 1);
}

TEST(BiProductForm, RoundTrips)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const BiSeries f = random_biseries(rng, 4, 6, 1, everywhere);
        const auto pf = to_biproduct_form(f);
        EXPECT_TRUE(pf.is_integral());
        EXPECT_EQ(from_biproduct_form(pf), f);
        const BiSeries g = random_biseries(rng, 4, 6, 2, everywhere);
        const auto pm = to_pm_biproduct_form(g);
        EXPECT_TRUE(pm.is_integral());
        EXPECT_EQ(from_biproduct_form(pm), g);
    }
}

TEST(BiProductForm, SupportStaysInClosedSet)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const BiSeries f = random_biseries(rng, 6, 12, 1, steep);
        const auto pf = to_biproduct_form(f);
        std::vector<std::pair<int, int>> support;
        for (const auto& [ij, b] : pf.exponents) {
            EXPECT_TRUE(steep(ij.first, ij.second)) << ij.first << "," << ij.second;
            support.push_back(ij);
        }
        EXPECT_EQ(from_biproduct_form(pf), f);
    }
    EXPECT_TRUE(support_closed_under_addition({{1, 2}, {2, 4}, {3, 6}}, 3, 6));
    EXPECT_FALSE(support_closed_under_addition({{1, 2}}, 3, 6));
}

TEST(BiProductForm, RejectsBadInput)
{
    BiSeries f = BiSeries::one(2, 3);
    f.set(1, LaurentSeries::one(3)); // u^1 q^0 term
    EXPECT_THROW(to_biproduct_form(f), std::invalid_argument);
    BiSeries g = BiSeries::one(2, 3);
    g.set(1, LaurentSeries::monomial(2, 3, 3));
    EXPECT_THROW(to_pm_biproduct_form(g), parity_error);
}

TEST(Identities, FirstCoefficientOfA)
{
    const auto [lhs, rhs] = identity_sides('a', 3, CharParity::Odd);
    const QPolynomial q = QPolynomial::q();
    EXPECT_EQ(lhs[1], QPolynomial(1) - q);
    // (1-qx)/(1-x) = 1 + (1-q)(x + x^2 + ...)
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(rhs[k], QPolynomial(1) - q);
}

TEST(Identities, AllHoldToOrder15)
{
    for (char w : std::string("abcdef")) {
        for (CharParity p : {CharParity::Even, CharParity::Odd}) {
            EXPECT_TRUE(verify_identity(w, 15, p)) << w << " " << to_string(p);
        }
    }
    EXPECT_THROW(verify_identity('g', 5), std::invalid_argument);
}

TEST(Identities, DetectsWrongParity)
{
    // (d) depends on e(q): swapping the parity of the counts breaks it.
    const auto [lhs, rhs] = identity_sides('d', 6, CharParity::Odd);
    const auto [lhs_even, rhs_even] = identity_sides('d', 6, CharParity::Even);
    EXPECT_FALSE(lhs == rhs_even);
    EXPECT_FALSE(lhs_even == rhs);
}

} // namespace
