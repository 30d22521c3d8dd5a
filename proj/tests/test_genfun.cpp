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

#include "cgprob/genfun.hpp"
#include "cgprob/power_series.hpp"
#include "support.hpp"

using namespace cgprob;
using cgprob::testing::ints;

namespace {

std::vector<Rational> limit_coeffs(GroupKind g, const LambdaSpec& s, int n, CharParity p = CharParity::Odd)
{
    return limit_prob(g, s, n, p).coefficients();
}

TEST(Genfun, GoldenLimits)
{
    EXPECT_EQ(limit_coeffs(GroupKind::GL, LambdaSpec::separable(), 9), ints({1, -1, 0, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(limit_coeffs(GroupKind::U, LambdaSpec::separable(), 9), ints({1, -1, 0, -2, 4, -6, 14, -28, 52, -106}));
    EXPECT_EQ(limit_coeffs(GroupKind::GL, LambdaSpec::cyclic(), 9), ints({1, 0, 0, -1, 0, -1, 1, 0, 1, -1}));
    EXPECT_EQ(limit_coeffs(GroupKind::U, LambdaSpec::cyclic(), 9), ints({1, 0, 0, -1, 0, -1, 1, -2, 3, -5}));
    EXPECT_EQ(limit_coeffs(GroupKind::GL, LambdaSpec::semisimple(), 9), ints({1, -1, 0, 1, -2, 2, -1, -1, 3, -4}));
    EXPECT_EQ(limit_coeffs(GroupKind::U, LambdaSpec::semisimple(), 9), ints({1, -1, 0, -1, 2, -2, 5, -9, 11, -20}));
}

TEST(Genfun, CyclicGlClosedForm)
{
    // (1 - x^5) / (1 + x^3)
    const int n = 20;
    const RationalSeries num = RationalSeries::from_coefficients(ints({1, 0, 0, 0, 0, -1}), n);
    const RationalSeries den = RationalSeries::from_coefficients(ints({1, 0, 0, 1}), n);
    EXPECT_EQ(limit_coeffs(GroupKind::GL, LambdaSpec::cyclic(), n), (num * den.inverse()).coefficients());
}

TEST(Genfun, AllTypeIsCertainInGlAndU)
{
    for (GroupKind g : {GroupKind::GL, GroupKind::U}) {
        const BiSeries ci = cycle_index_series(g, LambdaSpec::all(), 5, 10);
        for (int d = 0; d <= 5; ++d) EXPECT_EQ(ci[d], LaurentSeries::one(10)) << to_string(g) << d;
        EXPECT_EQ(limit_prob(g, LambdaSpec::all(), 10).series, LaurentSeries::one(10));
    }
}

TEST(Genfun, FiniteDimensionOne)
{
    EXPECT_EQ(finite_prob(GroupKind::GL, 1, LambdaSpec::separable(), 4).coefficients(), ints({1, 0, 0, 0, 0}));
    EXPECT_EQ(finite_prob_exact(GroupKind::Sp, 1, LambdaSpec::separable(), 2), Rational(1, 3));
    EXPECT_EQ(finite_prob_exact(GroupKind::Sp, 1, LambdaSpec::separable(), 3), Rational(1, 4));
}

TEST(Genfun, OrthogonalDimensionTwoFromGroupStructure)
{
    // O+(2,q) is dihedral of order 2(q-1): q-1 rotations diag(a, 1/a) and
    // q-1 reflections with eigenvalues 1, -1. O-(2,q) is dihedral of order
    // 2(q+1) with rotations of norm-one eigenvalues. All-type excludes
    // eigenvalues +-1.
    for (long qv : {3, 4, 5, 7, 8, 9, 11, 16}) {
        const Integer q0 = qv;
        const int e = e_value(parity_of(q0));
        EXPECT_EQ(finite_prob_exact(GroupKind::OPlus, 1, LambdaSpec::all(), q0), Rational(qv - 1 - e, 2 * (qv - 1)));
        EXPECT_EQ(finite_prob_exact(GroupKind::OMinus, 1, LambdaSpec::all(), q0), Rational(qv + 1 - e, 2 * (qv + 1)));
    }
    // Symbolically, odd q: (q-3)/(2(q-1)) = (1 - 3x) / (2 (1 - x)).
    const auto s = finite_prob(GroupKind::OPlus, 1, LambdaSpec::all(), 6, CharParity::Odd).coefficients();
    EXPECT_EQ(s[0], Rational(1, 2));
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(s[k], -1);
}

/// |series(1/q0) - exact(q0)| is O(q0^{-(order+1)}).
void expect_series_matches_exact(GroupKind g, int d, const LambdaSpec& spec, long qv, int order)
{
    const Integer q0 = qv;
    const ProbSeries s = finite_prob(g, d, spec, order, parity_of(q0));
    const Rational approx = s.series.evaluate(Rational(1, q0));
    const Rational exact = finite_prob_exact(g, d, spec, q0);
    const Rational err = abs(approx - exact) * ipow(q0, order);
    EXPECT_LT(err, Rational(1)) << to_string(g) << " d=" << d << " " << spec.name() << " q=" << qv;
}

TEST(Genfun, SeriesAgreesWithExactAtLargeQ)
{
    const std::vector<LambdaSpec> specs{LambdaSpec::separable(), LambdaSpec::cyclic(), LambdaSpec::semisimple(),
                                        LambdaSpec::all(), LambdaSpec::explicit_set({Partition{2}})};
    for (GroupKind g : {GroupKind::GL, GroupKind::U, GroupKind::Sp, GroupKind::OPlus, GroupKind::OMinus}) {
        for (const auto& spec : specs) {
            for (int d = 1; d <= 3; ++d) {
                expect_series_matches_exact(g, d, spec, 1009, 8);
                expect_series_matches_exact(g, d, spec, 1024, 8);
            }
        }
    }
}

TEST(Genfun, OrthogonalHalvesAndSumRule)
{
    for (CharParity p : {CharParity::Even, CharParity::Odd}) {
        for (const auto& spec : {LambdaSpec::separable(), LambdaSpec::cyclic(), LambdaSpec::all()}) {
            for (int d = 1; d <= 4; ++d) {
                const auto plus = orth_probs(true, d, spec, 10, p).series;
                const auto minus = orth_probs(false, d, spec, 10, p).series;
                EXPECT_EQ(plus + minus, finite_prob(GroupKind::Sp, d, spec, 10, p).series);
                EXPECT_TRUE((plus * Rational(2)).is_integral());
                EXPECT_TRUE((minus * Rational(2)).is_integral());
            }
            const auto lp = orth_probs(true, std::nullopt, spec, 10, p).series;
            EXPECT_EQ(lp, orth_probs(false, std::nullopt, spec, 10, p).series);
            EXPECT_EQ(lp * Rational(2), limit_prob(GroupKind::Sp, spec, 10, p).series);
        }
    }
}

TEST(Genfun, LimitWithoutOneIsZero)
{
    const auto r = limit_prob(GroupKind::GL, LambdaSpec::explicit_set({Partition{2}}), 6);
    EXPECT_TRUE(r.series.is_zero());
    EXPECT_FALSE(r.note.empty());
    EXPECT_EQ(r.coefficients().size(), 7u);
}

TEST(Genfun, FactorCutoffIsStable)
{
    for (GroupKind g : {GroupKind::GL, GroupKind::U, GroupKind::Sp}) {
        for (const auto& spec : {LambdaSpec::separable(), LambdaSpec::semisimple(), LambdaSpec::all()}) {
            EXPECT_TRUE(limit_cutoff_stable(g, spec, 10)) << to_string(g) << " " << spec.name();
        }
    }
}

TEST(Genfun, LimitIsTheLargeDimensionValue)
{
    // Separable GL agrees with the limit for n <= d-1, so d = 11 fixes q^-10.
    const auto fin = finite_prob(GroupKind::GL, 11, LambdaSpec::separable(), 10);
    EXPECT_EQ(fin.coefficients(), limit_coeffs(GroupKind::GL, LambdaSpec::separable(), 10));
    const auto sp = finite_prob(GroupKind::Sp, 9, LambdaSpec::separable(), 6, CharParity::Even);
    EXPECT_EQ(sp.coefficients(), limit_coeffs(GroupKind::Sp, LambdaSpec::separable(), 6, CharParity::Even));
}

TEST(Genfun, ParityCheck)
{
    const auto r = parity_check(LambdaSpec::cyclic(), 12);
    EXPECT_TRUE(r.ok);
    EXPECT_FALSE(r.first_offending.has_value());
    EXPECT_THROW(parity_check(LambdaSpec::explicit_set({Partition{2}}), 5), std::invalid_argument);
}

TEST(Genfun, SymplecticDependsOnParity)
{
    EXPECT_NE(limit_coeffs(GroupKind::Sp, LambdaSpec::separable(), 6, CharParity::Even),
              limit_coeffs(GroupKind::Sp, LambdaSpec::separable(), 6, CharParity::Odd));
}

TEST(Genfun, Errors)
{
    EXPECT_THROW(finite_prob(GroupKind::GL, 0, LambdaSpec::all(), 4), std::invalid_argument);
    EXPECT_THROW(limit_prob(GroupKind::OPlus, LambdaSpec::all(), 4), std::invalid_argument);
    EXPECT_THROW(finite_prob_exact(GroupKind::GL, 2, LambdaSpec::all(), 1), std::invalid_argument);
}

TEST(Genfun, TLambdaCoefficients)
{
    const BiSeries t = t_lambda(LambdaSpec::separable(), Flavor::GL, 3, 5);
    EXPECT_EQ(t[1], series_reciprocal(QPolynomial::q() - 1, 5));
    EXPECT_TRUE(t[2].is_zero());
}

} // namespace
