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

#ifndef CGPROB_GENFUN_HPP
#define CGPROB_GENFUN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "biseries.hpp"
#include "counts.hpp"
#include "errors.hpp"
#include "laurent_series.hpp"
#include "partitions.hpp"

// Cycle-index assembly for GL, U, Sp and the even-dimensional orthogonal
// groups. Dimensions of Sp/O are indexed by d with group dimension 2d.

namespace cgprob {

/// Probability of Lambda-type as a series in q^-1.
struct ProbSeries {
    GroupKind group;
    std::string lambda;
    std::optional<int> dimension; // nullopt: the d -> infinity limit
    std::optional<CharParity> parity; // set for Sp and O+/-
    LaurentSeries series;
    int order = 0;
    std::string note;

    std::vector<Rational> coefficients() const { return series.coefficients(); }
};

namespace detail {

inline bool uses_parity(GroupKind g) { return g == GroupKind::Sp || g == GroupKind::OPlus || g == GroupKind::OMinus; }

/// A factor (1 + T(u^e, q^e))^p of a cycle index.
struct CycleFactor {
    Flavor flavor;
    int scale;
    QPolynomial exponent;
    bool alternating; // weight (-1)^{|lambda|}, used by the orthogonal difference
};

/// Factors whose product is 1 + sum_d Lambda_{G(d)} u^d, for u-degree <= D.
/// Factor e is 1 mod u^e, so e <= D suffices.
inline std::vector<CycleFactor> cycle_factors(GroupKind group, int D, CharParity parity, bool orth_difference)
{
    std::vector<CycleFactor> out;
    switch (group) {
    case GroupKind::GL:
        for (int e = 1; e <= D; ++e) {
            out.push_back({Flavor::GL, e, count_N(e), false});
        }
        break;
    case GroupKind::U:
        for (int e = 1; e <= D; e += 2) {
            out.push_back({Flavor::U, e, count_Ntilde(e), false});
        }
        for (int e = 1; 2 * e <= D; ++e) {
            out.push_back({Flavor::GL, 2 * e, count_Mtilde(e), false});
        }
        break;
    case GroupKind::Sp:
    case GroupKind::OPlus:
    case GroupKind::OMinus:
        for (int e = 1; e <= D; ++e) {
            out.push_back({Flavor::U, e, count_Nstar(2 * e, parity), orth_difference});
        }
        for (int e = 1; e <= D; ++e) {
            out.push_back({Flavor::GL, e, count_Mstar(e, parity), false});
        }
        break;
    }
    return out;
}

} // namespace detail

/// sum over lambda in Lambda with scale*|lambda| <= D of
/// (+-1)^{|lambda|} u^{scale |lambda|} / C_lambda(q^scale), through q^-order.
inline BiSeries t_lambda_scaled(const LambdaSpec& spec, Flavor flavor, int D, int order, int scale, bool alternating)
{
    BiSeries t(D, order);
    std::vector<LaurentSeries> acc(D + 1, LaurentSeries(order));
    // 1/C(q^scale) has valuation scale*delta(lambda).
    for (const auto& lambda : spec.members_up_to(D / scale, order / scale)) {
        const int udeg = scale * lambda.size();
        LaurentSeries term = series_reciprocal(centralizer(lambda, flavor).substitute_power(scale), order);
        if (alternating && lambda.size() % 2 != 0) {
            term *= Rational(-1);
        }
        acc[udeg] += term;
    }
    for (int i = 1; i <= D; ++i) {
        t.set(i, acc[i]);
    }
    return t;
}

/// T_Lambda(u, q) = sum_{lambda in Lambda} u^{|lambda|} / C_lambda(q).
inline BiSeries t_lambda(const LambdaSpec& spec, Flavor flavor, int D, int order)
{
    return t_lambda_scaled(spec, flavor, D, order, 1, false);
}

/// 1 + sum_{d=1}^{D} Lambda_{G(d,q)} u^d through q^-order. For O+/- the
/// u^d coefficient is the O+/-(2d,q) probability, with the 0-dimensional
/// space counted as positive type.
inline BiSeries cycle_index_series(GroupKind group, const LambdaSpec& spec, int D, int order,
                                   CharParity parity = CharParity::Odd)
{
    if (D < 0 || order < 0) {
        throw std::invalid_argument("cycle_index_series needs D, order >= 0");
    }
    if (group == GroupKind::OPlus || group == GroupKind::OMinus) {
        const BiSeries sp = cycle_index_series(GroupKind::Sp, spec, D, order, parity);
        BiSeries diff = BiSeries::one(D, order + D);
        for (const auto& f : detail::cycle_factors(group, D, parity, true)) {
            if (f.exponent.is_zero()) {
                continue;
            }
            BiSeries base = BiSeries::one(D, order + D) + t_lambda_scaled(spec, f.flavor, D, order + D, f.scale, f.alternating);
            diff *= biseries_pow_poly(base, f.exponent);
        }
        diff = diff.truncated(D, order);
        const BiSeries sum = group == GroupKind::OPlus ? sp + diff : sp - diff;
        return sum * Rational(1, 2);
    }
    // Every u^m coefficient of log(1 + T(u^e, q^e)) has valuation >= m, and
    // exponents have degree <= e (2e for the unitary M~ factors, where the
    // scale is 2e), so no positive q-powers appear and D extra orders of
    // working precision cover the loss from multiplying by the exponent.
    const int work = order + D;
    BiSeries acc = BiSeries::one(D, work);
    for (const auto& f : detail::cycle_factors(group, D, parity, false)) {
        if (f.exponent.is_zero()) {
            continue;
        }
        BiSeries base = BiSeries::one(D, work) + t_lambda_scaled(spec, f.flavor, D, work, f.scale, false);
        acc *= biseries_pow_poly(base, f.exponent);
    }
    return acc.truncated(D, order);
}

/// Lambda_{G(d,q)} through q^-order; for Sp/O+/- the group is G(2d,q).
inline ProbSeries finite_prob(GroupKind group, int d, const LambdaSpec& spec, int order,
                              CharParity parity = CharParity::Odd)
{
    if (d < 1) {
        throw std::invalid_argument("finite_prob needs d >= 1");
    }
    const BiSeries ci = cycle_index_series(group, spec, d, order, parity);
    const LaurentSeries& s = ci[d];
    if (s.has_principal_part()) {
        throw internal_error("positive q-powers survived in finite_prob");
    }
    ProbSeries r{group, spec.name(), d, std::nullopt, s, order, ""};
    if (detail::uses_parity(group)) {
        r.parity = parity;
    }
    return r;
}

/// X_d: u^d coefficient of the difference of the O+ and O- cycle indices.
inline LaurentSeries orth_difference(int d, const LambdaSpec& spec, int order, CharParity parity)
{
    const BiSeries plus = cycle_index_series(GroupKind::OPlus, spec, d, order, parity);
    const BiSeries minus = cycle_index_series(GroupKind::OMinus, spec, d, order, parity);
    return plus[d] - minus[d];
}

namespace detail {

/// (1 - x^s)(1 + sum_{lambda} 1/C_lambda(q^s)) through x^precision.
inline LaurentSeries limit_bracket(const LambdaSpec& spec, Flavor flavor, int s, int precision)
{
    LaurentSeries sum = LaurentSeries::one(precision);
    for (const auto& lambda : spec.members_up_to(precision / s, precision / s)) {
        sum += series_reciprocal(centralizer(lambda, flavor).substitute_power(s), precision);
    }
    LaurentSeries one_minus = LaurentSeries::one(precision) - LaurentSeries::monomial(s, 1, precision);
    return sum * one_minus;
}

inline LaurentSeries bracket_power(const LambdaSpec& spec, Flavor flavor, int s, const QPolynomial& exponent, int order)
{
    if (exponent.is_zero()) {
        return LaurentSeries::one(order);
    }
    const int precision = order + exponent.degree();
    return series_pow_poly(limit_bracket(spec, flavor, s, precision), exponent);
}

} // namespace detail

/// Lambda_{G(infinity,q)} for G in {GL, U, Sp} as the residue of the cycle
/// index at u = 1. Bracket d contributes only from q^-d on, so the product
/// stops at d = factor_cutoff (default: order).
inline ProbSeries limit_prob(GroupKind group, const LambdaSpec& spec, int order,
                             CharParity parity = CharParity::Odd, int factor_cutoff = -1)
{
    if (group != GroupKind::GL && group != GroupKind::U && group != GroupKind::Sp) {
        throw std::invalid_argument("limit_prob handles gl, u and sp");
    }
    if (order < 0) {
        throw std::invalid_argument("limit_prob needs order >= 0");
    }
    ProbSeries r{group, spec.name(), std::nullopt, std::nullopt, LaurentSeries(order), order, ""};
    if (group == GroupKind::Sp) {
        r.parity = parity;
    }
    if (!spec.contains_one()) {
        r.note = "(1) is not in the partition set; the limiting probability is 0";
        return r;
    }
    const int cutoff = factor_cutoff < 0 ? order : factor_cutoff;
    LaurentSeries acc = LaurentSeries::one(order);
    const LaurentSeries x = LaurentSeries::monomial(1, 1, order);
    switch (group) {
    case GroupKind::GL:
        acc = LaurentSeries::one(order) - x;
        for (int d = 1; d <= cutoff; ++d) {
            acc *= detail::bracket_power(spec, Flavor::GL, d, count_N(d), order);
        }
        break;
    case GroupKind::U:
        acc = LaurentSeries::one(order) + x;
        for (int d = 1; d <= cutoff; d += 2) {
            acc *= detail::bracket_power(spec, Flavor::U, d, count_Ntilde(d), order);
        }
        for (int d = 1; d <= cutoff; ++d) {
            acc *= detail::bracket_power(spec, Flavor::GL, 2 * d, count_Mtilde(d), order);
        }
        break;
    default:
        for (int i = 0; i < e_value(parity); ++i) {
            acc *= LaurentSeries::one(order) - x;
        }
        for (int d = 1; d <= cutoff; ++d) {
            acc *= detail::bracket_power(spec, Flavor::U, d, count_Nstar(2 * d, parity), order);
            acc *= detail::bracket_power(spec, Flavor::GL, d, count_Mstar(d, parity), order);
        }
        break;
    }
    if (acc.order() < order || acc.has_principal_part()) {
        throw internal_error("limit_prob lost precision or gained positive q-powers");
    }
    if (!acc.is_integral()) {
        throw internal_error("limit_prob produced a non-integral coefficient");
    }
    r.series = acc.truncated(order);
    return r;
}

/// Recomputes the limit with factor cutoff order+2 and checks that no
/// coefficient through q^-order moves.
inline bool limit_cutoff_stable(GroupKind group, const LambdaSpec& spec, int order, CharParity parity = CharParity::Odd)
{
    const auto base = limit_prob(group, spec, order, parity);
    const auto wider = limit_prob(group, spec, order, parity, order + 2);
    return base.series == wider.series;
}

/// Even-dimensional orthogonal groups O+(2d,q) / O-(2d,q); d = nullopt is
/// the limit, where both signs give half the symplectic limit.
inline ProbSeries orth_probs(bool plus, std::optional<int> d, const LambdaSpec& spec, int order,
                             CharParity parity = CharParity::Odd)
{
    const GroupKind g = plus ? GroupKind::OPlus : GroupKind::OMinus;
    if (d) {
        ProbSeries r = finite_prob(g, *d, spec, order, parity);
        return r;
    }
    ProbSeries sp = limit_prob(GroupKind::Sp, spec, order, parity);
    return ProbSeries{g, spec.name(), std::nullopt, parity, sp.series * Rational(1, 2), order, sp.note};
}

struct ParityReport {
    bool ok = true;
    std::optional<int> first_offending;
    std::vector<Rational> gl;
    std::vector<Rational> u;
};

/// GL and U limits agree mod 2 coefficientwise.
inline ParityReport parity_check(const LambdaSpec& spec, int order)
{
    if (!spec.contains_one()) {
        throw std::invalid_argument("parity_check needs (1) in the partition set");
    }
    ParityReport r;
    r.gl = limit_prob(GroupKind::GL, spec, order).coefficients();
    r.u = limit_prob(GroupKind::U, spec, order).coefficients();
    for (int i = 0; i <= order; ++i) {
        const Rational diff = r.gl[i] - r.u[i];
        if (!is_even_integer(diff)) {
            r.ok = false;
            r.first_offending = i;
            break;
        }
    }
    return r;
}

namespace detail {

using UPoly = std::vector<Rational>;

inline UPoly upoly_mul(const UPoly& a, const UPoly& b, int D)
{
    UPoly r(D + 1);
    for (int i = 0; i <= D; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (int j = 0; i + j <= D; ++j) {
            if (b[j] != 0) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    return r;
}

/// (1 + T)^n = sum_k C(n,k) T^k for a nonnegative integer n; T = O(u).
inline UPoly upoly_binomial_power(const UPoly& t, const Integer& n, int D)
{
    UPoly result(D + 1);
    result[0] = 1;
    UPoly power = result;
    Rational binom = 1;
    for (int k = 1; k <= D; ++k) {
        if (Integer(k) > n) {
            break;
        }
        power = upoly_mul(power, t, D);
        binom = binom * Rational(n - (k - 1)) / k;
        for (int i = 0; i <= D; ++i) {
            result[i] += binom * power[i];
        }
    }
    return result;
}

inline Rational exact_series_coefficient(GroupKind group, int d, const LambdaSpec& spec, const Integer& q0,
                                         bool orth_difference)
{
    struct Factor {
        Flavor flavor;
        int scale;
        Integer exponent;
    };
    std::vector<Factor> factors;
    switch (group) {
    case GroupKind::GL:
        for (int e = 1; e <= d; ++e) factors.push_back({Flavor::GL, e, count_N(e, q0)});
        break;
    case GroupKind::U:
        for (int e = 1; e <= d; e += 2) factors.push_back({Flavor::U, e, count_Ntilde(e, q0)});
        for (int e = 1; 2 * e <= d; ++e) factors.push_back({Flavor::GL, 2 * e, count_Mtilde(e, q0)});
        break;
    default:
        for (int e = 1; e <= d; ++e) factors.push_back({Flavor::U, e, count_Nstar(2 * e, q0)});
        for (int e = 1; e <= d; ++e) factors.push_back({Flavor::GL, e, count_Mstar(e, q0)});
        break;
    }
    UPoly acc(d + 1);
    acc[0] = 1;
    for (const auto& f : factors) {
        if (f.exponent == 0) {
            continue;
        }
        UPoly t(d + 1);
        const Integer qs = ipow(q0, f.scale);
        for (int n = 1; f.scale * n <= d; ++n) {
            for (const auto& lambda : spec.enumerate(n)) {
                Rational c = 1 / centralizer(lambda, f.flavor).evaluate(Rational(qs));
                if (orth_difference && f.flavor == Flavor::U && n % 2 != 0) {
                    c = -c;
                }
                t[f.scale * n] += c;
            }
        }
        acc = upoly_mul(acc, upoly_binomial_power(t, f.exponent, d), d);
    }
    return acc[d];
}

} // namespace detail

/// Lambda_{G(d,q0)} as an exact rational, with integer exponents at q = q0.
/// Shares no series code with finite_prob.
inline Rational finite_prob_exact(GroupKind group, int d, const LambdaSpec& spec, const Integer& q0)
{
    if (d < 1 || q0 < 2) {
        throw std::invalid_argument("finite_prob_exact needs d >= 1 and q0 >= 2");
    }
    if (group == GroupKind::OPlus || group == GroupKind::OMinus) {
        const Rational s = detail::exact_series_coefficient(GroupKind::Sp, d, spec, q0, false);
        const Rational x = detail::exact_series_coefficient(GroupKind::Sp, d, spec, q0, true);
        return group == GroupKind::OPlus ? (s + x) / 2 : (s - x) / 2;
    }
    return detail::exact_series_coefficient(group, d, spec, q0, false);
}

} // namespace cgprob

#endif
