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

#ifndef CGPROB_STABILIZATION_HPP
#define CGPROB_STABILIZATION_HPP

#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "biseries.hpp"
#include "counts.hpp"
#include "errors.hpp"
#include "genfun.hpp"
#include "partitions.hpp"

namespace cgprob {

/// F(a, s) = (1/s) sum_{r | gcd(s, a)} mu(r) (-1)^{s/r} C(s/r + a/r - 1, a/r).
inline Integer f_as(int a, int s)
{
    if (a < 0 || s < 1) {
        throw std::invalid_argument("f_as needs a >= 0 and s >= 1");
    }
    const int g = std::gcd(s, a);
    Integer sum = 0;
    for (int r : divisors(g)) {
        const int mu = mobius(r);
        if (mu == 0) continue;
        const int sr = s / r;
        const int ar = a / r;
        const Integer term = binomial(sr + ar - 1, ar);
        sum += (sr % 2 == 0 ? 1 : -1) * mu * term;
    }
    if (sum % s != 0) {
        throw internal_error("F(" + std::to_string(a) + "," + std::to_string(s) + ") is not an integer");
    }
    return sum / s;
}

/// prod_{a>=0, s>=1} (1 - u^s q^{1-s-a})^{F(a,s)} / (1 + u/(q-1)) through
/// bidegree (D, n).
inline BiSeries s_gl_product_side(int D, int n)
{
    BiSeries acc = BiSeries::one(D, n);
    for (int s = 1; s <= D; ++s) {
        for (int a = 0; s + a - 1 <= n; ++a) {
            const Integer f = f_as(a, s);
            if (f == 0) continue;
            // (1 - t)^f = sum_k C(f, k) (-t)^k with t = u^s x^{s+a-1}.
            BiSeries factor = BiSeries::one(D, n);
            std::vector<Rational> coeffs(D + 1);
            Rational binom = 1;
            for (int k = 1; k * s <= D && k * (s + a - 1) <= n; ++k) {
                binom = binom * Rational(f - (k - 1)) / k;
                const Rational c = k % 2 == 0 ? binom : Rational(-binom);
                factor.set(k * s, LaurentSeries::monomial(k * (s + a - 1), c, n));
            }
            acc *= factor;
        }
    }
    // 1 + u/(q-1) = 1 + u (x + x^2 + ...).
    BiSeries den = BiSeries::one(D, n);
    if (D >= 1) {
        std::vector<Rational> geo(n + 1, Rational(1));
        geo[0] = 0;
        den.set(1, LaurentSeries::from_coefficients(geo, n));
    }
    return acc * biseries_inverse(den);
}

/// Separable GL cycle index against its product formula.
inline bool s_gl_product_check(int D, int n)
{
    if (D < 1 || n < 1) {
        throw std::invalid_argument("s_gl_product_check needs D, n >= 1");
    }
    BiSeries lhs = BiSeries::one(D, n);
    for (int d = 1; d <= D; ++d) {
        lhs.set(d, finite_prob(GroupKind::GL, d, LambdaSpec::separable(), n).series);
    }
    return lhs == s_gl_product_side(D, n);
}

struct DifferenceReport {
    bool gl = false;
    bool u = false;
    bool functional_equation = false;
    bool ok() const { return gl && u && functional_equation; }
};

/// c_{G(d+1)} - c_{G(d)} = (+-q)^{-d-1} (s_{G(d+1)} - s_{G(d)}) for G = GL, U
/// and 0 <= d < d_max, and s_U(u,q) = s_GL(u^2,q^2) / s_GL(-u,-q) through
/// bidegree (d_max, order).
inline DifferenceReport difference_identities(int d_max, int order)
{
    if (d_max < 1 || order < 0) {
        throw std::invalid_argument("difference_identities needs d_max >= 1");
    }
    DifferenceReport r;
    auto relation_holds = [&](GroupKind g) {
        const BiSeries c = cycle_index_series(g, LambdaSpec::cyclic(), d_max, order);
        const BiSeries s = cycle_index_series(g, LambdaSpec::separable(), d_max, order);
        for (int d = 0; d < d_max; ++d) {
            const LaurentSeries lhs = c[d + 1] - c[d];
            LaurentSeries rhs = (s[d + 1] - s[d]).shifted(d + 1).truncated(order);
            if (g == GroupKind::U && (d + 1) % 2 != 0) {
                rhs *= Rational(-1);
            }
            if (!(lhs == rhs)) return false;
        }
        return true;
    };
    r.gl = relation_holds(GroupKind::GL);
    r.u = relation_holds(GroupKind::U);

    const BiSeries s_gl = cycle_index_series(GroupKind::GL, LambdaSpec::separable(), d_max, order);
    const BiSeries s_u = cycle_index_series(GroupKind::U, LambdaSpec::separable(), d_max, order);
    const BiSeries num = s_gl.substitute_u_power(2).substitute_q_power(2).truncated(d_max, order);
    const BiSeries den = s_gl.negate_u().negate_q();
    r.functional_equation = (num * biseries_inverse(den)).truncated(d_max, order) == s_u;
    return r;
}

struct SigmaResult {
    Rational value;
    bool exact = true;        // false: value is only the infimum over enumerated members
    bool inconclusive = false; // no answer could be certified
    std::string note;
};

/// 1 - 1/k for the least k >= 2 with (k) not in Lambda, or 1 when Lambda
/// declares every one-part partition a member.
inline SigmaResult sigma_with_one(const LambdaSpec& spec, int search_bound = 64)
{
    if (!spec.contains_one()) {
        throw std::invalid_argument("sigma_with_one needs (1) in the partition set");
    }
    for (int k = 2; k <= search_bound; ++k) {
        if (!spec.contains(Partition{k})) {
            return {1 - Rational(1, k), true, false, "smallest excluded one-part partition (" + std::to_string(k) + ")"};
        }
    }
    if (spec.declares_all_one_part().value_or(false)) {
        return {Rational(1), true, false, "all one-part partitions are members"};
    }
    return {Rational(1), false, true,
            "every (m) with m <= " + std::to_string(search_bound) + " is a member but closure is not declared"};
}

/// inf (delta(lambda) - 1) / |lambda| over Lambda, for Lambda without (1).
inline SigmaResult sigma_without_one(const LambdaSpec& spec, int size_bound = 12)
{
    if (spec.contains_one()) {
        throw std::invalid_argument("sigma_without_one needs (1) outside the partition set");
    }
    for (int k = 2; k <= size_bound; ++k) {
        if (spec.contains(Partition{k})) {
            return {Rational(k - 1, k), true, false, "smallest one-part member (" + std::to_string(k) + ")"};
        }
    }
    std::optional<Rational> best;
    for (int n = 1; n <= size_bound; ++n) {
        for (const auto& p : spec.enumerate(n)) {
            const Rational v(delta(p) - 1, p.size());
            if (!best || v < *best) best = v;
        }
    }
    if (!best) {
        throw std::invalid_argument("sigma_without_one found no members up to the size bound");
    }
    SigmaResult r{*best, false, false, "infimum over members of size <= " + std::to_string(size_bound) + "; the true value is >= 1"};
    if (spec.is_finite() && spec.max_member_size() <= size_bound) {
        r.exact = true;
        r.note = "infimum over all members";
    }
    return r;
}

struct StabilizationRow {
    int d = 0;
    std::optional<int> first_unstable; // empty: agreement through the scan order
    std::optional<int> predicted_bound; // agreement asserted for n <= bound
    bool ok = true;
    std::vector<Rational> finite;
    std::vector<Rational> limit;
};

struct StabilizationReport {
    GroupKind group = GroupKind::GL;
    std::string lambda;
    int order = 0;
    std::string rule;
    std::vector<StabilizationRow> rows;

    bool ok() const
    {
        for (const auto& r : rows) {
            if (!r.ok) return false;
        }
        return true;
    }
};

/// Compares Lambda_{G(d,q)} for 1 <= d <= d_max with the limit (or with 0
/// when (1) is not in Lambda) and checks the applicable stability bound.
inline StabilizationReport stabilization_scan(GroupKind group, const LambdaSpec& spec, int d_max, int order)
{
    if (group != GroupKind::GL && group != GroupKind::U) {
        throw std::invalid_argument("stabilization_scan handles gl and u");
    }
    if (d_max < 1 || order < 0) {
        throw std::invalid_argument("stabilization_scan needs d_max >= 1 and order >= 0");
    }
    StabilizationReport rep;
    rep.group = group;
    rep.lambda = spec.name();
    rep.order = order;

    // bound(d): largest n for which agreement is guaranteed.
    std::function<std::optional<int>(int)> bound = [](int) { return std::optional<int>(); };
    const bool with_one = spec.contains_one();
    if (spec.kind() == LambdaKind::Separable) {
        rep.rule = "n <= d-1";
        bound = [](int d) { return std::optional<int>(d - 1); };
    } else if (spec.kind() == LambdaKind::Cyclic) {
        rep.rule = "n <= 2d";
        bound = [](int d) { return std::optional<int>(2 * d); };
    } else if (group == GroupKind::GL) {
        if (with_one) {
            const SigmaResult sigma = sigma_with_one(spec);
            if (!sigma.inconclusive) {
                rep.rule = "j < (d+1) sigma, sigma = " + to_string(sigma.value);
                bound = [s = sigma.value](int d) {
                    const Rational lim = (d + 1) * s;
                    return std::optional<int>(static_cast<int>(ceil_integer(lim)) - 1);
                };
            } else {
                rep.rule = "none (sigma inconclusive)";
            }
        } else {
            const SigmaResult sigma = sigma_without_one(spec);
            // An enumerated infimum over-estimates sigma; only sigma >= 1 is safe then.
            const Rational s = sigma.exact ? sigma.value : Rational(1);
            rep.rule = "j < d sigma, sigma " + std::string(sigma.exact ? "= " : ">= ") + to_string(s);
            bound = [s](int d) { return std::optional<int>(static_cast<int>(ceil_integer(d * s)) - 1); };
        }
    } else {
        rep.rule = "none (reported only)";
    }

    const BiSeries ci = cycle_index_series(group, spec, d_max, order);
    std::vector<Rational> limit(order + 1);
    if (with_one) {
        limit = limit_prob(group, spec, order).coefficients();
    }
    for (int d = 1; d <= d_max; ++d) {
        StabilizationRow row;
        row.d = d;
        row.finite = ci[d].coefficients();
        row.limit = limit;
        for (int n = 0; n <= order; ++n) {
            if (row.finite[n] != limit[n]) {
                row.first_unstable = n;
                break;
            }
        }
        row.predicted_bound = bound(d);
        if (row.predicted_bound && row.first_unstable) {
            row.ok = *row.first_unstable > *row.predicted_bound;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace cgprob

#endif
