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

#ifndef CGPROB_ORACLE_CENSUS_HPP
#define CGPROB_ORACLE_CENSUS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "../parallel.hpp"
#include "../partitions.hpp"
#include "../rational.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace cgprob::oracle {

/// lambda_f for each monic irreducible f dividing the characteristic polynomial.
using Profile = std::map<FqPoly, Partition>;

/// Reads lambda_f off the ranks r_k of f(alpha)^k: lambda_f has
/// (r_{k-1} - r_k) / deg f parts of size >= k.
inline Profile profile(const MatrixFq& alpha, const std::vector<FqPoly>& irreducible_list)
{
    const int n = alpha.dim();
    Profile out;
    int covered = 0;
    for (const auto& f : irreducible_list) {
        const int df = degree(f);
        if (df > n - covered) continue;
        const MatrixFq m = alpha.evaluate(f);
        int prev = n;
        int r = m.rank();
        if (r == n) continue;
        std::vector<int> at_least; // at_least[k-1] = number of parts >= k
        MatrixFq power = m;
        while (r < prev) {
            if ((prev - r) % df != 0) {
                throw internal_error("rank drop not divisible by deg f");
            }
            const int parts = (prev - r) / df;
            if (!at_least.empty() && parts > at_least.back()) {
                throw internal_error("non-monotone rank sequence");
            }
            at_least.push_back(parts);
            prev = r;
            power = power * m;
            r = power.rank();
        }
        std::vector<int> lambda;
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
            for (int c = 0; c < at_least[k] - next; ++c) lambda.push_back(static_cast<int>(k) + 1);
        }
        Partition p(lambda);
        covered += df * p.size();
        out.emplace(f, std::move(p));
    }
    if (covered != n) {
        throw internal_error("profile does not account for the full dimension");
    }
    return out;
}

inline Profile profile(const MatrixFq& alpha)
{
    return profile(alpha, irreducibles(alpha.field().q(), alpha.dim()));
}

struct CensusResult {
    Integer count = 0;
    Integer total = 0;
    Rational ratio() const { return Rational(count, total); }
};

/// Order of the group in dimension d (2d for Sp) from its closed form.
inline Integer group_order(GroupKind group, int d, int q)
{
    Integer r = 1;
    const Integer Q = q;
    switch (group) {
    case GroupKind::GL:
        for (int i = 0; i < d; ++i) r *= ipow(Q, d) - ipow(Q, i);
        return r;
    case GroupKind::U:
        r = ipow(Q, d * (d - 1) / 2);
        for (int i = 1; i <= d; ++i) r *= ipow(Q, i) - (i % 2 == 0 ? 1 : -1);
        return r;
    case GroupKind::Sp:
        r = ipow(Q, d * d);
        for (int i = 1; i <= d; ++i) r *= ipow(Q, 2 * i) - 1;
        return r;
    default:
        throw std::invalid_argument(std::string("no closed-form order for ") + to_string(group));
    }
}

/// Exhaustive count of Lambda-type elements. GL(d,q) and Sp(2d,q) act over
/// GF(q); U(d,q) is {a over GF(q^2) : conj(a)^T a = I} with conj x -> x^q;
/// Sp(2d,q) preserves the form with blocks [[0,1],[-1,0]] and additionally
/// needs lambda_{z-1} and lambda_{z+1} empty. Sizes whose matrix space
/// exceeds 2^22 are refused.
inline CensusResult census(GroupKind group, int d, int q, const LambdaSpec& spec)
{
    if (group != GroupKind::GL && group != GroupKind::U && group != GroupKind::Sp) {
        throw std::invalid_argument("census enumerates gl, u and sp only");
    }
    if (d < 1) throw std::invalid_argument("census needs d >= 1");
    const int fq = group == GroupKind::U ? q * q : q;
    if (!Field::supported(q) || !Field::supported(fq)) {
        throw std::invalid_argument("census: unsupported q = " + std::to_string(q));
    }
    const Field& F = Field::of(fq);
    const int n = group == GroupKind::Sp ? 2 * d : d;
    checked_power(fq, n * n, std::uint64_t(1) << 22, "census");

    const auto irr = irreducibles(fq, n);
    MatrixFq form = MatrixFq::identity(F, n);
    if (group == GroupKind::Sp) {
        form = MatrixFq(F, n);
        for (int i = 0; i < n; i += 2) {
            form(i, i + 1) = 1;
            form(i + 1, i) = F.neg(1);
        }
    }
    const FqPoly z_minus_1{F.neg(1), 1};
    const FqPoly z_plus_1{1, 1};

    const std::uint64_t rows = checked_power(fq, n, std::uint64_t(1) << 22, "census");
    const std::uint64_t rest = checked_power(fq, n * (n - 1), std::uint64_t(1) << 22, "census");
    std::vector<long> counts(rows, 0), totals(rows, 0);
    parallel_for(rows, [&](std::size_t row) {
        if (row == 0) return; // a zero row is never invertible
        MatrixFq a(F, n);
        auto& data = a.data();
        std::uint64_t r = row;
        for (int j = 0; j < n; ++j, r /= fq) data[j] = static_cast<Elem>(r % fq);
        for (std::uint64_t idx = 0; idx < rest; ++idx) {
            std::uint64_t t = idx;
            for (int j = n; j < n * n; ++j, t /= fq) data[j] = static_cast<Elem>(t % fq);
            bool member = false;
            switch (group) {
            case GroupKind::GL: member = a.rank() == n; break;
            case GroupKind::U: member = a.frobenius(q).transpose() * a == form; break;
            default: member = a.transpose() * form * a == form; break;
            }
            if (!member) continue;
            ++totals[row];
            const Profile prof = profile(a, irr);
            bool ok = true;
            for (const auto& [f, lambda] : prof) {
                if (group == GroupKind::Sp && (f == z_minus_1 || f == z_plus_1)) {
                    ok = false;
                    break;
                }
                if (!spec.contains(lambda)) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++counts[row];
        }
    });
    CensusResult res;
    for (std::uint64_t i = 0; i < rows; ++i) {
        res.count += counts[i];
        res.total += totals[i];
    }
    if (res.total != group_order(group, d, q)) {
        throw internal_error("census group order " + res.total.str() + " disagrees with the closed form");
    }
    return res;
}

} // namespace cgprob::oracle

#endif
