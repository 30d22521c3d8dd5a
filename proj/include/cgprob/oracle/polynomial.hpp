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

#ifndef CGPROB_ORACLE_POLYNOMIAL_HPP
#define CGPROB_ORACLE_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace cgprob::oracle {

/// Polynomial in z over a Field, coefficients low to high, no trailing zeros.
using FqPoly = std::vector<Elem>;

inline int degree(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

inline void trim(FqPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FqPoly mul(const Field& F, const FqPoly& a, const FqPoly& b)
{
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

/// a mod m for monic m.
inline FqPoly mod(const Field& F, FqPoly a, const FqPoly& m)
{
    const int dm = degree(m);
    if (dm < 0 || m.back() != 1) {
        throw std::invalid_argument("mod needs a monic divisor");
    }
    for (int i = degree(a); i >= dm; --i) {
        const Elem c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            a[i - dm + j] = F.sub(a[i - dm + j], F.mul(c, m[j]));
        }
    }
    trim(a);
    return a;
}

/// Monic polynomial of degree d whose lower coefficients are the base-q
/// digits of index.
inline FqPoly monic_from_index(const Field& F, int d, std::uint64_t index)
{
    FqPoly f(d + 1, 0);
    for (int i = 0; i < d; ++i, index /= F.q()) f[i] = static_cast<Elem>(index % F.q());
    f[d] = 1;
    return f;
}

inline std::uint64_t monic_index(const Field& F, const FqPoly& f)
{
    std::uint64_t idx = 0;
    for (int i = degree(f) - 1; i >= 0; --i) idx = idx * F.q() + f[i];
    return idx;
}

inline std::uint64_t checked_power(int q, int d, std::uint64_t limit, const char* what)
{
    std::uint64_t n = 1;
    for (int i = 0; i < d; ++i) {
        n *= static_cast<std::uint64_t>(q);
        if (n > limit) {
            throw std::length_error(std::string(what) + ": search space " + std::to_string(q) + "^" +
                                    std::to_string(d) + " exceeds the exhaustive limit");
        }
    }
    return n;
}

/// Monic irreducibles of degree 1..max_deg over GF(q), by trial division,
/// ordered by degree then index.
inline std::vector<FqPoly> irreducibles(int q, int max_deg)
{
    const Field& F = Field::of(q);
    std::vector<FqPoly> out;
    for (int d = 1; d <= max_deg; ++d) {
        const std::uint64_t n = checked_power(q, d, std::uint64_t(1) << 20, "irreducibles");
        for (std::uint64_t idx = 0; idx < n; ++idx) {
            const FqPoly f = monic_from_index(F, d, idx);
            bool irreducible = true;
            for (const auto& g : out) {
                if (2 * degree(g) > d) break;
                if (mod(F, f, g).empty()) {
                    irreducible = false;
                    break;
                }
            }
            if (irreducible) out.push_back(f);
        }
    }
    return out;
}

/// Flags over monic degree-d indices: true iff irreducible. Every product
/// f*g with f irreducible of degree <= d/2 is struck out, walking g in
/// odometer order so each step updates the product digits incrementally.
inline std::vector<bool> irreducible_flags(int q, int d)
{
    const Field& F = Field::of(q);
    const std::uint64_t total = checked_power(q, d, std::uint64_t(1) << 24, "irreducible_flags");
    std::vector<bool> irreducible(total, true);
    std::vector<std::uint64_t> qpow(d + 1, 1);
    for (int i = 1; i <= d; ++i) qpow[i] = qpow[i - 1] * q;

    for (const auto& f : irreducibles(q, d / 2)) {
        const int k = degree(f);
        const int m = d - k; // degree of the cofactor g
        std::vector<Elem> g(m, 0);
        // product = f * z^m initially
        std::vector<Elem> prod(d + 1, 0);
        for (int i = 0; i <= k; ++i) prod[m + i] = f[i];
        std::uint64_t idx = 0;
        for (int i = 0; i < d; ++i) idx += prod[i] * qpow[i];
        auto apply = [&](int pos, Elem delta) {
            for (int i = 0; i <= k; ++i) {
                const int t = pos + i;
                if (t >= d) break;
                const Elem old = prod[t];
                prod[t] = F.add(old, F.mul(delta, f[i]));
                idx = idx - old * qpow[t] + prod[t] * qpow[t];
            }
        };
        while (true) {
            irreducible[idx] = false;
            int pos = 0;
            while (pos < m) {
                const Elem old = g[pos];
                const Elem next = static_cast<Elem>((old + 1) % q);
                g[pos] = next;
                apply(pos, F.sub(next, old));
                if (next != 0) break;
                ++pos;
            }
            if (pos == m) break;
        }
    }
    return irreducible;
}

/// z^d f(1/z) / f(0), after applying x -> x^frobenius to each coefficient
/// (frobenius = 1 for the plain reciprocal).
inline FqPoly twisted_reciprocal(const Field& F, const FqPoly& f, int frobenius)
{
    if (f.empty() || f[0] == 0) {
        throw std::invalid_argument("reciprocal needs a nonzero constant term");
    }
    FqPoly r(f.rbegin(), f.rend());
    for (auto& c : r) c = F.pow(c, frobenius);
    const Elem scale = F.inv(r.back());
    for (auto& c : r) c = F.mul(c, scale);
    return r;
}

struct IrreducibleClasses {
    long total = 0;  // monic irreducibles of degree d other than z
    long fixed = 0;  // fixed by the involution
    long pairs = 0;  // swapped pairs
};

/// Classifies degree-d irreducibles over GF(q) under f -> f* (frobenius =
/// 1) or f -> f~ (frobenius = sqrt q, the unitary involution).
inline IrreducibleClasses classify_irreducibles(int q, int d, int frobenius)
{
    const Field& F = Field::of(q);
    const auto flags = irreducible_flags(q, d);
    IrreducibleClasses c;
    for (std::uint64_t idx = 0; idx < flags.size(); ++idx) {
        if (!flags[idx]) continue;
        const FqPoly f = monic_from_index(F, d, idx);
        if (f[0] == 0) continue; // z itself
        ++c.total;
        const std::uint64_t image = monic_index(F, twisted_reciprocal(F, f, frobenius));
        if (image == idx) {
            ++c.fixed;
        } else if (image > idx) {
            ++c.pairs;
        }
    }
    return c;
}

inline std::string to_string(const Field& F, const FqPoly& f)
{
    if (f.empty()) return "0";
    std::string out;
    auto coeff = [&](Elem c) { return F.degree() == 1 ? std::to_string(c) : "[" + std::to_string(c) + "]"; };
    for (int i = degree(f); i >= 0; --i) {
        if (f[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += coeff(f[i]);
            continue;
        }
        if (f[i] != 1) out += coeff(f[i]) + "*";
        out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return out;
}

} // namespace cgprob::oracle

#endif
