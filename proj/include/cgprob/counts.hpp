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

#ifndef CGPROB_COUNTS_HPP
#define CGPROB_COUNTS_HPP

#include <stdexcept>
#include <vector>

#include "qpolynomial.hpp"
#include "rational.hpp"

// Moebius-sum polynomial counts that serve as exponents in the cycle indices
// of GL, U and Sp. Every count has a symbolic form (a QPolynomial in q) and a
// concrete form at an integer q.

namespace cgprob {

/// e(q): 1 when q is even, 2 when q is odd.
enum class CharParity { Even = 1, Odd = 2 };

inline int e_value(CharParity p) noexcept { return static_cast<int>(p); }

inline CharParity parity_of(const Integer& q) { return q % 2 == 0 ? CharParity::Even : CharParity::Odd; }

inline const char* to_string(CharParity p) noexcept { return p == CharParity::Even ? "even" : "odd"; }

inline int mobius(long n)
{
    if (n < 1) {
        throw std::invalid_argument("mobius is defined for n >= 1");
    }
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            sign = -sign;
        }
    }
    return n > 1 ? -sign : sign;
}

inline std::vector<int> divisors(int n)
{
    std::vector<int> out;
    for (int a = 1; a <= n; ++a) {
        if (n % a == 0) {
            out.push_back(a);
        }
    }
    return out;
}

namespace detail {

inline void require_positive(int d)
{
    if (d < 1) {
        throw std::invalid_argument("count index d must be >= 1");
    }
}

inline Integer exact_div(const Integer& num, long den)
{
    if (num % den != 0) {
        throw std::logic_error("count is not an integer at this q");
    }
    return num / den;
}

} // namespace detail

/// N(d,q) = (1/d) sum_{a|d} mu(a) (q^{d/a} - 1).
inline QPolynomial count_N(int d)
{
    detail::require_positive(d);
    QPolynomial acc;
    for (int a : divisors(d)) {
        acc += Rational(mobius(a)) * (QPolynomial::monomial(d / a, 1) - QPolynomial(1));
    }
    return acc * Rational(1, d);
}

inline Integer count_N(int d, const Integer& q)
{
    detail::require_positive(d);
    Integer acc = 0;
    for (int a : divisors(d)) {
        acc += mobius(a) * (ipow(q, d / a) - 1);
    }
    return detail::exact_div(acc, d);
}

/// Ntilde(d,q): zero for even d.
inline QPolynomial count_Ntilde(int d)
{
    detail::require_positive(d);
    if (d % 2 == 0) {
        return {};
    }
    QPolynomial acc;
    for (int a : divisors(d)) {
        acc += Rational(mobius(a)) * (QPolynomial::monomial(d / a, 1) + QPolynomial(1));
    }
    return acc * Rational(1, d);
}

inline Integer count_Ntilde(int d, const Integer& q)
{
    detail::require_positive(d);
    if (d % 2 == 0) {
        return 0;
    }
    Integer acc = 0;
    for (int a : divisors(d)) {
        acc += mobius(a) * (ipow(q, d / a) + 1);
    }
    return detail::exact_div(acc, d);
}

/// Mtilde(d,q) = (N(d,q^2) - Ntilde(d,q)) / 2.
inline QPolynomial count_Mtilde(int d)
{
    return (count_N(d).substitute_power(2) - count_Ntilde(d)) * Rational(1, 2);
}

inline Integer count_Mtilde(int d, const Integer& q)
{
    return detail::exact_div(count_N(d, q * q) - count_Ntilde(d, q), 2);
}

/// N*(d,q); e(q) is supplied as the parity branch.
inline QPolynomial count_Nstar(int d, CharParity parity)
{
    detail::require_positive(d);
    const int e = e_value(parity);
    if (d == 1) {
        return QPolynomial(e);
    }
    if (d % 2 != 0) {
        return {};
    }
    QPolynomial acc;
    for (int a : divisors(d)) {
        if (a % 2 == 0) {
            continue;
        }
        acc += Rational(mobius(a)) * (QPolynomial::monomial(d / (2 * a), 1) + QPolynomial(1 - e));
    }
    return acc * Rational(1, d);
}

inline Integer count_Nstar(int d, const Integer& q)
{
    detail::require_positive(d);
    const int e = e_value(parity_of(q));
    if (d == 1) {
        return e;
    }
    if (d % 2 != 0) {
        return 0;
    }
    Integer acc = 0;
    for (int a : divisors(d)) {
        if (a % 2 != 0) {
            acc += mobius(a) * (ipow(q, d / (2 * a)) + 1 - e);
        }
    }
    return detail::exact_div(acc, d);
}

/// M*(d,q) = (N(d,q) - N*(d,q)) / 2.
inline QPolynomial count_Mstar(int d, CharParity parity)
{
    return (count_N(d) - count_Nstar(d, parity)) * Rational(1, 2);
}

inline Integer count_Mstar(int d, const Integer& q)
{
    return detail::exact_div(count_N(d, q) - count_Nstar(d, q), 2);
}

} // namespace cgprob

#endif
