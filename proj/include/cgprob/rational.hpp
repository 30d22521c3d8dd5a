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

#ifndef CGPROB_RATIONAL_HPP
#define CGPROB_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace cgprob {

// GMP keeps mpq values canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_even_integer(const Rational& r)
{
    return is_integer(r) && (numerator(r) % 2) == 0;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    return Rational(num, den);
}

inline Integer ipow(const Integer& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

/// Least integer >= r.
inline Integer ceil_integer(const Rational& r)
{
    const Integer n = numerator(r);
    const Integer d = denominator(r);
    Integer q = n / d; // truncates toward zero
    if (q * d != n && n > 0) {
        ++q;
    }
    return q;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return Integer(0);
    }
    Integer result = 1;
    for (long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

// Accepts "a" or "a/b" with optional sign; the result is canonical.
inline Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num(std::string(text.substr(0, slash)));
        Integer den(std::string(text.substr(slash + 1)));
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

} // namespace cgprob

#endif
