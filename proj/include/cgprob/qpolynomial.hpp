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

#ifndef CGPROB_QPOLYNOMIAL_HPP
#define CGPROB_QPOLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace cgprob {

/// Exact polynomial in q with rational coefficients, stored sparsely.
///
/// Zero coefficients are never stored, so the degree is the largest key.
/// The zero polynomial has degree -1.
class QPolynomial {
public:
    using Terms = std::map<int, Rational>;

    QPolynomial() = default;
    QPolynomial(const Rational& c) { set(0, c); }
    QPolynomial(long c) : QPolynomial(Rational(c)) {}

    static QPolynomial q() { return monomial(1, 1); }

    static QPolynomial monomial(int exponent, const Rational& c)
    {
        if (exponent < 0) {
            throw std::invalid_argument("QPolynomial exponents are nonnegative");
        }
        QPolynomial p;
        p.set(exponent, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    int low_degree() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first; }

    Rational coefficient(int exponent) const
    {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

    bool has_integer_coefficients() const
    {
        for (const auto& [e, c] : terms_) {
            if (!is_integer(c)) {
                return false;
            }
        }
        return true;
    }

    QPolynomial& operator+=(const QPolynomial& o)
    {
        for (const auto& [e, c] : o.terms_) {
            set(e, coefficient(e) + c);
        }
        return *this;
    }

    QPolynomial& operator-=(const QPolynomial& o)
    {
        for (const auto& [e, c] : o.terms_) {
            set(e, coefficient(e) - c);
        }
        return *this;
    }

    QPolynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator-(QPolynomial a) { return a *= Rational(-1); }
    friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
    friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
    {
        QPolynomial r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.terms_[ea + eb] += ca * cb;
            }
        }
        r.prune();
        return r;
    }

    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }

    QPolynomial pow(unsigned n) const
    {
        QPolynomial r(1);
        for (unsigned i = 0; i < n; ++i) {
            r *= *this;
        }
        return r;
    }

    Rational evaluate(const Rational& q0) const
    {
        // Horner over the sparse terms, highest exponent first.
        Rational acc = 0;
        int prev = degree();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            for (int k = it->first; k < prev; ++k) {
                acc *= q0;
            }
            acc += it->second;
            prev = it->first;
        }
        for (int k = 0; k < prev; ++k) {
            acc *= q0;
        }
        return acc;
    }

    /// q -> q^k.
    QPolynomial substitute_power(int k) const
    {
        if (k < 1) {
            throw std::invalid_argument("substitute_power needs k >= 1");
        }
        QPolynomial r;
        for (const auto& [e, c] : terms_) {
            r.terms_[e * k] = c;
        }
        return r;
    }

    /// q -> -q.
    QPolynomial negate_variable() const
    {
        QPolynomial r = *this;
        for (auto& [e, c] : r.terms_) {
            if (e % 2 != 0) {
                c = -c;
            }
        }
        return r;
    }

    /// Generalized binomial coefficient p(p-1)...(p-k+1)/k!.
    static QPolynomial binomial(const QPolynomial& p, int k)
    {
        QPolynomial r(1);
        for (int i = 0; i < k; ++i) {
            r *= (p - QPolynomial(i));
            r *= Rational(1, i + 1);
        }
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) {
                os << (c < 0 ? " - " : " + ");
            } else if (c < 0) {
                os << "-";
            }
            Rational mag = c < 0 ? Rational(-c) : c;
            if (mag != 1 || e == 0) {
                os << mag;
                if (e != 0) {
                    os << "*";
                }
            }
            if (e == 1) {
                os << "q";
            } else if (e > 1) {
                os << "q^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    void set(int e, const Rational& c)
    {
        if (c == 0) {
            terms_.erase(e);
        } else {
            terms_[e] = c;
        }
    }

    void prune()
    {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
        }
    }

    Terms terms_;
};

} // namespace cgprob

#endif
