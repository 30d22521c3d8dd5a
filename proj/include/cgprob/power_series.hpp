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

#ifndef CGPROB_POWER_SERIES_HPP
#define CGPROB_POWER_SERIES_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "qpolynomial.hpp"
#include "rational.hpp"

namespace cgprob {

/// Dense truncated power series sum_{k=0}^{order} c_k x^k over a
/// commutative coefficient ring C (Rational or QPolynomial).
template <class C>
class PowerSeries {
public:
    explicit PowerSeries(int order = 0) : c_(check_order(order) + 1, C(0)) {}

    static PowerSeries one(int order)
    {
        PowerSeries s(order);
        s.c_[0] = C(1);
        return s;
    }

    static PowerSeries monomial(int exponent, const C& c, int order)
    {
        PowerSeries s(order);
        if (exponent < 0) {
            throw std::invalid_argument("PowerSeries exponent must be nonnegative");
        }
        if (exponent <= order) {
            s.c_[exponent] = c;
        }
        return s;
    }

    static PowerSeries from_coefficients(std::vector<C> c, int order)
    {
        PowerSeries s(order);
        for (int k = 0; k < static_cast<int>(c.size()) && k <= order; ++k) {
            s.c_[k] = std::move(c[k]);
        }
        return s;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int k) const { return c_.at(k); }
    C& operator[](int k) { return c_.at(k); }
    const std::vector<C>& coefficients() const noexcept { return c_; }

    PowerSeries truncated(int order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("PowerSeries::truncated cannot extend precision");
        }
        return from_coefficients(std::vector<C>(c_.begin(), c_.begin() + order + 1), order);
    }

    PowerSeries& operator+=(const PowerSeries& o) { return combine(o, false); }
    PowerSeries& operator-=(const PowerSeries& o) { return combine(o, true); }
    PowerSeries& operator*=(const C& s)
    {
        for (auto& c : c_) {
            c = c * s;
        }
        return *this;
    }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const C& s) { return a *= s; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
    {
        const int n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i] == C(0)) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (!(b.c_[j] == C(0))) {
                    r.c_[i + j] += a.c_[i] * b.c_[j];
                }
            }
        }
        return r;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

    /// Inverse of a series with constant term 1.
    PowerSeries inverse() const
    {
        if (!(c_[0] == C(1))) {
            throw std::domain_error("PowerSeries::inverse needs constant term 1");
        }
        PowerSeries g = one(order());
        for (int k = 1; k <= order(); ++k) {
            C acc(0);
            for (int i = 1; i <= k; ++i) {
                if (!(c_[i] == C(0))) {
                    acc += c_[i] * g.c_[k - i];
                }
            }
            g.c_[k] = C(0) - acc;
        }
        return g;
    }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("PowerSeries order must be nonnegative");
        }
        return order;
    }

    PowerSeries& combine(const PowerSeries& o, bool subtract)
    {
        const int n = std::min(order(), o.order());
        c_.resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            if (subtract) {
                c_[k] -= o.c_[k];
            } else {
                c_[k] += o.c_[k];
            }
        }
        return *this;
    }

    std::vector<C> c_;
};

using RationalSeries = PowerSeries<Rational>;
using PolySeries = PowerSeries<QPolynomial>;

/// binom(e, k) for a rational or polynomial e.
inline Rational generalized_binomial(const Rational& e, int k)
{
    Rational r = 1;
    for (int i = 0; i < k; ++i) {
        r = r * (e - i) / (i + 1);
    }
    return r;
}

inline QPolynomial generalized_binomial(const QPolynomial& e, int k) { return QPolynomial::binomial(e, k); }

/// (1 + sign * x^step)^e through x^order, by the binomial series.
template <class C>
PowerSeries<C> binomial_power(int step, int sign, const C& e, int order)
{
    if (step < 1) {
        throw std::invalid_argument("binomial_power needs step >= 1");
    }
    PowerSeries<C> r(order);
    for (int k = 0; k * step <= order; ++k) {
        C b = generalized_binomial(e, k);
        if (sign < 0 && k % 2 != 0) {
            b = C(0) - b;
        }
        r[k * step] = b;
    }
    return r;
}

template <class C>
std::string to_string(const PowerSeries<C>& s)
{
    std::string out = "[";
    for (int k = 0; k <= s.order(); ++k) {
        if (k) out += ", ";
        if constexpr (std::is_same_v<C, Rational>) {
            out += to_string(s[k]);
        } else {
            out += s[k].to_string();
        }
    }
    return out + "]";
}

} // namespace cgprob

#endif
