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

#ifndef CGPROB_BISERIES_HPP
#define CGPROB_BISERIES_HPP

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent_series.hpp"

namespace cgprob {

/// Polynomial in u truncated at u^D whose coefficients are LaurentSeries in
/// x = q^-1 sharing a single truncation order.
class BiSeries {
public:
    BiSeries(int u_degree, int order) : coeffs_(check_degree(u_degree) + 1, LaurentSeries(order)), order_(order) {}

    static BiSeries one(int u_degree, int order)
    {
        BiSeries b(u_degree, order);
        b.coeffs_[0] = LaurentSeries::one(order);
        return b;
    }

    int u_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int order() const noexcept { return order_; }

    const LaurentSeries& operator[](int i) const { return coeffs_.at(i); }
    const LaurentSeries& coefficient(int i) const { return coeffs_.at(i); }

    /// Replaces the u^i coefficient; the shared order narrows if needed.
    void set(int i, const LaurentSeries& s)
    {
        if (i < 0 || i > u_degree()) {
            throw std::out_of_range("u-degree outside the truncation window");
        }
        coeffs_[i] = s;
        narrow_to(std::min(order_, s.order()));
    }

    bool is_integral() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_integral(); });
    }

    BiSeries truncated(int u_degree, int order) const
    {
        if (u_degree > this->u_degree() || order > order_) {
            throw std::invalid_argument("truncation can only be narrowed");
        }
        BiSeries b(u_degree, order);
        for (int i = 0; i <= u_degree; ++i) {
            b.coeffs_[i] = coeffs_[i].truncated(order);
        }
        return b;
    }

    /// u -> u^k, keeping the u-degree window.
    BiSeries substitute_u_power(int k) const
    {
        if (k < 1) {
            throw std::invalid_argument("substitute_u_power needs k >= 1");
        }
        BiSeries b(u_degree(), order_);
        for (int i = 0; i * k <= u_degree(); ++i) {
            b.coeffs_[i * k] = coeffs_[i];
        }
        return b;
    }

    /// u -> -u.
    BiSeries negate_u() const
    {
        BiSeries b = *this;
        for (int i = 1; i <= u_degree(); i += 2) {
            b.coeffs_[i] *= Rational(-1);
        }
        return b;
    }

    /// q -> q^k in every coefficient.
    BiSeries substitute_q_power(int k) const { return map([k](const LaurentSeries& s) { return s.substitute_power(k); }); }

    /// q -> -q in every coefficient.
    BiSeries negate_q() const { return map([](const LaurentSeries& s) { return s.negate_variable(); }); }

    BiSeries& operator+=(const BiSeries& o) { return combine(o, Rational(1)); }
    BiSeries& operator-=(const BiSeries& o) { return combine(o, Rational(-1)); }

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

    friend BiSeries operator*(const BiSeries& a, const Rational& s)
    {
        return a.map([&s](const LaurentSeries& c) { return c * s; });
    }
    friend BiSeries operator*(const BiSeries& a, const QPolynomial& p)
    {
        return a.map([&p](const LaurentSeries& c) { return c * p; });
    }
    friend BiSeries operator*(const BiSeries& a, const LaurentSeries& s)
    {
        return a.map([&s](const LaurentSeries& c) { return c * s; });
    }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b)
    {
        const int deg = std::min(a.u_degree(), b.u_degree());
        std::vector<LaurentSeries> out(deg + 1, LaurentSeries(std::min(a.order_, b.order_)));
        int order = std::min(a.order_, b.order_);
        for (int m = 0; m <= deg; ++m) {
            bool started = false;
            for (int k = 0; k <= m; ++k) {
                if (a.coeffs_[k].is_zero() || b.coeffs_[m - k].is_zero()) {
                    continue;
                }
                LaurentSeries term = a.coeffs_[k] * b.coeffs_[m - k];
                if (started) {
                    out[m] += term;
                } else {
                    out[m] = term;
                    started = true;
                }
                order = std::min(order, term.order());
            }
        }
        BiSeries r(deg, order);
        for (int m = 0; m <= deg; ++m) {
            r.coeffs_[m] = out[m].order() > order ? out[m].truncated(order) : out[m];
        }
        return r;
    }

    BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

    friend bool operator==(const BiSeries& a, const BiSeries& b)
    {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Agreement on the common (u, x) window.
    bool agrees_with(const BiSeries& o) const
    {
        const int deg = std::min(u_degree(), o.u_degree());
        for (int i = 0; i <= deg; ++i) {
            if (!coeffs_[i].agrees_with(o.coeffs_[i])) {
                return false;
            }
        }
        return true;
    }

    std::string to_string() const
    {
        std::string s;
        for (int i = 0; i <= u_degree(); ++i) {
            if (coeffs_[i].is_zero()) {
                continue;
            }
            s += "u^" + std::to_string(i) + ": " + coeffs_[i].to_string() + "\n";
        }
        return s;
    }

private:
    static int check_degree(int d)
    {
        if (d < 0) {
            throw std::invalid_argument("u-degree must be nonnegative");
        }
        return d;
    }

    template <class F>
    BiSeries map(F&& f) const
    {
        std::vector<LaurentSeries> out;
        out.reserve(coeffs_.size());
        int order = std::numeric_limits<int>::max();
        for (const auto& c : coeffs_) {
            out.push_back(f(c));
            order = std::min(order, out.back().order());
        }
        BiSeries r(u_degree(), order);
        for (std::size_t i = 0; i < out.size(); ++i) {
            r.coeffs_[i] = out[i].order() > order ? out[i].truncated(order) : out[i];
        }
        return r;
    }

    BiSeries& combine(const BiSeries& o, const Rational& sign)
    {
        if (o.u_degree() < u_degree()) {
            coeffs_.resize(o.u_degree() + 1);
        }
        for (int i = 0; i <= u_degree(); ++i) {
            coeffs_[i] += o.coeffs_[i] * sign;
        }
        narrow_to(std::min(order_, o.order_));
        return *this;
    }

    void narrow_to(int order)
    {
        order_ = order;
        for (auto& c : coeffs_) {
            if (c.order() > order) {
                c = c.truncated(order);
            }
        }
    }

    std::vector<LaurentSeries> coeffs_;
    int order_;
};

inline BiSeries biseries_mul(const BiSeries& a, const BiSeries& b) { return a * b; }

namespace detail {

inline void require_unit(const BiSeries& a, const char* op)
{
    const LaurentSeries& c0 = a[0];
    if (c0.terms().size() != 1 || c0.terms().begin()->first != 0 || c0.terms().begin()->second != 1) {
        throw std::invalid_argument(std::string(op) + " needs u^0 coefficient equal to 1");
    }
}

} // namespace detail

/// 1/a for a with u^0 coefficient 1.
inline BiSeries biseries_inverse(const BiSeries& a)
{
    detail::require_unit(a, "biseries_inverse");
    const int deg = a.u_degree();
    BiSeries w = BiSeries::one(deg, a.order());
    for (int m = 1; m <= deg; ++m) {
        LaurentSeries acc(a.order());
        for (int k = 1; k <= m; ++k) {
            if (!a[k].is_zero() && !w[m - k].is_zero()) {
                acc += a[k] * w[m - k];
            }
        }
        w.set(m, -acc);
    }
    return w;
}

/// u-adic logarithm of a = 1 + O(u).
inline BiSeries biseries_log(const BiSeries& a)
{
    detail::require_unit(a, "biseries_log");
    const int deg = a.u_degree();
    BiSeries l(deg, a.order());
    // a l' = a' in u  =>  m l_m = m a_m - sum_{0<k<m} k l_k a_{m-k}.
    for (int m = 1; m <= deg; ++m) {
        LaurentSeries acc = a[m] * Rational(m);
        for (int k = 1; k < m; ++k) {
            if (!l[k].is_zero() && !a[m - k].is_zero()) {
                acc -= l[k] * a[m - k] * Rational(k);
            }
        }
        l.set(m, acc * Rational(1, m));
    }
    return l;
}

/// u-adic exponential of l = O(u).
inline BiSeries biseries_exp(const BiSeries& l)
{
    if (!l[0].is_zero()) {
        throw std::invalid_argument("biseries_exp needs a vanishing u^0 coefficient");
    }
    const int deg = l.u_degree();
    BiSeries e = BiSeries::one(deg, l.order());
    for (int m = 1; m <= deg; ++m) {
        LaurentSeries acc(l.order());
        for (int k = 1; k <= m; ++k) {
            if (!l[k].is_zero() && !e[m - k].is_zero()) {
                acc += l[k] * e[m - k] * Rational(k);
            }
        }
        e.set(m, acc * Rational(1, m));
    }
    return e;
}

/// a^p = exp(p log a); u-adic, so any exponent degree is allowed. The
/// x-order drops by deg p, and positive q-powers may appear in the result.
inline BiSeries biseries_pow_poly(const BiSeries& a, const QPolynomial& p)
{
    detail::require_unit(a, "biseries_pow_poly");
    if (p.is_zero()) {
        return BiSeries::one(a.u_degree(), a.order());
    }
    return biseries_exp(biseries_log(a) * p);
}

} // namespace cgprob

#endif
