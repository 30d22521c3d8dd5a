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

#ifndef CGPROB_LAURENT_SERIES_HPP
#define CGPROB_LAURENT_SERIES_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "qpolynomial.hpp"
#include "rational.hpp"

namespace cgprob {

/// Truncated series in x = q^-1 with exact rational coefficients.
///
/// Coefficients of x^j are exact for j <= order() and unknown beyond it.
/// Negative exponents (positive powers of q) are allowed, so a finite
/// principal part can ride along through intermediate computations.
class LaurentSeries {
public:
    using Terms = std::map<int, Rational>;

    explicit LaurentSeries(int order = 0) : order_(order) {}

    static LaurentSeries one(int order) { return monomial(0, Rational(1), order); }

    static LaurentSeries monomial(int exponent, const Rational& c, int order)
    {
        LaurentSeries s(order);
        if (exponent <= order) {
            s.set(exponent, c);
        }
        return s;
    }

    /// c[0] + c[1] x + ... ; entries past `order` are dropped.
    static LaurentSeries from_coefficients(const std::vector<Rational>& c, int order)
    {
        LaurentSeries s(order);
        for (int j = 0; j < static_cast<int>(c.size()) && j <= order; ++j) {
            s.set(j, c[j]);
        }
        return s;
    }

    /// The polynomial p(q) viewed as a series in x: q^k becomes x^-k.
    static LaurentSeries from_polynomial(const QPolynomial& p, int order)
    {
        LaurentSeries s(order);
        for (const auto& [e, c] : p.terms()) {
            if (-e <= order) {
                s.set(-e, c);
            }
        }
        return s;
    }

    int order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    int min_exponent() const noexcept { return terms_.empty() ? 0 : std::min(0, terms_.begin()->first); }
    bool has_principal_part() const noexcept { return !terms_.empty() && terms_.begin()->first < 0; }

    /// Lowest exponent with a nonzero coefficient, or order()+1 if none is known.
    int valuation() const noexcept { return terms_.empty() ? order_ + 1 : terms_.begin()->first; }

    Rational coefficient(int exponent) const
    {
        if (exponent > order_) {
            throw std::out_of_range("coefficient beyond truncation order");
        }
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Dense coefficients of x^0..x^order(); the principal part must be empty.
    std::vector<Rational> coefficients() const
    {
        if (has_principal_part()) {
            throw std::domain_error("series has a principal part");
        }
        std::vector<Rational> out(std::max(order_ + 1, 0));
        for (const auto& [e, c] : terms_) {
            out[e] = c;
        }
        return out;
    }

    bool is_integral() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
    }

    LaurentSeries truncated(int order) const
    {
        if (order > order_) {
            throw std::invalid_argument("truncation order can only be narrowed");
        }
        LaurentSeries s(order);
        for (const auto& [e, c] : terms_) {
            if (e > order) {
                break;
            }
            s.terms_.emplace(e, c);
        }
        return s;
    }

    /// Multiply by x^k.
    LaurentSeries shifted(int k) const
    {
        LaurentSeries s(order_ + k);
        for (const auto& [e, c] : terms_) {
            s.terms_.emplace(e + k, c);
        }
        return s;
    }

    /// x -> x^k, i.e. q -> q^k.
    LaurentSeries substitute_power(int k) const
    {
        if (k < 1) {
            throw std::invalid_argument("substitute_power needs k >= 1");
        }
        LaurentSeries s(k * (order_ + 1) - 1);
        for (const auto& [e, c] : terms_) {
            s.terms_.emplace(e * k, c);
        }
        return s;
    }

    /// x -> -x, i.e. q -> -q.
    LaurentSeries negate_variable() const
    {
        LaurentSeries s = *this;
        for (auto& [e, c] : s.terms_) {
            if (e % 2 != 0) {
                c = -c;
            }
        }
        return s;
    }

    /// Sum of the retained terms at x = x0.
    Rational evaluate(const Rational& x0) const
    {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational p = 1;
            const Rational base = e < 0 ? Rational(1 / x0) : x0;
            for (int i = 0; i < std::abs(e); ++i) {
                p *= base;
            }
            acc += c * p;
        }
        return acc;
    }

    LaurentSeries& operator+=(const LaurentSeries& o) { return combine(o, Rational(1)); }
    LaurentSeries& operator-=(const LaurentSeries& o) { return combine(o, Rational(-1)); }

    LaurentSeries& operator*=(const Rational& s)
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

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator-(LaurentSeries a) { return a *= Rational(-1); }
    friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
    friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
    {
        // An unknown term x^(na+1) of a meets b no lower than x^vb.
        const int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
        LaurentSeries r(order);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                if (ea + eb > order) {
                    break;
                }
                r.terms_[ea + eb] += ca * cb;
            }
        }
        r.prune();
        return r;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const QPolynomial& p)
    {
        if (p.is_zero()) {
            return LaurentSeries(a.order_);
        }
        const int order = a.order_ - p.degree();
        LaurentSeries r(order);
        for (const auto& [k, pk] : p.terms()) {
            for (const auto& [e, c] : a.terms_) {
                if (e - k > order) {
                    break;
                }
                r.terms_[e - k] += pk * c;
            }
        }
        r.prune();
        return r;
    }
    friend LaurentSeries operator*(const QPolynomial& p, const LaurentSeries& a) { return a * p; }

    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    /// Equal truncation orders and identical known coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b)
    {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// Agreement of all coefficients both operands know.
    bool agrees_with(const LaurentSeries& o) const
    {
        const int n = std::min(order_, o.order_);
        return truncated(n).terms_ == o.truncated(n).terms_;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) {
                os << (c < 0 ? " - " : " + ");
            } else if (c < 0) {
                os << "-";
            }
            Rational mag = c < 0 ? Rational(-c) : c;
            if (e == 0) {
                os << mag;
            } else {
                if (mag != 1) {
                    os << mag << "*";
                }
                os << "q^" << -e;
            }
            first = false;
        }
        if (first) {
            os << "0";
        }
        os << " + O(q^" << -(order_ + 1) << ")";
        return os.str();
    }

private:
    LaurentSeries& combine(const LaurentSeries& o, const Rational& sign)
    {
        order_ = std::min(order_, o.order_);
        while (!terms_.empty() && terms_.rbegin()->first > order_) {
            terms_.erase(std::prev(terms_.end()));
        }
        for (const auto& [e, c] : o.terms_) {
            if (e > order_) {
                break;
            }
            set(e, coefficient(e) + sign * c);
        }
        return *this;
    }

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
    int order_;
};

inline LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

/// 1/a for a with a known nonzero term; a = c x^v (1 + ...) gives order n - 2v.
inline LaurentSeries series_inverse(const LaurentSeries& a)
{
    if (a.is_zero()) {
        throw std::domain_error("inverse of a series with no known nonzero term");
    }
    const int v = a.valuation();
    const int unit_order = a.order() - v;
    const Rational c0 = a.coefficient(v);
    std::vector<Rational> u(unit_order + 1);
    for (const auto& [e, c] : a.terms()) {
        u[e - v] = c;
    }
    std::vector<Rational> w(unit_order + 1);
    w[0] = 1 / c0;
    for (int n = 1; n <= unit_order; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) {
            if (u[k] != 0 && w[n - k] != 0) {
                acc += u[k] * w[n - k];
            }
        }
        w[n] = -acc / c0;
    }
    return LaurentSeries::from_coefficients(w, unit_order).shifted(-v);
}

/// 1/p(q) expanded in x = q^-1 through x^order.
inline LaurentSeries series_reciprocal(const QPolynomial& p, int order)
{
    if (p.is_zero()) {
        throw std::domain_error("reciprocal of the zero polynomial");
    }
    if (order < p.degree()) {
        return LaurentSeries(order);
    }
    // p has valuation -deg p, so the input needs order + 2 deg p known terms;
    // a polynomial is exact, so any order is available.
    return series_inverse(LaurentSeries::from_polynomial(p, order - 2 * p.degree()));
}

/// log(a) = sum (-1)^(k+1) (a-1)^k / k for a = 1 + O(x).
inline LaurentSeries series_log(const LaurentSeries& a)
{
    if (a.has_principal_part() || a.order() < 0 || a.coefficient(0) != 1) {
        throw std::invalid_argument("series_log needs constant term 1 and no positive powers of q");
    }
    const int n = a.order();
    const std::vector<Rational> b = a.coefficients();
    std::vector<Rational> l(n + 1);
    // a l' = a'  =>  m l_m = m b_m - sum_{k<m} k l_k b_{m-k}.
    for (int m = 1; m <= n; ++m) {
        Rational acc = m * b[m];
        for (int k = 1; k < m; ++k) {
            if (l[k] != 0 && b[m - k] != 0) {
                acc -= k * l[k] * b[m - k];
            }
        }
        l[m] = acc / m;
    }
    return LaurentSeries::from_coefficients(l, n);
}

inline LaurentSeries series_exp(const LaurentSeries& a)
{
    if (a.valuation() < 1) {
        throw valuation_error("series_exp needs an argument of positive valuation", a.valuation());
    }
    const int n = a.order();
    const std::vector<Rational> l = a.coefficients();
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (l[k] != 0 && e[m - k] != 0) {
                acc += k * l[k] * e[m - k];
            }
        }
        e[m] = acc / m;
    }
    return LaurentSeries::from_coefficients(e, n);
}

/// a^p = exp(p log a) for a polynomial-in-q exponent p.
///
/// Needs valuation(a - 1) > deg p so that p log a stays in x Q[[x]].
/// The result is known to order(a) - deg p.
inline LaurentSeries series_pow_poly(const LaurentSeries& a, const QPolynomial& p)
{
    const LaurentSeries unit = LaurentSeries::one(a.order());
    if (a.has_principal_part() || a.order() < 0 || a.coefficient(0) != 1) {
        throw std::invalid_argument("series_pow_poly needs constant term 1 and no positive powers of q");
    }
    const int deg = std::max(p.degree(), 0);
    const int v = (a - unit).valuation();
    if (!p.is_zero() && v <= deg) {
        throw valuation_error("series_pow_poly: valuation " + std::to_string(v) +
                                  " of (a-1) does not exceed exponent degree " + std::to_string(deg),
                              deg);
    }
    if (p.is_zero() || v > a.order()) {
        return LaurentSeries::one(a.order() - deg);
    }
    return series_exp(series_log(a) * p);
}

} // namespace cgprob

#endif
