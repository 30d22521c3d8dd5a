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

#ifndef CGPROB_TRANSFORMS_HPP
#define CGPROB_TRANSFORMS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biseries.hpp"
#include "counts.hpp"
#include "errors.hpp"
#include "laurent_series.hpp"
#include "power_series.hpp"

namespace cgprob {

enum class FormKind {
    Plain,     // factors (1 - x^i)
    PlusMinus, // factors (1 - x^i) / (1 + x^i)
};

/// f = prod_{i=1}^{order} factor_i^{b_i} modulo x^{order+1}.
struct ProductForm {
    FormKind kind = FormKind::Plain;
    int order = 0;
    std::vector<Rational> exponents; // exponents[i-1] = b_i

    const Rational& b(int i) const { return exponents.at(i - 1); }
    bool is_integral() const
    {
        for (const auto& e : exponents) {
            if (!is_integer(e)) return false;
        }
        return true;
    }
};

/// f = prod_{i,j>=1} factor_{ij}^{b_ij} modulo u^{D+1} and x^{order+1}.
struct BiProductForm {
    FormKind kind = FormKind::Plain;
    int u_degree = 0;
    int order = 0;
    std::map<std::pair<int, int>, Rational> exponents; // nonzero b_ij only

    Rational b(int i, int j) const
    {
        auto it = exponents.find({i, j});
        return it == exponents.end() ? Rational(0) : it->second;
    }
    bool is_integral() const
    {
        for (const auto& [k, e] : exponents) {
            if (!is_integer(e)) return false;
        }
        return true;
    }
};

namespace detail {

/// factor(t)^b with t = x^step, as a series.
inline RationalSeries factor_power(FormKind kind, int step, const Rational& b, int order)
{
    RationalSeries r = binomial_power(step, -1, b, order);
    if (kind == FormKind::PlusMinus) {
        r *= binomial_power(step, 1, Rational(-b), order);
    }
    return r;
}

inline RationalSeries to_dense(const LaurentSeries& f)
{
    if (f.has_principal_part()) {
        throw std::invalid_argument("product forms need a power series in q^-1");
    }
    return RationalSeries::from_coefficients(f.coefficients(), f.order());
}

} // namespace detail

inline ProductForm to_product_form(const RationalSeries& f)
{
    if (f[0] != 1) {
        throw std::invalid_argument("to_product_form needs constant term 1");
    }
    const int n = f.order();
    ProductForm pf{FormKind::Plain, n, {}};
    RationalSeries partial = RationalSeries::one(n);
    for (int i = 1; i <= n; ++i) {
        const Rational b = partial[i] - f[i];
        pf.exponents.push_back(b);
        if (b != 0) {
            partial *= detail::factor_power(FormKind::Plain, i, b, n);
        }
    }
    return pf;
}

inline ProductForm to_product_form(const LaurentSeries& f) { return to_product_form(detail::to_dense(f)); }

/// Needs every a_i (i >= 1) to be an even integer; the first odd one is
/// reported through parity_error.
inline ProductForm to_pm_product_form(const RationalSeries& f)
{
    if (f[0] != 1) {
        throw std::invalid_argument("to_pm_product_form needs constant term 1");
    }
    const int n = f.order();
    for (int i = 1; i <= n; ++i) {
        if (!is_even_integer(f[i])) {
            throw parity_error("coefficient " + std::to_string(i) + " is not an even integer", i);
        }
    }
    ProductForm pf{FormKind::PlusMinus, n, {}};
    RationalSeries partial = RationalSeries::one(n);
    for (int i = 1; i <= n; ++i) {
        const Rational b = (partial[i] - f[i]) / 2;
        pf.exponents.push_back(b);
        if (b != 0) {
            partial *= detail::factor_power(FormKind::PlusMinus, i, b, n);
        }
    }
    return pf;
}

inline ProductForm to_pm_product_form(const LaurentSeries& f) { return to_pm_product_form(detail::to_dense(f)); }

inline RationalSeries from_product_form(const ProductForm& pf)
{
    RationalSeries r = RationalSeries::one(pf.order);
    for (int i = 1; i <= static_cast<int>(pf.exponents.size()); ++i) {
        if (pf.b(i) != 0) {
            r *= detail::factor_power(pf.kind, i, pf.b(i), pf.order);
        }
    }
    return r;
}

namespace detail {

/// Dense (u-degree, x-degree) grid.
using Grid = std::vector<std::vector<Rational>>;

inline Grid grid_one(int D, int n)
{
    Grid g(D + 1, std::vector<Rational>(n + 1));
    g[0][0] = 1;
    return g;
}

inline Grid grid_mul(const Grid& a, const Grid& b)
{
    const int D = static_cast<int>(a.size()) - 1;
    const int n = static_cast<int>(a[0].size()) - 1;
    Grid r(D + 1, std::vector<Rational>(n + 1));
    for (int i1 = 0; i1 <= D; ++i1) {
        for (int j1 = 0; j1 <= n; ++j1) {
            if (a[i1][j1] == 0) continue;
            for (int i2 = 0; i1 + i2 <= D; ++i2) {
                for (int j2 = 0; j1 + j2 <= n; ++j2) {
                    if (b[i2][j2] != 0) {
                        r[i1 + i2][j1 + j2] += a[i1][j1] * b[i2][j2];
                    }
                }
            }
        }
    }
    return r;
}

/// factor(u^i x^j)^b on a (D, n) grid.
inline Grid grid_factor_power(FormKind kind, int i, int j, const Rational& b, int D, int n)
{
    const int steps = std::min(D / i, n / j);
    const RationalSeries t = factor_power(kind, 1, b, steps);
    Grid g(D + 1, std::vector<Rational>(n + 1));
    for (int k = 0; k <= steps; ++k) {
        g[k * i][k * j] = t[k];
    }
    return g;
}

inline Grid to_grid(const BiSeries& f)
{
    const int D = f.u_degree();
    const int n = f.order();
    Grid g(D + 1, std::vector<Rational>(n + 1));
    for (int i = 0; i <= D; ++i) {
        if (f[i].has_principal_part()) {
            throw std::invalid_argument("bivariate product forms need power series in q^-1");
        }
        for (const auto& [e, c] : f[i].terms()) {
            g[i][e] = c;
        }
    }
    if (g[0][0] != 1) {
        throw std::invalid_argument("bivariate product forms need constant term 1");
    }
    for (int i = 0; i <= D; ++i) {
        for (int j = 0; j <= n; ++j) {
            if ((i == 0) != (j == 0) && g[i][j] != 0) {
                throw std::invalid_argument("bivariate product forms need terms u^i q^-j with i, j >= 1");
            }
        }
    }
    return g;
}

inline BiProductForm to_biproduct(const BiSeries& f, FormKind kind)
{
    const Grid a = to_grid(f);
    const int D = f.u_degree();
    const int n = f.order();
    if (kind == FormKind::PlusMinus) {
        for (int i = 1; i <= D; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (!is_even_integer(a[i][j])) {
                    throw parity_error("coefficient of u^" + std::to_string(i) + " q^-" + std::to_string(j) +
                                           " is not an even integer",
                                       i);
                }
            }
        }
    }
    BiProductForm pf{kind, D, n, {}};
    Grid partial = grid_one(D, n);
    // Factors of total degree t leave every other coefficient of degree t alone.
    for (int t = 2; t <= D + n; ++t) {
        std::vector<std::pair<std::pair<int, int>, Rational>> level;
        for (int i = std::max(1, t - n); i <= std::min(D, t - 1); ++i) {
            const int j = t - i;
            Rational b = partial[i][j] - a[i][j];
            if (kind == FormKind::PlusMinus) {
                b /= 2;
            }
            if (b != 0) {
                level.push_back({{i, j}, b});
            }
        }
        for (const auto& [ij, b] : level) {
            pf.exponents[ij] = b;
            partial = grid_mul(partial, grid_factor_power(kind, ij.first, ij.second, b, D, n));
        }
    }
    return pf;
}

} // namespace detail

inline BiProductForm to_biproduct_form(const BiSeries& f) { return detail::to_biproduct(f, FormKind::Plain); }
inline BiProductForm to_pm_biproduct_form(const BiSeries& f) { return detail::to_biproduct(f, FormKind::PlusMinus); }

inline BiSeries from_biproduct_form(const BiProductForm& pf)
{
    detail::Grid g = detail::grid_one(pf.u_degree, pf.order);
    for (const auto& [ij, b] : pf.exponents) {
        g = detail::grid_mul(g, detail::grid_factor_power(pf.kind, ij.first, ij.second, b, pf.u_degree, pf.order));
    }
    BiSeries r(pf.u_degree, pf.order);
    for (int i = 0; i <= pf.u_degree; ++i) {
        r.set(i, LaurentSeries::from_coefficients(g[i], pf.order));
    }
    return r;
}

/// Whether a finite set of pairs is closed under addition within [1..D] x [1..n].
inline bool support_closed_under_addition(const std::vector<std::pair<int, int>>& s, int D, int n)
{
    std::map<std::pair<int, int>, bool> in;
    for (const auto& p : s) in[p] = true;
    for (const auto& a : s) {
        for (const auto& b : s) {
            const std::pair<int, int> c{a.first + b.first, a.second + b.second};
            if (c.first <= D && c.second <= n && !in.count(c)) {
                return false;
            }
        }
    }
    return true;
}

// Identities between infinite products over irreducible-polynomial counts
// and rational functions in x, with coefficients polynomial in q.

namespace detail {

inline PolySeries poly_factor(int d, int sign, const QPolynomial& e, int n) { return binomial_power(d, sign, e, n); }

inline PolySeries pm_factor(int d, const QPolynomial& e, int n)
{
    return binomial_power(d, -1, e, n) * binomial_power(d, 1, -e, n);
}

inline PolySeries linear(const QPolynomial& c0, const QPolynomial& c1, int n)
{
    return PolySeries::from_coefficients({c0, c1}, n);
}

inline PolySeries power_of(const PolySeries& s, int k)
{
    PolySeries r = PolySeries::one(s.order());
    for (int i = 0; i < k; ++i) r *= s;
    return r;
}

} // namespace detail

/// Left and right sides of identity which in {a..f} through x^n.
inline std::pair<PolySeries, PolySeries> identity_sides(char which, int n, CharParity parity)
{
    if (n < 1) {
        throw std::invalid_argument("identity_sides needs n >= 1");
    }
    using detail::linear;
    const QPolynomial q = QPolynomial::q();
    const QPolynomial one(1);
    const int e = e_value(parity);
    PolySeries lhs = PolySeries::one(n);
    PolySeries rhs = PolySeries::one(n);
    const PolySeries one_minus_qx = linear(one, -q, n);
    const PolySeries one_minus_x = linear(one, QPolynomial(-1), n);
    const PolySeries one_plus_x = linear(one, one, n);
    switch (which) {
    case 'a':
        for (int d = 1; d <= n; ++d) lhs *= detail::poly_factor(d, -1, count_N(d), n);
        rhs = one_minus_qx * one_minus_x.inverse();
        break;
    case 'b':
        for (int d = 1; d <= n; d += 2) lhs *= detail::poly_factor(d, -1, count_Ntilde(d), n);
        for (int d = 1; 2 * d <= n; ++d) lhs *= detail::poly_factor(2 * d, -1, count_Mtilde(d), n);
        rhs = one_minus_qx * one_plus_x.inverse();
        break;
    case 'c':
        for (int d = 1; d <= n; d += 2) lhs *= detail::pm_factor(d, count_Ntilde(d), n);
        rhs = one_minus_x * one_minus_qx * (one_plus_x * linear(one, q, n)).inverse();
        break;
    case 'd':
        for (int d = 1; d <= n; ++d) {
            lhs *= detail::poly_factor(d, -1, count_Nstar(2 * d, parity), n);
            lhs *= detail::poly_factor(d, -1, count_Mstar(d, parity), n);
        }
        rhs = one_minus_qx * detail::power_of(one_minus_x, e).inverse();
        break;
    case 'e':
        for (int d = 1; d <= n; ++d) lhs *= detail::pm_factor(d, count_Nstar(2 * d, parity), n);
        rhs = one_minus_qx * detail::power_of(one_minus_x, e - 1).inverse();
        break;
    case 'f':
        for (int d = 1; d <= n; ++d) {
            lhs *= detail::poly_factor(d, -1, count_Nstar(2 * d, parity), n);
            lhs *= detail::poly_factor(d, 1, count_Mstar(d, parity), n);
        }
        rhs = PolySeries::from_coefficients({one, QPolynomial(0), -q}, n) *
              (detail::power_of(one_minus_x, e - 1) * detail::power_of(one_plus_x, e)).inverse();
        break;
    default:
        throw std::invalid_argument(std::string("unknown identity '") + which + "'");
    }
    return {lhs, rhs};
}

inline bool verify_identity(char which, int n, CharParity parity = CharParity::Odd)
{
    const auto [lhs, rhs] = identity_sides(which, n, parity);
    return lhs == rhs;
}

} // namespace cgprob

#endif
