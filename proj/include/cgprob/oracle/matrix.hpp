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

#ifndef CGPROB_ORACLE_MATRIX_HPP
#define CGPROB_ORACLE_MATRIX_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"
#include "polynomial.hpp"

namespace cgprob::oracle {

/// Square matrix over a Field, row-major.
class MatrixFq {
public:
    MatrixFq(const Field& F, int n) : F_(&F), n_(n), a_(static_cast<std::size_t>(n) * n, 0)
    {
        if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    static MatrixFq identity(const Field& F, int n)
    {
        MatrixFq m(F, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static MatrixFq from_rows(const Field& F, const std::vector<std::vector<int>>& rows)
    {
        MatrixFq m(F, static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.n_) throw std::invalid_argument("matrix rows must be square");
            for (int j = 0; j < m.n_; ++j) {
                if (rows[i][j] < 0 || rows[i][j] >= F.q()) throw std::invalid_argument("matrix entry out of range");
                m(i, j) = static_cast<Elem>(rows[i][j]);
            }
        }
        return m;
    }

    /// Companion matrix of a monic polynomial.
    static MatrixFq companion(const Field& F, const FqPoly& f)
    {
        const int n = degree(f);
        MatrixFq m(F, n);
        for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
        for (int i = 0; i < n; ++i) m(i, n - 1) = F.neg(f[i]);
        return m;
    }

    const Field& field() const noexcept { return *F_; }
    int dim() const noexcept { return n_; }
    Elem& operator()(int i, int j) { return a_[i * n_ + j]; }
    Elem operator()(int i, int j) const { return a_[i * n_ + j]; }
    std::vector<Elem>& data() noexcept { return a_; }

    friend MatrixFq operator*(const MatrixFq& x, const MatrixFq& y)
    {
        const Field& F = *x.F_;
        MatrixFq r(F, x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const Elem c = x(i, k);
                if (c == 0) continue;
                for (int j = 0; j < x.n_; ++j) r(i, j) = F.add(r(i, j), F.mul(c, y(k, j)));
            }
        return r;
    }

    friend MatrixFq operator+(MatrixFq x, const MatrixFq& y)
    {
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] = x.F_->add(x.a_[i], y.a_[i]);
        return x;
    }

    MatrixFq scaled(Elem c) const
    {
        MatrixFq r = *this;
        for (auto& e : r.a_) e = F_->mul(e, c);
        return r;
    }

    friend bool operator==(const MatrixFq& x, const MatrixFq& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

    MatrixFq transpose() const
    {
        MatrixFq r(*F_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Entrywise x -> x^e (a field automorphism when e is a power of p).
    MatrixFq frobenius(int e) const
    {
        MatrixFq r = *this;
        for (auto& x : r.a_) x = F_->pow(x, e);
        return r;
    }

    int rank() const
    {
        std::vector<Elem> m = a_;
        const Field& F = *F_;
        int r = 0;
        for (int c = 0; c < n_ && r < n_; ++c) {
            int piv = -1;
            for (int i = r; i < n_; ++i)
                if (m[i * n_ + c] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            for (int j = 0; j < n_; ++j) std::swap(m[r * n_ + j], m[piv * n_ + j]);
            const Elem inv = F.inv(m[r * n_ + c]);
            for (int j = 0; j < n_; ++j) m[r * n_ + j] = F.mul(m[r * n_ + j], inv);
            for (int i = 0; i < n_; ++i) {
                if (i == r || m[i * n_ + c] == 0) continue;
                const Elem f = m[i * n_ + c];
                for (int j = 0; j < n_; ++j) m[i * n_ + j] = F.sub(m[i * n_ + j], F.mul(f, m[r * n_ + j]));
            }
            ++r;
        }
        return r;
    }

    MatrixFq inverse() const
    {
        const Field& F = *F_;
        MatrixFq m = *this;
        MatrixFq inv = identity(F, n_);
        for (int c = 0; c < n_; ++c) {
            int piv = -1;
            for (int i = c; i < n_; ++i)
                if (m(i, c) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw std::domain_error("singular matrix has no inverse");
            for (int j = 0; j < n_; ++j) {
                std::swap(m(c, j), m(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
            const Elem s = F.inv(m(c, c));
            for (int j = 0; j < n_; ++j) {
                m(c, j) = F.mul(m(c, j), s);
                inv(c, j) = F.mul(inv(c, j), s);
            }
            for (int i = 0; i < n_; ++i) {
                if (i == c || m(i, c) == 0) continue;
                const Elem f = m(i, c);
                for (int j = 0; j < n_; ++j) {
                    m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
                    inv(i, j) = F.sub(inv(i, j), F.mul(f, inv(c, j)));
                }
            }
        }
        return inv;
    }

    /// f(this), by Horner's rule.
    MatrixFq evaluate(const FqPoly& f) const
    {
        MatrixFq r(*F_, n_);
        const MatrixFq id = identity(*F_, n_);
        for (int i = degree(f); i >= 0; --i) {
            r = r * (*this) + id.scaled(f[i]);
        }
        return r;
    }

private:
    const Field* F_;
    int n_;
    std::vector<Elem> a_;
};

} // namespace cgprob::oracle

#endif
