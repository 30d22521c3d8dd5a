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

#ifndef CGPROB_ORACLE_FIELD_HPP
#define CGPROB_ORACLE_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgprob::oracle {

/// Field element: sum_i digit_i t^i encoded base p, so 0 and 1 are the
/// field's zero and one and the prime subfield is {0, ..., p-1}.
using Elem = std::uint8_t;

/// Table-driven GF(q) for q in {2, 3, 4, 5, 7, 8, 9}.
class Field {
public:
    static bool supported(int q) { return index_of(q) >= 0; }

    static const Field& of(int q)
    {
        const int i = index_of(q);
        if (i < 0) {
            throw std::invalid_argument("unsupported field size " + std::to_string(q));
        }
        static const std::array<std::unique_ptr<Field>, 7> fields = [] {
            std::array<std::unique_ptr<Field>, 7> out;
            for (std::size_t k = 0; k < out.size(); ++k) {
                out[k].reset(new Field(sizes()[k]));
            }
            return out;
        }();
        return *fields[i];
    }

    int q() const noexcept { return q_; }
    int p() const noexcept { return p_; }
    int degree() const noexcept { return k_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const
    {
        if (a == 0) {
            throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
        }
        return inv_[a];
    }
    Elem pow(Elem a, long e) const
    {
        Elem r = 1;
        for (long i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    /// Image of the integer n in the prime subfield.
    Elem from_int(long n) const { return static_cast<Elem>(((n % p_) + p_) % p_); }

private:
    static const std::array<int, 7>& sizes()
    {
        static const std::array<int, 7> s{2, 3, 4, 5, 7, 8, 9};
        return s;
    }
    static int index_of(int q)
    {
        for (std::size_t i = 0; i < sizes().size(); ++i) {
            if (sizes()[i] == q) return static_cast<int>(i);
        }
        return -1;
    }

    explicit Field(int q) : q_(q)
    {
        // Conway-style moduli: t^2+t+1, t^3+t+1 over F2; t^2+1 over F3.
        std::vector<int> modulus; // low to high, monic
        switch (q) {
        case 4: p_ = 2; k_ = 2; modulus = {1, 1, 1}; break;
        case 8: p_ = 2; k_ = 3; modulus = {1, 1, 0, 1}; break;
        case 9: p_ = 3; k_ = 2; modulus = {1, 0, 1}; break;
        default: p_ = q; k_ = 1; modulus = {0, 1}; break;
        }
        auto digits = [&](int x) {
            std::vector<int> d(k_);
            for (int i = 0; i < k_; ++i, x /= p_) d[i] = x % p_;
            return d;
        };
        auto encode = [&](const std::vector<int>& d) {
            int x = 0;
            for (int i = k_ - 1; i >= 0; --i) x = x * p_ + ((d[i] % p_) + p_) % p_;
            return x;
        };
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.resize(q);
        for (int a = 0; a < q; ++a) {
            const auto da = digits(a);
            std::vector<int> na(k_);
            for (int i = 0; i < k_; ++i) na[i] = p_ - da[i];
            neg_[a] = static_cast<Elem>(encode(na));
            for (int b = 0; b < q; ++b) {
                const auto db = digits(b);
                std::vector<int> s(k_);
                for (int i = 0; i < k_; ++i) s[i] = da[i] + db[i];
                add_[a * q + b] = static_cast<Elem>(encode(s));
                std::vector<int> prod(2 * k_, 0);
                for (int i = 0; i < k_; ++i)
                    for (int j = 0; j < k_; ++j) prod[i + j] += da[i] * db[j];
                for (int i = 2 * k_ - 1; i >= k_; --i) {
                    const int c = prod[i] % p_;
                    prod[i] = 0;
                    for (int j = 0; j < k_; ++j) prod[i - k_ + j] -= c * modulus[j];
                }
                prod.resize(k_);
                mul_[a * q + b] = static_cast<Elem>(encode(prod));
            }
        }
        for (int a = 1; a < q; ++a) {
            for (int b = 1; b < q; ++b) {
                if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
            }
        }
    }

    int q_ = 0;
    int p_ = 0;
    int k_ = 1;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

} // namespace cgprob::oracle

#endif
