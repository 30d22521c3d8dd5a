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

#ifndef CGPROB_PARTITIONS_HPP
#define CGPROB_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "qpolynomial.hpp"

namespace cgprob {

enum class GroupKind { GL, U, Sp, OPlus, OMinus };

/// Which centralizer polynomial a sum over partitions uses.
enum class Flavor { GL, U };

inline const char* to_string(GroupKind g) noexcept
{
    switch (g) {
    case GroupKind::GL: return "gl";
    case GroupKind::U: return "u";
    case GroupKind::Sp: return "sp";
    case GroupKind::OPlus: return "o+";
    case GroupKind::OMinus: return "o-";
    }
    return "?";
}

inline GroupKind parse_group(std::string_view s)
{
    if (s == "gl") return GroupKind::GL;
    if (s == "u") return GroupKind::U;
    if (s == "sp") return GroupKind::Sp;
    if (s == "o+") return GroupKind::OPlus;
    if (s == "o-") return GroupKind::OMinus;
    throw std::invalid_argument("unknown group: " + std::string(s));
}

/// Integer partition a_1 >= a_2 >= ... > 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_) {
            if (p < 1) {
                throw std::invalid_argument("partition parts must be positive");
            }
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    int size() const noexcept
    {
        int s = 0;
        for (int p : parts_) {
            s += p;
        }
        return s;
    }

    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    bool is_one_part() const noexcept { return parts_.size() == 1; }

    /// m_i: number of parts equal to i, indexed 0..largest (m_0 = 0).
    std::vector<int> multiplicities() const
    {
        std::vector<int> m(largest() + 1, 0);
        for (int p : parts_) {
            ++m[p];
        }
        return m;
    }

    /// n_i = sum_{j >= i} m_j, i.e. the conjugate partition; index 0 unused.
    std::vector<int> conjugate_counts() const
    {
        std::vector<int> n(largest() + 1, 0);
        for (int p : parts_) {
            for (int i = 1; i <= p; ++i) {
                ++n[i];
            }
        }
        return n;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            s += (i ? "," : "") + std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// "[2,1]" -> (2,1).
inline Partition parse_partition(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument("partition must look like [a,b,...]: " + std::string(text));
    }
    text = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos || item.size() > 6) {
            throw std::invalid_argument("bad partition part: " + std::string(item));
        }
        parts.push_back(std::stoi(std::string(item)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    if (parts.empty()) {
        throw std::invalid_argument("empty partition");
    }
    return Partition(std::move(parts));
}

/// k(lambda) = 2 sum_{i<j} i m_i m_j + sum_i (i-1) m_i^2.
inline long k_lambda(const Partition& lambda)
{
    const auto m = lambda.multiplicities();
    long k = 0;
    for (std::size_t i = 1; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            k += 2L * static_cast<long>(i) * m[i] * m[j];
        }
        k += static_cast<long>(i - 1) * m[i] * m[i];
    }
    return k;
}

/// Degree of C_{GL,lambda}(q), cross-checked across its three closed forms.
inline long delta(const Partition& lambda)
{
    if (lambda.empty()) {
        throw std::invalid_argument("delta of the empty partition");
    }
    const auto m = lambda.multiplicities();
    long by_multiplicity = 0;
    for (std::size_t i = 1; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            by_multiplicity += 2L * static_cast<long>(i) * m[i] * m[j];
        }
        by_multiplicity += static_cast<long>(i) * m[i] * m[i];
    }
    long by_conjugate = 0;
    for (int n : lambda.conjugate_counts()) {
        by_conjugate += static_cast<long>(n) * n;
    }
    long by_parts = 0;
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        by_parts += static_cast<long>(2 * (i + 1) - 1) * lambda.parts()[i];
    }
    if (by_multiplicity != by_conjugate || by_conjugate != by_parts) {
        throw internal_error("delta formulas disagree for " + lambda.to_string());
    }
    return by_parts;
}

/// |GL(m,q)| = q^{C(m,2)} (q^m - 1) ... (q - 1).
inline QPolynomial gl_order(int m)
{
    QPolynomial r = QPolynomial::monomial(m * (m - 1) / 2, 1);
    for (int i = 1; i <= m; ++i) {
        r *= QPolynomial::monomial(i, 1) - QPolynomial(1);
    }
    return r;
}

/// |U(m,q)| = q^{C(m,2)} (q^m - (-1)^m) ... (q + 1).
inline QPolynomial u_order(int m)
{
    QPolynomial r = QPolynomial::monomial(m * (m - 1) / 2, 1);
    for (int i = 1; i <= m; ++i) {
        r *= QPolynomial::monomial(i, 1) - QPolynomial(i % 2 == 0 ? 1 : -1);
    }
    return r;
}

inline QPolynomial centralizer(const Partition& lambda, Flavor flavor)
{
    if (lambda.empty()) {
        throw std::invalid_argument("centralizer of the empty partition");
    }
    QPolynomial r = QPolynomial::monomial(static_cast<int>(k_lambda(lambda)), 1);
    const auto m = lambda.multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i] > 0) {
            r *= flavor == Flavor::GL ? gl_order(m[i]) : u_order(m[i]);
        }
    }
    return r;
}

inline QPolynomial c_gl(const Partition& lambda) { return centralizer(lambda, Flavor::GL); }
inline QPolynomial c_u(const Partition& lambda) { return centralizer(lambda, Flavor::U); }

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of n, lexicographically increasing on their part lists.
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 1) {
        throw std::invalid_argument("enumerate_partitions needs n >= 1");
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Checks sum_{|lambda|=n} 1/C_lambda(q) = q^{n(n-1)/2} / prod_{i<=n} (q^i -+ ...)
/// as a polynomial identity after clearing denominators.
inline bool stong_sum(int n, Flavor flavor)
{
    const auto parts = enumerate_partitions(n);
    std::vector<QPolynomial> c;
    c.reserve(parts.size());
    for (const auto& p : parts) {
        c.push_back(centralizer(p, flavor));
    }
    QPolynomial den(1);
    for (const auto& ci : c) {
        den *= ci;
    }
    QPolynomial num;
    for (std::size_t i = 0; i < c.size(); ++i) {
        QPolynomial term(1);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j != i) {
                term *= c[j];
            }
        }
        num += term;
    }
    QPolynomial rhs_den(1);
    for (int i = 1; i <= n; ++i) {
        const long sign = (flavor == Flavor::GL || i % 2 == 0) ? 1 : -1;
        rhs_den *= QPolynomial::monomial(i, 1) - QPolynomial(sign);
    }
    return num * rhs_den == QPolynomial::monomial(n * (n - 1) / 2, 1) * den;
}

enum class LambdaKind { All, Separable, Cyclic, Semisimple, ExplicitFinite, Predicate };

/// A set of partitions that can both test membership and enumerate members
/// of a given size.
class LambdaSpec {
public:
    using Predicate = std::function<bool(const Partition&)>;

    static LambdaSpec all() { return LambdaSpec(LambdaKind::All, "all"); }
    static LambdaSpec separable() { return LambdaSpec(LambdaKind::Separable, "separable"); }
    static LambdaSpec cyclic() { return LambdaSpec(LambdaKind::Cyclic, "cyclic"); }
    static LambdaSpec semisimple() { return LambdaSpec(LambdaKind::Semisimple, "semisimple"); }

    static LambdaSpec explicit_set(std::vector<Partition> members)
    {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (const auto& m : members) {
            if (m.empty()) {
                throw std::invalid_argument("explicit sets hold nonempty partitions");
            }
        }
        LambdaSpec s(LambdaKind::ExplicitFinite, "");
        std::string name = "set:";
        for (std::size_t i = 0; i < members.size(); ++i) {
            name += (i ? ";" : "") + members[i].to_string();
        }
        s.name_ = name;
        s.members_ = std::move(members);
        return s;
    }

    /// An arbitrary decidable set. `all_one_part` declares whether every
    /// one-part partition is a member; leave it empty if unknown.
    static LambdaSpec predicate(std::string name, Predicate fn, std::optional<bool> all_one_part = std::nullopt)
    {
        LambdaSpec s(LambdaKind::Predicate, std::move(name));
        s.predicate_ = std::move(fn);
        s.all_one_part_ = all_one_part;
        return s;
    }

    LambdaKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

    bool contains(const Partition& lambda) const
    {
        if (lambda.empty()) {
            return false;
        }
        switch (kind_) {
        case LambdaKind::All: return true;
        case LambdaKind::Separable: return lambda.parts() == std::vector<int>{1};
        case LambdaKind::Cyclic: return lambda.is_one_part();
        case LambdaKind::Semisimple: return lambda.largest() == 1;
        case LambdaKind::ExplicitFinite: return std::binary_search(members_.begin(), members_.end(), lambda);
        case LambdaKind::Predicate: return predicate_(lambda);
        }
        return false;
    }

    bool contains_one() const { return contains(Partition{1}); }

    /// Members of size n, lexicographically increasing.
    std::vector<Partition> enumerate(int n) const
    {
        if (n < 1) {
            return {};
        }
        switch (kind_) {
        case LambdaKind::All: return enumerate_partitions(n);
        case LambdaKind::Separable: return n == 1 ? std::vector<Partition>{Partition{1}} : std::vector<Partition>{};
        case LambdaKind::Cyclic: return {Partition{n}};
        case LambdaKind::Semisimple: return {Partition(std::vector<int>(n, 1))};
        case LambdaKind::ExplicitFinite: {
            std::vector<Partition> out;
            for (const auto& m : members_) {
                if (m.size() == n) {
                    out.push_back(m);
                }
            }
            return out;
        }
        case LambdaKind::Predicate: {
            std::vector<Partition> out;
            for (auto& p : enumerate_partitions(n)) {
                if (predicate_(p)) {
                    out.push_back(std::move(p));
                }
            }
            return out;
        }
        }
        return {};
    }

    /// Members with |lambda| <= max_size and delta(lambda) <= max_delta,
    /// ordered by size then lexicographically.
    std::vector<Partition> members_up_to(int max_size, long max_delta) const
    {
        std::vector<Partition> out;
        // delta(lambda) >= |lambda| bounds the sizes worth enumerating.
        const int limit = static_cast<int>(std::min<long>(max_size, max_delta));
        for (int n = 1; n <= limit; ++n) {
            for (auto& p : enumerate(n)) {
                if (delta(p) <= max_delta) {
                    out.push_back(std::move(p));
                }
            }
        }
        return out;
    }

    /// Whether every one-part partition (m) is a member, when the set says so.
    std::optional<bool> declares_all_one_part() const
    {
        switch (kind_) {
        case LambdaKind::All:
        case LambdaKind::Cyclic: return true;
        case LambdaKind::Separable:
        case LambdaKind::Semisimple:
        case LambdaKind::ExplicitFinite: return false;
        case LambdaKind::Predicate: return all_one_part_;
        }
        return std::nullopt;
    }

    bool is_finite() const noexcept { return kind_ == LambdaKind::Separable || kind_ == LambdaKind::ExplicitFinite; }

    /// Largest member size for finite sets.
    int max_member_size() const
    {
        if (kind_ == LambdaKind::Separable) {
            return 1;
        }
        if (kind_ != LambdaKind::ExplicitFinite) {
            throw std::logic_error("max_member_size on an infinite set");
        }
        int best = 0;
        for (const auto& m : members_) {
            best = std::max(best, m.size());
        }
        return best;
    }

private:
    LambdaSpec(LambdaKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    LambdaKind kind_;
    std::string name_;
    std::vector<Partition> members_;
    Predicate predicate_;
    std::optional<bool> all_one_part_;
};

/// "separable" | "cyclic" | "semisimple" | "all" | "set:[..];[..]".
inline LambdaSpec parse_lambda_spec(std::string_view text)
{
    if (text == "separable") return LambdaSpec::separable();
    if (text == "cyclic") return LambdaSpec::cyclic();
    if (text == "semisimple") return LambdaSpec::semisimple();
    if (text == "all") return LambdaSpec::all();
    if (text.substr(0, 4) == "set:") {
        text.remove_prefix(4);
        std::vector<Partition> members;
        while (!text.empty()) {
            auto semi = text.find(';');
            members.push_back(parse_partition(text.substr(0, semi)));
            if (semi == std::string_view::npos) {
                break;
            }
            text.remove_prefix(semi + 1);
        }
        if (members.empty()) {
            throw std::invalid_argument("empty partition set");
        }
        return LambdaSpec::explicit_set(std::move(members));
    }
    throw std::invalid_argument("unknown partition-set spec: " + std::string(text));
}

} // namespace cgprob

#endif
