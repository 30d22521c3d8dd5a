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

#ifndef CGPROB_TOOLS_SUITES_HPP
#define CGPROB_TOOLS_SUITES_HPP

#include <functional>
#include <string>
#include <vector>

#include "cgprob/genfun.hpp"
#include "cgprob/oracle.hpp"
#include "cgprob/partitions.hpp"
#include "cgprob/stabilization.hpp"
#include "cgprob/transforms.hpp"

namespace cgprob::cli {

struct CheckResult {
    std::string name;
    bool ok = false;
    bool inconclusive = false;
    std::string detail;
};

struct SuiteOptions {
    int order = 9;
    int dmax = 4;
};

inline std::vector<LambdaSpec> integrality_specs()
{
    return {LambdaSpec::separable(), LambdaSpec::cyclic(), LambdaSpec::semisimple(), LambdaSpec::all(),
            LambdaSpec::explicit_set({Partition{1}, Partition{2, 1}}),
            LambdaSpec::explicit_set({Partition{1}, Partition{3}})};
}

inline std::vector<CheckResult> suite_identities(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (char w : std::string("abcdef")) {
        const bool parity_matters = w >= 'd';
        for (CharParity p : {CharParity::Even, CharParity::Odd}) {
            if (!parity_matters && p == CharParity::Even) continue;
            std::string name = std::string("identity (") + w + ")";
            if (parity_matters) name += std::string(" e=") + (p == CharParity::Even ? "1" : "2");
            out.push_back({name, verify_identity(w, o.order, p), false, "x-order " + std::to_string(o.order)});
        }
    }
    return out;
}

inline std::vector<CheckResult> suite_integrality(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (const auto& spec : integrality_specs()) {
        for (GroupKind g : {GroupKind::GL, GroupKind::U, GroupKind::Sp}) {
            for (CharParity p : {CharParity::Even, CharParity::Odd}) {
                if (g != GroupKind::Sp && p == CharParity::Even) continue;
                bool ok = limit_prob(g, spec, o.order, p).series.is_integral();
                const BiSeries ci = cycle_index_series(g, spec, o.dmax, o.order, p);
                ok = ok && ci.is_integral();
                std::string name = std::string("integral ") + to_string(g) + " " + spec.name();
                if (g == GroupKind::Sp) name += std::string(" ") + to_string(p);
                out.push_back({name, ok, false, ""});
            }
        }
    }
    return out;
}

inline std::vector<CheckResult> suite_parity(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (const auto& spec : integrality_specs()) {
        const ParityReport r = parity_check(spec, o.order);
        out.push_back({"gl = u mod 2 " + spec.name(), r.ok, false,
                       r.first_offending ? "first offending q^-" + std::to_string(*r.first_offending) : ""});
    }
    return out;
}

inline std::vector<CheckResult> suite_stong(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n = 1; n <= std::max(o.dmax, 6); ++n) {
        out.push_back({"stong gl n=" + std::to_string(n), stong_sum(n, Flavor::GL), false, ""});
        out.push_back({"stong u n=" + std::to_string(n), stong_sum(n, Flavor::U), false, ""});
    }
    return out;
}

inline CheckResult scan_check(GroupKind g, const LambdaSpec& spec, int d_max, int order)
{
    const StabilizationReport r = stabilization_scan(g, spec, d_max, order);
    std::string detail = r.rule;
    for (const auto& row : r.rows) {
        if (!row.ok) detail += "; d=" + std::to_string(row.d) + " unstable at " + std::to_string(*row.first_unstable);
    }
    return {std::string("stability ") + to_string(g) + " " + spec.name(), r.ok(), false, detail};
}

inline std::vector<CheckResult> suite_stabilization(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    bool f_ok = f_as(0, 1) == -1 && f_as(0, 2) == 1;
    for (int a = 0; a <= 12; ++a)
        for (int s = 1; s <= 12; ++s) f_as(a, s); // throws if non-integral
    out.push_back({"F(a,s) integral, F(0,1) = -1, F(0,2) = 1", f_ok, false, ""});
    out.push_back({"s_gl product formula", s_gl_product_check(o.dmax, o.order), false, ""});
    const DifferenceReport dr = difference_identities(o.dmax, o.order);
    out.push_back({"difference identity gl", dr.gl, false, ""});
    out.push_back({"difference identity u", dr.u, false, ""});
    out.push_back({"functional equation s_u", dr.functional_equation, false, ""});
    for (GroupKind g : {GroupKind::GL, GroupKind::U}) {
        out.push_back(scan_check(g, LambdaSpec::separable(), o.dmax, o.order));
        out.push_back(scan_check(g, LambdaSpec::cyclic(), o.dmax, o.order));
    }
    out.push_back(scan_check(GroupKind::GL, LambdaSpec::semisimple(), o.dmax, o.order));
    out.push_back(scan_check(GroupKind::GL, LambdaSpec::explicit_set({Partition{2}}), o.dmax, o.order));
    const auto sep = sigma_with_one(LambdaSpec::separable());
    const auto cyc = sigma_with_one(LambdaSpec::cyclic());
    const auto ss = sigma_with_one(LambdaSpec::semisimple());
    out.push_back({"sigma separable, cyclic, semisimple",
                   sep.value == Rational(1, 2) && cyc.value == 1 && ss.value == Rational(1, 2),
                   sep.inconclusive || cyc.inconclusive || ss.inconclusive, ""});
    const auto two = sigma_without_one(LambdaSpec::explicit_set({Partition{2}}));
    out.push_back({"sigma {(2)}", two.value == Rational(1, 2) && two.exact, false, ""});
    return out;
}

struct OracleCase {
    GroupKind group;
    int d;
    int q;
};

inline std::vector<OracleCase> oracle_cases()
{
    return {{GroupKind::GL, 1, 2}, {GroupKind::GL, 2, 2}, {GroupKind::GL, 3, 2}, {GroupKind::GL, 4, 2},
            {GroupKind::GL, 1, 3}, {GroupKind::GL, 2, 3}, {GroupKind::GL, 3, 3}, {GroupKind::U, 1, 2},
            {GroupKind::U, 2, 2},  {GroupKind::Sp, 1, 2}, {GroupKind::Sp, 1, 3}};
}

inline std::vector<CheckResult> suite_oracle(const SuiteOptions&)
{
    std::vector<CheckResult> out;
    for (const auto& c : oracle_cases()) {
        for (const auto& spec : {LambdaSpec::separable(), LambdaSpec::cyclic(), LambdaSpec::semisimple(), LambdaSpec::all()}) {
            const auto census_result = oracle::census(c.group, c.d, c.q, spec);
            const Rational exact = finite_prob_exact(c.group, c.d, spec, c.q);
            out.push_back({std::string("census ") + to_string(c.group) + " d=" + std::to_string(c.d) +
                               " q=" + std::to_string(c.q) + " " + spec.name(),
                           census_result.ratio() == exact, false,
                           to_string(census_result.ratio()) + " vs " + to_string(exact)});
        }
    }
    return out;
}

inline std::vector<std::string> suite_names()
{
    return {"identities", "integrality", "parity", "stong", "stabilization", "oracle"};
}

inline std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& o)
{
    if (name == "identities") return suite_identities(o);
    if (name == "integrality") return suite_integrality(o);
    if (name == "parity") return suite_parity(o);
    if (name == "stong") return suite_stong(o);
    if (name == "stabilization") return suite_stabilization(o);
    if (name == "oracle") return suite_oracle(o);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, o);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite " + name);
}

} // namespace cgprob::cli

#endif
