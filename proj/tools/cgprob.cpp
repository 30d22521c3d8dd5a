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

// cgprob: coefficient tables and verification reports for Lambda-type
// probabilities in finite classical groups.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 inconclusive result, 4 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgprob/genfun.hpp"
#include "cgprob/partitions.hpp"
#include "output.hpp"
#include "suites.hpp"

namespace {

using namespace cgprob;
using cgprob::cli::OutputRecord;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternal = 4;

CharParity parse_parity(const std::string& s)
{
    if (s == "even") return CharParity::Even;
    if (s == "odd") return CharParity::Odd;
    throw std::invalid_argument("parity must be even or odd");
}

void emit(std::ostream& os, const std::vector<OutputRecord>& records, const std::string& format)
{
    if (format == "json") {
        if (records.size() == 1) {
            os << cli::to_json(records[0]).dump(2) << '\n';
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : records) arr.push_back(cli::to_json(r));
            os << arr.dump(2) << '\n';
        }
    } else if (format == "csv") {
        cli::write_csv(os, records);
    } else {
        cli::write_plain(os, records);
    }
}

OutputRecord limit_record(GroupKind g, const LambdaSpec& spec, int order, CharParity parity)
{
    if (g == GroupKind::OPlus || g == GroupKind::OMinus) {
        return cli::make_record(orth_probs(g == GroupKind::OPlus, std::nullopt, spec, order, parity));
    }
    return cli::make_record(limit_prob(g, spec, order, parity));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lambda-type probabilities in finite classical groups"};
    app.require_subcommand(1);

    std::string group = "gl", type = "separable", format = "json", parity = "odd";
    int order = 9;

    auto* limit = app.add_subcommand("limit", "limiting probability as a series in 1/q");
    limit->add_option("--group", group, "gl|u|sp|o+|o-")->required();
    limit->add_option("--type", type, "separable|cyclic|semisimple|all|set:[..];[..]")->required();
    limit->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
    limit->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "plain"}));
    limit->add_option("--parity", parity, "parity of q for sp and o+/-")->check(CLI::IsMember({"even", "odd"}));

    int dim = 1;
    std::optional<long> at_q;
    auto* finite = app.add_subcommand("finite", "probability in a fixed dimension");
    finite->add_option("--group", group, "gl|u|sp|o+|o-")->required();
    finite->add_option("--dim", dim, "d; sp and o+/- act in dimension 2d")->required()->check(CLI::PositiveNumber);
    finite->add_option("--type", type)->required();
    finite->add_option("--order", order)->check(CLI::NonNegativeNumber);
    finite->add_option("--at-q", at_q, "exact value at this prime power")->check(CLI::Range(2L, 1L << 30));
    finite->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "plain"}));
    finite->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));

    std::string suite = "all";
    int dmax = 4;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"identities", "integrality", "parity", "stong", "stabilization", "oracle", "all"}));
    verify->add_option("--order", order)->check(CLI::PositiveNumber);
    verify->add_option("--dmax", dmax)->check(CLI::PositiveNumber);

    std::vector<std::string> groups{"gl", "u"}, types{"separable", "cyclic", "semisimple"};
    std::string out_path;
    auto* table = app.add_subcommand("table", "cross product of groups and types");
    table->add_option("--groups", groups)->delimiter(',');
    table->add_option("--types", types)->delimiter(',');
    table->add_option("--order", order)->check(CLI::NonNegativeNumber);
    table->add_option("--out", out_path, "write CSV here instead of stdout");
    table->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*limit) {
            const auto g = parse_group(group);
            const auto spec = parse_lambda_spec(type);
            emit(std::cout, {limit_record(g, spec, order, parse_parity(parity))}, format);
        } else if (*finite) {
            const auto g = parse_group(group);
            const auto spec = parse_lambda_spec(type);
            if (at_q) {
                OutputRecord r;
                r.group = to_string(g);
                r.lambda = spec.name();
                r.dimension = dim;
                r.order = 0;
                r.coefficients = {finite_prob_exact(g, dim, spec, Integer(*at_q))};
                r.provenance = "exact-q";
                r.q = *at_q;
                if (g == GroupKind::Sp || g == GroupKind::OPlus || g == GroupKind::OMinus) {
                    r.parity = to_string(parity_of(Integer(*at_q)));
                }
                if (format == "plain") {
                    std::cout << to_string(r.coefficients[0]) << '\n';
                } else {
                    emit(std::cout, {r}, format);
                }
            } else {
                emit(std::cout, {cli::make_record(finite_prob(g, dim, spec, order, parse_parity(parity)))}, format);
            }
        } else if (*verify) {
            const auto results = cli::run_suite(suite, {order, dmax});
            bool failed = false, inconclusive = false;
            for (const auto& r : results) {
                const char* tag = !r.ok ? "FAIL" : r.inconclusive ? "INCONCLUSIVE" : "PASS";
                std::cout << tag << "  " << r.name;
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
                std::cout << '\n';
                failed = failed || !r.ok;
                inconclusive = inconclusive || r.inconclusive;
            }
            if (failed) return kExitVerifyFailed;
            if (inconclusive) return kExitInconclusive;
        } else if (*table) {
            std::erase(groups, std::string());
            std::erase(types, std::string());
            if (groups.empty() || types.empty()) {
                std::cerr << "table: --groups and --types must be nonempty\n";
                return kExitUsage;
            }
            std::vector<OutputRecord> records;
            for (const auto& t : types) {
                const auto spec = parse_lambda_spec(t);
                for (const auto& gname : groups) {
                    records.push_back(limit_record(parse_group(gname), spec, order, parse_parity(parity)));
                }
            }
            if (out_path.empty()) {
                cli::write_csv(std::cout, records);
            } else {
                std::ofstream os(out_path, std::ios::binary);
                if (!os) {
                    std::cerr << "cannot open " << out_path << '\n';
                    return kExitUsage;
                }
                cli::write_csv(os, records);
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
