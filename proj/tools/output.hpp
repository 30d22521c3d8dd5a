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

#ifndef CGPROB_TOOLS_OUTPUT_HPP
#define CGPROB_TOOLS_OUTPUT_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgprob/genfun.hpp"
#include "cgprob/rational.hpp"

namespace cgprob::cli {

/// One row of output: a truncated series or an exact value at q = q0.
struct OutputRecord {
    std::string group;
    std::string lambda;
    std::optional<int> dimension; // empty: infinity
    int order = 0;
    std::vector<Rational> coefficients;
    std::string provenance = "symbolic"; // symbolic | exact-q | oracle
    std::optional<std::string> parity;
    std::optional<long> q;
    std::string note;

    /// O+/- series are written as numerators over 2.
    int denominator() const { return provenance == "symbolic" && (group == "o+" || group == "o-") ? 2 : 1; }

    std::vector<std::string> coefficient_strings() const
    {
        std::vector<std::string> out;
        for (const auto& c : coefficients) {
            const Rational scaled = c * denominator();
            if (provenance == "symbolic" && !is_integer(scaled)) {
                throw internal_error("coefficient " + to_string(c) + " is not representable over " +
                                     std::to_string(denominator()));
            }
            out.push_back(to_string(scaled));
        }
        return out;
    }

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline OutputRecord make_record(const ProbSeries& p)
{
    OutputRecord r;
    r.group = to_string(p.group);
    r.lambda = p.lambda;
    r.dimension = p.dimension;
    r.order = p.order;
    r.coefficients = p.coefficients();
    if (p.parity) r.parity = to_string(*p.parity);
    r.note = p.note;
    return r;
}

inline nlohmann::ordered_json to_json(const OutputRecord& r)
{
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["lambda"] = r.lambda;
    if (r.dimension) {
        j["dimension"] = *r.dimension;
    } else {
        j["dimension"] = "infinity";
    }
    j["order"] = r.order;
    j["coefficients"] = r.coefficient_strings();
    if (r.denominator() != 1) j["denominator"] = r.denominator();
    j["provenance"] = r.provenance;
    if (r.parity) j["parity"] = *r.parity;
    if (r.q) j["q"] = *r.q;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline OutputRecord record_from_json(const nlohmann::ordered_json& j)
{
    OutputRecord r;
    r.group = j.at("group").get<std::string>();
    r.lambda = j.at("lambda").get<std::string>();
    if (j.at("dimension").is_number_integer()) r.dimension = j.at("dimension").get<int>();
    r.order = j.at("order").get<int>();
    r.provenance = j.at("provenance").get<std::string>();
    if (j.contains("parity")) r.parity = j.at("parity").get<std::string>();
    if (j.contains("q")) r.q = j.at("q").get<long>();
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    const long den = j.value("denominator", 1L);
    for (const auto& c : j.at("coefficients")) {
        r.coefficients.push_back(parse_rational(c.get<std::string>()) / den);
    }
    return r;
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// Splits one RFC 4180 record.
inline std::vector<std::string> parse_csv_line(const std::string& line)
{
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                out.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else if (c != '\r') {
            out.back() += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
    return out;
}

inline void write_csv(std::ostream& os, const std::vector<OutputRecord>& records)
{
    int width = 0;
    for (const auto& r : records) width = std::max(width, static_cast<int>(r.coefficients.size()));
    os << "group,lambda,dimension,order,provenance,denominator";
    for (int k = 0; k < width; ++k) os << ",c" << k;
    os << "\r\n";
    for (const auto& r : records) {
        os << csv_field(r.group) << ',' << csv_field(r.lambda) << ','
           << (r.dimension ? std::to_string(*r.dimension) : "infinity") << ',' << r.order << ',' << r.provenance
           << ',' << r.denominator();
        const auto cs = r.coefficient_strings();
        for (int k = 0; k < width; ++k) os << ',' << (k < static_cast<int>(cs.size()) ? cs[k] : "");
        os << "\r\n";
    }
}

inline std::vector<OutputRecord> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
    const auto header = parse_csv_line(line);
    std::vector<OutputRecord> out;
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r") continue;
        const auto f = parse_csv_line(line);
        if (f.size() != header.size()) throw std::invalid_argument("CSV row width differs from header");
        OutputRecord r;
        r.group = f[0];
        r.lambda = f[1];
        if (f[2] != "infinity") r.dimension = std::stoi(f[2]);
        r.order = std::stoi(f[3]);
        r.provenance = f[4];
        const long den = std::stol(f[5]);
        for (std::size_t k = 6; k < f.size() && !f[k].empty(); ++k) {
            r.coefficients.push_back(parse_rational(f[k]) / den);
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline void write_plain(std::ostream& os, const std::vector<OutputRecord>& records)
{
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (const auto& r : records) width = std::max(width, r.coefficients.size());
    std::vector<std::string> head{"group", "lambda", "dim"};
    for (std::size_t k = 0; k < width; ++k) head.push_back("q^-" + std::to_string(k));
    cells.push_back(head);
    for (const auto& r : records) {
        std::vector<std::string> row{r.group, r.lambda, r.dimension ? std::to_string(*r.dimension) : "inf"};
        for (const auto& c : r.coefficients) row.push_back(to_string(c));
        cells.push_back(row);
    }
    std::vector<std::size_t> w(3 + width, 0);
    for (const auto& row : cells)
        for (std::size_t k = 0; k < row.size(); ++k) w[k] = std::max(w[k], row[k].size());
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string cell = row[k];
            if (k < 3) {
                cell += std::string(w[k] - cell.size(), ' ');
            } else {
                cell = std::string(w[k] - cell.size(), ' ') + cell;
            }
            line += (k ? "  " : "") + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    for (const auto& r : records) {
        if (!r.note.empty()) os << "note: " << r.note << '\n';
    }
}

} // namespace cgprob::cli

#endif
