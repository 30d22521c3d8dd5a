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

#include <gtest/gtest.h>

#include <sstream>

#include "output.hpp"

using namespace cgprob;
using namespace cgprob::cli;

namespace {

TEST(Output, JsonRoundTrip)
{
    const OutputRecord r = make_record(limit_prob(GroupKind::U, LambdaSpec::separable(), 9));
    const auto j = to_json(r);
    EXPECT_EQ(j["dimension"], "infinity");
    EXPECT_EQ(j["coefficients"][9], "-106");
    EXPECT_EQ(record_from_json(nlohmann::ordered_json::parse(j.dump())), r);
}

TEST(Output, OrthogonalHalves)
{
    const OutputRecord r = make_record(orth_probs(true, 2, LambdaSpec::separable(), 6));
    const auto j = to_json(r);
    EXPECT_EQ(j["denominator"], 2);
    for (const auto& c : j["coefficients"]) EXPECT_EQ(c.get<std::string>().find('/'), std::string::npos);
    EXPECT_EQ(record_from_json(j), r);
}

TEST(Output, ExactValueRecord)
{
    OutputRecord r;
    r.group = "gl";
    r.lambda = "cyclic";
    r.dimension = 2;
    r.coefficients = {Rational(5, 6)};
    r.provenance = "exact-q";
    r.q = 2;
    const auto j = to_json(r);
    EXPECT_EQ(j["coefficients"][0], "5/6");
    EXPECT_EQ(record_from_json(j), r);
}

TEST(Output, CsvRoundTripMatchesJson)
{
    std::vector<OutputRecord> records;
    for (const auto& spec : {LambdaSpec::separable(), LambdaSpec::explicit_set({Partition{1}, Partition{2, 1}})}) {
        records.push_back(make_record(limit_prob(GroupKind::GL, spec, 7)));
        records.push_back(make_record(orth_probs(false, std::nullopt, spec, 7)));
    }
    std::stringstream ss;
    write_csv(ss, records);
    const auto back = read_csv(ss);
    ASSERT_EQ(back.size(), records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        EXPECT_EQ(back[i].coefficients, record_from_json(to_json(records[i])).coefficients);
        EXPECT_EQ(back[i].lambda, records[i].lambda);
    }
}

TEST(Output, CsvQuoting)
{
    EXPECT_EQ(csv_field("set:[1];[2,1]"), "\"set:[1];[2,1]\"");
    EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
    EXPECT_EQ(parse_csv_line("x,\"a,b\",\"c\"\"d\""), (std::vector<std::string>{"x", "a,b", "c\"d"}));
    EXPECT_THROW(parse_csv_line("\"open"), std::invalid_argument);
}

TEST(Output, PlainIsAligned)
{
    std::stringstream ss;
    write_plain(ss, {make_record(limit_prob(GroupKind::GL, LambdaSpec::cyclic(), 3))});
    std::string header, row;
    std::getline(ss, header);
    std::getline(ss, row);
    EXPECT_EQ(header.size(), row.size());
}

} // namespace
