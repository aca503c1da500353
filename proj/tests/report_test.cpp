// Copyright 2026 The diagevo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diagevo/report.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"

#include "diagevo/error.hpp"
#include "oracles.hpp"

using namespace diagevo;
using namespace diagevo::report;

namespace {

std::vector<std::string> lines_of(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(report, verify_report_keys) {
  evolution::VerifyReport r;
  r.max_circle_error = 0.25;
  r.exact_pass = false;
  const auto j = Json::parse(emit_report(to_json(r), Format::Json));
  ASSERT_TRUE(j.contains("max_circle_error"));
  ASSERT_TRUE(j.contains("exact_pass"));
  EXPECT_DOUBLE_EQ(j["max_circle_error"].get<double>(), 0.25);
  EXPECT_FALSE(j["exact_pass"].get<bool>());
}

TEST(report, csv_estimate_rows) {
  const auto e = bench::sequential_gate_estimate(bench::Kind::Shor, 8);
  const auto lines = lines_of(emit_report(to_json(e), Format::Csv));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_NE(lines[0].find("sequential_gates"), std::string::npos);
  EXPECT_NE(lines[0].find("concurrent.max_order"), std::string::npos);
  EXPECT_NE(lines[1].find("512"), std::string::npos);

  Json rows = Json::array();
  for (unsigned n = 1; n <= 4; ++n) {
    rows.push_back(to_json(bench::sequential_gate_estimate(bench::Kind::Qft, n)));
  }
  EXPECT_EQ(lines_of(emit_report(rows, Format::Csv)).size(), 5u);
}

TEST(report, csv_quotes_cells) {
  Json j = {{"note", "a,b \"c\""}};
  EXPECT_EQ(emit_report(j, Format::Csv), "note\n\"a,b \"\"c\"\"\"\n");
}

TEST(report, text_format) {
  Json j = {{"a", 1}, {"b", {{"c", true}}}};
  EXPECT_EQ(emit_report(j, Format::Text), "a: 1\nb.c: true\n");
}

TEST(report, unknown_format) {
  EXPECT_THROW(parse_format("xml"), InvalidArgument);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
}

TEST(report, coupling_json_round_trip) {
  std::mt19937_64 rng(40);
  for (unsigned n = 1; n <= 8; ++n) {
    spectrum::CouplingSet cs(n, oracle::random_reals(dim(n), rng));
    cs.set_theta(1, 0.0);
    const auto back = parse_coupling_set(to_json(cs).dump());
    ASSERT_EQ(back.n(), n);
    for (Mask s = 0; s < dim(n); ++s) {
      ASSERT_DOUBLE_EQ(back.angles()[s], cs.angles()[s]);
    }
  }
}

TEST(report, coupling_json_layout) {
  const auto j = to_json(spectrum::cps_couplings(1, 3, 3));
  EXPECT_EQ(j["n"], 3);
  ASSERT_EQ(j["terms"].size(), 3u);
  EXPECT_EQ(j["terms"][2]["mask"], 5);
  EXPECT_EQ(j["terms"][2]["particles"], Json::array({1, 3}));
}

TEST(report, coupling_json_rejects_bad_input) {
  EXPECT_THROW(parse_coupling_set(
                   R"({"n":2,"phi":0,"terms":[{"mask":3,"particles":[1],"angle":1}]})"),
               InvalidArgument);
  EXPECT_THROW(parse_coupling_set(
                   R"({"n":2,"phi":0,"terms":[{"mask":1,"angle":1},{"mask":1,"angle":2}]})"),
               InvalidArgument);
  EXPECT_THROW(parse_coupling_set(R"({"n":2,"phi":0,"terms":[{"mask":4,"angle":1}]})"),
               InvalidArgument);
  EXPECT_THROW(parse_coupling_set("{not json"), InvalidArgument);
  EXPECT_THROW(parse_coupling_set(R"({"n":2})"), InvalidArgument);
  EXPECT_THROW(parse_coupling_set(R"({"n":30,"phi":0,"terms":[]})"), ResourceLimit);
}

TEST(report, run_reports_have_null_for_missing) {
  algorithms::SimonRun r;
  r.n = 3;
  const auto j = to_json(r);
  EXPECT_TRUE(j["recovered_s"].is_null());
  EXPECT_TRUE(j["odd_mass"].is_null());
}
