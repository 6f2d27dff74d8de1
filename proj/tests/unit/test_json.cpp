// Copyright 2026 The bsdiag Authors
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

#include <doctest.h>

#include "diagnosability.hpp"
#include "diagnoser.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "pmc.hpp"
#include "test_util.hpp"

using namespace bsdiag;
using bsdiag::testing::error_code_of;
using bsdiag::testing::labels;

TEST_CASE("fault list parsing") {
  const Graph g = build_bubble_sort(4);
  CHECK(parse_fault_list(g, "1234, 2134 ,") == labels(g, {"1234", "2134"}));
  CHECK(parse_fault_list(g, "").empty());
  CHECK(error_code_of([&] { parse_fault_list(g, "1234,999"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("fault set JSON round trip") {
  const Graph g = build_bubble_sort(4);
  const FaultSet f = labels(g, {"4321", "1324"});
  const Json j = fault_set_to_json(g, f);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["vertices"] == Json::array({"1324", "4321"}));
  CHECK(fault_set_from_json(g, j) == f);
  CHECK(error_code_of([&] { fault_set_from_json(g, parse_json(R"({"vertices":[1]})")); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_code_of([&] { fault_set_from_json(g, parse_json("[]")); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("syndrome JSON") {
  const Graph g = build_bubble_sort(4);
  const Syndrome s = generate_syndrome(g, labels(g, {"1234", "3412"}), TesterStrategy::random_seeded(5));
  const Json j = syndrome_to_json(g, s);
  CHECK(j["n"] == 4);
  REQUIRE(j["tests"].size() == 72);
  // Sorted by (tester, tested) label.
  for (std::size_t i = 1; i < j["tests"].size(); ++i) {
    const auto& a = j["tests"][i - 1];
    const auto& b = j["tests"][i];
    REQUIRE(std::pair(a["tester"].get<std::string>(), a["tested"].get<std::string>()) <
            std::pair(b["tester"].get<std::string>(), b["tested"].get<std::string>()));
  }
  CHECK(syndrome_from_json(g, parse_json(j.dump())) == s);

  SUBCASE("errors") {
    Json bad = j;
    bad["n"] = 5;
    CHECK(error_code_of([&] { syndrome_from_json(g, bad); }) == ErrorCode::kInvalidArgument);
    bad = j;
    bad["tests"].push_back(j["tests"][0]);
    CHECK(error_code_of([&] { syndrome_from_json(g, bad); }) == ErrorCode::kInvalidArgument);
    bad = j;
    bad["tests"][0]["result"] = 2;
    CHECK(error_code_of([&] { syndrome_from_json(g, bad); }) == ErrorCode::kInvalidArgument);
    bad = j;
    bad["tests"][0]["tested"] = "4321";  // not adjacent to the tester
    CHECK(error_code_of([&] { syndrome_from_json(g, bad); }) == ErrorCode::kInvalidArgument);
    CHECK(error_code_of([] { parse_json("{"); }) == ErrorCode::kInvalidArgument);
  }
  SUBCASE("partial input loads but cannot be diagnosed") {
    Json part = j;
    part["tests"].erase(part["tests"].begin());
    const Syndrome p = syndrome_from_json(g, part);
    CHECK_FALSE(p.complete());
    CHECK(error_code_of([&] { diagnose(g, p, {.t = 2}); }) == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("report JSON") {
  const Graph g = build_bubble_sort(4);
  SearchBudget b;
  b.threads = 1;
  const DiagnosabilityReport r = conditional_diagnosability(g, SearchMode::kWitnessOnly, b);
  const Json j = report_to_json(g, r, false);
  CHECK(j["schema_version"] == 1);
  CHECK(j["graph"] == "B4");
  CHECK(j["mode"] == "witness-only");
  CHECK(j["t_c"] == 5);
  CHECK(j["bound"] == "upper");
  CHECK(j["witness"]["sizes"] == Json::array({6, 6}));
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(report_to_json(g, r, true).contains("wall_ms"));
}

TEST_CASE("outcome JSON") {
  const Graph g = build_bubble_sort(4);
  const Syndrome s = generate_syndrome(g, labels(g, {"2143"}), TesterStrategy::fixed_one());
  const Json u = outcome_to_json(g, diagnose(g, s, {.t = 3}));
  CHECK(u["kind"] == "unique");
  CHECK(u["faults"] == Json::array({"2143"}));
  const Json inf = outcome_to_json(g, diagnose(g, s, {.t = 0}));
  CHECK(inf["kind"] == "infeasible");
  CHECK_FALSE(inf.contains("faults"));
}
