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

// Exercises the shared library through its C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsdiag/bsdiag.h"

namespace {

struct Graph {
  bsd_graph* g = nullptr;
  explicit Graph(int n) { REQUIRE(bsd_graph_bubble_sort(n, &g) == BSD_OK); }
  ~Graph() { bsd_graph_free(g); }
};

// Takes ownership of a library string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  bsd_string_free(s);
  return out;
}

bsd_options opts1() {
  bsd_options o;
  bsd_options_init(&o);
  o.threads = 1;
  return o;
}

}  // namespace

TEST_CASE("handles and counts") {
  Graph b4(4);
  CHECK(bsd_graph_vertex_count(b4.g) == 24);
  CHECK(bsd_graph_edge_count(b4.g) == 36);
  bsd_graph* bad = nullptr;
  CHECK(bsd_graph_bubble_sort(1, &bad) == BSD_ERR_INVALID);
  CHECK(bad == nullptr);
  CHECK(std::string(bsd_last_error()).size() > 0);
  CHECK(bsd_graph_bubble_sort(4, nullptr) == BSD_ERR_INVALID);
  bsd_graph_free(nullptr);
  CHECK(std::string(bsd_version()) == "1.0.0");
}

TEST_CASE("generic graphs") {
  const std::vector<uint32_t> ends{0, 1, 1, 2};
  bsd_graph* p3 = nullptr;
  REQUIRE(bsd_graph_from_edges(3, ends.data(), 2, &p3) == BSD_OK);
  char* text = nullptr;
  REQUIRE(bsd_graph_props_json(p3, &text) == BSD_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j["connectivity"] == 1);
  CHECK(j["diameter"] == 2);
  bsd_options o = opts1();
  REQUIRE(bsd_diagnosability_json(p3, &o, &text) == BSD_OK);
  CHECK(nlohmann::json::parse(take(text))["t"] == 1);
  // Bubble-sort-only operations reject generic graphs.
  CHECK(bsd_witness_json(p3, nullptr, nullptr, &text) == BSD_ERR_INVALID);
  bsd_graph_free(p3);
  const std::vector<uint32_t> loop{0, 0};
  bsd_graph* l = nullptr;
  CHECK(bsd_graph_from_edges(2, loop.data(), 1, &l) == BSD_ERR_INVALID);
}

TEST_CASE("props and export") {
  Graph b4(4);
  char* text = nullptr;
  REQUIRE(bsd_graph_props_json(b4.g, &text) == BSD_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j["schema_version"] == 1);
  CHECK(j["vertices"] == 24);
  CHECK(j["edges"] == 36);
  CHECK(j["degree"] == 3);
  CHECK(j["connectivity"] == 3);
  CHECK(j["diameter"] == 6);
  REQUIRE(bsd_graph_export(b4.g, BSD_EXPORT_EDGE_LIST, &text) == BSD_OK);
  const std::string edges = take(text);
  CHECK(std::count(edges.begin(), edges.end(), '\n') == 36);
  REQUIRE(bsd_graph_export(b4.g, BSD_EXPORT_DOT, &text) == BSD_OK);
  CHECK(take(text).rfind("graph", 0) == 0);
}

TEST_CASE("set predicates") {
  Graph b4(4);
  int out = -1;
  REQUIRE(bsd_is_conditional(b4.g, "1234,2134", &out) == BSD_OK);
  CHECK(out == 1);
  REQUIRE(bsd_is_conditional(b4.g, "2134,1324,1243", &out) == BSD_OK);
  CHECK(out == 0);
  REQUIRE(bsd_are_distinguishable(b4.g, "1234", "2134", &out) == BSD_OK);
  CHECK(out == 1);
  CHECK(bsd_are_distinguishable(b4.g, "1234", "1234", &out) == BSD_ERR_INVALID);
  CHECK(bsd_is_conditional(b4.g, "12345", &out) == BSD_ERR_INVALID);
}

TEST_CASE("witness") {
  Graph b5(5);
  char* text = nullptr;
  REQUIRE(bsd_witness_json(b5.g, nullptr, nullptr, &text) == BSD_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j["sizes"] == nlohmann::json::array({10, 10}));
  CHECK(j["indistinguishable"] == true);
  CHECK(j["conditional"] == true);
  CHECK(j["upper_bound"] == 9);
  CHECK(bsd_witness_json(b5.g, "12345", "12354", &text) == BSD_ERR_INVALID);
  CHECK(bsd_witness_json(b5.g, "12345", nullptr, &text) == BSD_ERR_INVALID);
}

TEST_CASE("diagnosability reports") {
  Graph b4(4);
  bsd_options o = opts1();
  char* text = nullptr;
  REQUIRE(bsd_conditional_diagnosability_json(b4.g, BSD_MODE_EXHAUSTIVE, &o, &text) == BSD_OK);
  auto j = nlohmann::json::parse(take(text));
  CHECK(j["t_c"] == 5);
  CHECK(j["witness"]["sizes"] == nlohmann::json::array({6, 6}));
  CHECK_FALSE(j.contains("wall_ms"));
  REQUIRE(bsd_diagnosability_json(b4.g, &o, &text) == BSD_OK);
  CHECK(nlohmann::json::parse(take(text))["t"] == 3);

  Graph b5(5);
  CHECK(bsd_conditional_diagnosability_json(b5.g, BSD_MODE_EXHAUSTIVE, &o, &text) == BSD_ERR_BUDGET);
  o.samples = 2000;
  REQUIRE(bsd_conditional_diagnosability_json(b5.g, BSD_MODE_RANDOMIZED, &o, &text) == BSD_OK);
  j = nlohmann::json::parse(take(text));
  CHECK(j["t_c"] == 9);
  CHECK(j["refutation_found"] == false);
  CHECK(j["samples"] == 2000);
}

TEST_CASE("simulate then diagnose") {
  Graph b4(4);
  char* text = nullptr;
  REQUIRE(bsd_simulate_json(b4.g, "1234,4321", BSD_STRATEGY_RANDOM, 17, &text) == BSD_OK);
  const std::string syndrome = take(text);
  CHECK(nlohmann::json::parse(syndrome)["tests"].size() == 72);
  REQUIRE(bsd_diagnose_json(b4.g, syndrome.c_str(), 5, 1, &text) == BSD_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j["kind"] == "unique");
  CHECK(j["faults"] == nlohmann::json::array({"1234", "4321"}));
  CHECK(bsd_diagnose_json(b4.g, "{not json", 5, 1, &text) == BSD_ERR_INVALID);
  CHECK(bsd_diagnose_json(b4.g, syndrome.c_str(), -1, 1, &text) == BSD_ERR_INVALID);
}
