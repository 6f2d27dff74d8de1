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

#include <algorithm>
#include <optional>

#include "decomposition.hpp"
#include "diagnosability.hpp"
#include "graph.hpp"
#include "lemma_checks.hpp"
#include "pair_search.hpp"
#include "pmc.hpp"
#include "test_util.hpp"

using namespace bsdiag;
using bsdiag::testing::error_code_of;
using bsdiag::testing::labels;
using bsdiag::testing::names;

namespace {

SearchBudget one_thread() {
  SearchBudget b;
  b.threads = 1;
  return b;
}

// Smallest max(|F1|,|F2|) over indistinguishable pairs, straight from the
// library's set predicates. Slow; only for graphs of <= 8 vertices.
std::optional<std::size_t> predicate_oracle(const Graph& g, bool conditional) {
  const std::size_t n = g.vertex_count();
  std::vector<FaultSet> sets;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    FaultSet f(n);
    for (VertexId v = 0; v < n; ++v) {
      if (m >> v & 1u) f.insert(v);
    }
    if (!conditional || is_conditional_fault_set(g, f)) sets.push_back(f);
  }
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const std::size_t size = std::max(sets[i].size(), sets[j].size());
      if (best && size >= *best) continue;
      if (!are_distinguishable(g, sets[i], sets[j])) best = size;
    }
  }
  return best;
}

std::size_t oracle_value(const Graph& g, bool conditional) {
  const auto m = predicate_oracle(g, conditional);
  return m ? *m - 1 : g.vertex_count();
}

void check_witness(const Graph& g, const WitnessPair& w, bool conditional) {
  REQUIRE(w.s == (w.f1 & w.f2));
  REQUIRE(w.d == (w.f1 ^ w.f2));
  REQUIRE_FALSE(w.d.empty());
  REQUIRE(neighborhood_set(g, w.d).is_subset_of(w.s));
  REQUIRE_FALSE(are_distinguishable(g, w.f1, w.f2));
  REQUIRE(w.f1.size() >= w.f2.size());
  if (conditional) {
    REQUIRE(is_conditional_fault_set(g, w.f1));
    REQUIRE(is_conditional_fault_set(g, w.f2));
    REQUIRE(verify_lemma4(g, w.f1, w.f2));
  }
}

}  // namespace

TEST_CASE("pair-edge witness at n = 4") {
  const Graph g = build_bubble_sort(4);
  const WitnessPair w = lemma6_witness(g);
  CHECK(w.f1 == labels(g, {"1324", "2314", "1423", "2413", "1234", "2134"}));
  CHECK(w.f2 == labels(g, {"1324", "2314", "1423", "2413", "1243", "2143"}));
  CHECK(w.conditional);
  check_witness(g, w, true);
}

TEST_CASE("pair-edge witness sizes for n = 4..7") {
  for (int n = 4; n <= 7; ++n) {
    CAPTURE(n);
    const Graph g = build_bubble_sort(n);
    const WitnessPair w = lemma6_witness(g);
    CHECK(w.f1.size() == static_cast<std::size_t>(4 * n - 10));
    CHECK(w.f2.size() == static_cast<std::size_t>(4 * n - 10));
    CHECK(w.s.size() == static_cast<std::size_t>(4 * (n - 3)));
    CHECK(is_conditional_fault_set(g, w.f1));
    CHECK(is_conditional_fault_set(g, w.f2));
    CHECK_FALSE(are_distinguishable(g, w.f1, w.f2));
    CHECK(lemma6_bound(n) == static_cast<std::size_t>(4 * n - 11));
  }
}

TEST_CASE("pair-edge witness at an arbitrary pair-edge") {
  const Graph g = build_bubble_sort(5);
  const WitnessPair w = lemma6_witness(g, g.parse_vertex("31425"), g.parse_vertex("34125"));
  check_witness(g, WitnessPair::from_sets(w.f1, w.f2, true), true);
  CHECK(w.f1.size() == 10);
  CHECK(error_code_of([&] { lemma6_witness(g, g.parse_vertex("12345"), g.parse_vertex("12354")); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { lemma6_witness(build_bubble_sort(3)); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("exhaustive pair search on B4") {
  const Graph g = build_bubble_sort(4);
  const SearchBudget b = one_thread();
  SUBCASE("conditional") {
    CHECK_FALSE(find_indistinguishable_pair(g, 5, true, b).witness);
    const auto r = find_indistinguishable_pair(g, 6, true, b);
    REQUIRE(r.witness);
    CHECK(r.witness->f1.size() == 6);
    CHECK(r.witness->f2.size() == 6);
    check_witness(g, *r.witness, true);
  }
  SUBCASE("ordinary") {
    CHECK_FALSE(find_indistinguishable_pair(g, 3, false, b).witness);
    const auto r = find_indistinguishable_pair(g, 4, false, b);
    REQUIRE(r.witness);
    CHECK(r.witness->max_size() == 4);
    check_witness(g, *r.witness, false);
  }
  CHECK(error_code_of([&] { find_indistinguishable_pair(g, 0, true, b); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("size guard") {
  const Graph g = build_bubble_sort(5);
  CHECK(error_code_of([&] { find_indistinguishable_pair(g, 3, false, SearchBudget{}); }) ==
        ErrorCode::kBudgetExceeded);
  CHECK(error_code_of([&] { conditional_diagnosability(g, SearchMode::kExhaustive, SearchBudget{}); }) ==
        ErrorCode::kBudgetExceeded);
  SearchBudget tight = one_thread();
  tight.max_t = 2;
  CHECK(error_code_of([] {
          SearchBudget t;
          t.max_t = 2;
          t.threads = 1;
          diagnosability(build_bubble_sort(4), t);
        }) == ErrorCode::kBudgetExceeded);
  tight.max_t = 3;
  CHECK(diagnosability(build_bubble_sort(4), tight).value == 3);
}

TEST_CASE("diagnosability values") {
  const SearchBudget b = one_thread();
  const Graph b4 = build_bubble_sort(4);
  const DiagnosabilityReport tc = conditional_diagnosability(b4, SearchMode::kExhaustive, b);
  CHECK(tc.value == 5);
  REQUIRE(tc.witness);
  CHECK(tc.witness->max_size() == 6);
  CHECK(diagnosability(b4, b).value == 3);

  const DiagnosabilityReport k2 = diagnosability(make_complete(2), b);
  CHECK(k2.value == 0);
  REQUIRE(k2.witness);
  CHECK(k2.witness->max_size() == 1);
  CHECK(diagnosability(make_star(3), b).value == 1);
  // K2 has no conditional fault set beyond the empty one.
  const DiagnosabilityReport k2c = conditional_diagnosability(make_complete(2), SearchMode::kExhaustive, b);
  CHECK(k2c.no_pair_exists);
  CHECK(k2c.value == 2);
}

TEST_CASE("search agrees with the predicate oracle on small graphs") {
  std::vector<Graph> graphs{make_path(5), make_cycle(6), make_complete(4), make_complete_bipartite(2, 3),
                            make_star(3), make_complete(2), make_path(2), make_cycle(5)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) graphs.push_back(make_random_graph(7, 0.5, seed));
  graphs.push_back(build_bubble_sort(3));
  SearchBudget b = one_thread();
  b.override_guards = true;
  for (const Graph& g : graphs) {
    CAPTURE(export_edge_list(g));
    const std::size_t t = diagnosability(g, b).value;
    const std::size_t tc = conditional_diagnosability(g, SearchMode::kExhaustive, b).value;
    CHECK(t == oracle_value(g, false));
    CHECK(tc == oracle_value(g, true));
    CHECK(tc >= t);
    const auto naive = naive_min_pair_size(g, true);
    CHECK(naive == predicate_oracle(g, true));
  }
}

TEST_CASE("monotonicity in t") {
  SearchBudget b = one_thread();
  b.override_guards = true;
  for (std::uint64_t seed = 10; seed < 14; ++seed) {
    const Graph g = make_random_graph(8, 0.45, seed);
    for (bool conditional : {false, true}) {
      bool seen = false;
      for (int t = 1; t <= 8; ++t) {
        const bool found = find_indistinguishable_pair(g, t, conditional, b).witness.has_value();
        REQUIRE((!seen || found));
        seen = seen || found;
      }
    }
  }
}

TEST_CASE("search results do not depend on thread count") {
  const Graph g = build_bubble_sort(4);
  SearchBudget b1 = one_thread();
  SearchBudget b3 = one_thread();
  b3.threads = 3;
  const auto r1 = find_indistinguishable_pair(g, 6, true, b1);
  const auto r3 = find_indistinguishable_pair(g, 6, true, b3);
  REQUIRE(r1.witness);
  REQUIRE(r3.witness);
  CHECK(r1.witness->f1 == r3.witness->f1);
  CHECK(r1.witness->f2 == r3.witness->f2);
  CHECK(r1.stats.subsets_enumerated == r3.stats.subsets_enumerated);
  CHECK(r1.stats.bipartitions_examined == r3.stats.bipartitions_examined);
}

TEST_CASE("randomized refutation on B5") {
  const Graph g = build_bubble_sort(5);
  SearchBudget b = one_thread();
  b.samples = 5000;
  const auto r = find_indistinguishable_pair_randomized(g, 9, true, b);
  CHECK_FALSE(r.witness);
  CHECK(r.budget_exhausted);
  CHECK_FALSE(r.exhaustive);
  // With the bound lifted past the known witness size the sampler must find
  // a pair: D = the pair-edge 4-cycle is in its sample space.
  b.samples = 20000;
  const auto hit = find_indistinguishable_pair_randomized(g, 10, true, b);
  REQUIRE(hit.witness);
  check_witness(g, *hit.witness, true);
  CHECK(hit.witness->max_size() == 10);

  const auto report = conditional_diagnosability(g, SearchMode::kRandomized, b);
  CHECK(report.value == 9);
  CHECK_FALSE(report.refutation_found);
  CHECK(error_code_of([&] {
          SearchBudget z = b;
          z.samples = 0;
          find_indistinguishable_pair_randomized(g, 9, true, z);
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("witness-only mode") {
  const Graph g = build_bubble_sort(6);
  const auto r = conditional_diagnosability(g, SearchMode::kWitnessOnly, one_thread());
  CHECK(r.value == 13);
  REQUIRE(r.witness);
  CHECK(r.witness->max_size() == 14);
  CHECK(parse_search_mode("witness-only") == SearchMode::kWitnessOnly);
  CHECK(error_code_of([] { parse_search_mode("fast"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("necessary-condition verifier") {
  for (int n : {4, 5}) {
    const Graph g = build_bubble_sort(n);
    const WitnessPair w = lemma6_witness(g);
    CHECK(verify_lemma4(g, w.f1, w.f2));
  }
  const Graph g = build_bubble_sort(4);
  CHECK(error_code_of([&] { verify_lemma4(g, labels(g, {"1234"}), labels(g, {"2134"})); }) ==
        ErrorCode::kInvalidArgument);
  // Indistinguishable but not conditional.
  const FaultSet f1 = labels(g, {"2134", "1324", "1243"});
  CHECK(error_code_of([&] { verify_lemma4(g, f1, f1 | labels(g, {"1234"})); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("A2 minus S stays connected on B5") {
  const Graph g = build_bubble_sort(5);
  const Decomposition d = decompose_last_symbol(g);
  CHECK(a2_minus_s_connected(g, d, FaultSet(g.vertex_count())));
  // Two parts in A1 (3 faults each) and a seventh fault elsewhere.
  FaultSet s(g.vertex_count());
  for (int part : {1, 2}) {
    for (std::size_t i = 0; i < 3; ++i) s.insert(d.part(part)[i]);
  }
  s.insert(d.part(5)[0]);
  REQUIRE(classify_parts(d, s).a1 == std::vector<int>{1, 2});
  CHECK(a2_minus_s_connected(g, d, s));
  const Lemma5Result r = verify_lemma5(g, 300, 5);
  CHECK(r.trials == 300);
  CHECK(r.passed());
  CHECK(r.trials_with_a1 > 0);
  CHECK(error_code_of([] { verify_lemma5(build_bubble_sort(4), 10, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("exhaustive B4 check and its side facts") {
  const Theorem2Result r = verify_theorem2_exhaustive(one_thread());
  CHECK(r.report.value == 5);
  CHECK(r.isolated_component_size == 1);
  CHECK(r.remaining_component_size == 20);
  CHECK(r.witness_d_min_degree >= 1);
}
