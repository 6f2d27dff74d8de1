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

#include "diagnosability.hpp"

#include <algorithm>

#include "errors.hpp"
#include "pmc.hpp"

namespace bsdiag {

const char* to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::kExhaustive:
      return "exhaustive";
    case SearchMode::kWitnessOnly:
      return "witness-only";
    case SearchMode::kRandomized:
    default:
      return "randomized";
  }
}

SearchMode parse_search_mode(const std::string& text) {
  if (text == "exhaustive") return SearchMode::kExhaustive;
  if (text == "witness-only" || text == "witness") return SearchMode::kWitnessOnly;
  if (text == "randomized") return SearchMode::kRandomized;
  throw_invalid("unknown search mode '" + text + "'");
}

std::size_t lemma6_bound(int n) {
  if (n < 4) throw_invalid("the pair-edge construction needs n >= 4");
  return static_cast<std::size_t>(4 * n - 11);
}

WitnessPair lemma6_witness(const Graph& g, VertexId x, VertexId y) {
  const PairEdgeGadget gadget = pair_edge_gadget(g, x, y);
  const std::size_t universe = g.vertex_count();
  const FaultSet cycle = gadget.vertices(universe);
  const FaultSet around = neighborhood_set(g, cycle);
  WitnessPair w;
  w.f1 = around | FaultSet(universe, {gadget.x, gadget.y});
  w.f2 = around | FaultSet(universe, {gadget.x_prime, gadget.y_prime});
  w.s = w.f1 & w.f2;
  w.d = w.f1 ^ w.f2;
  w.conditional = is_conditional_fault_set(g, w.f1) && is_conditional_fault_set(g, w.f2);
  return w;
}

WitnessPair lemma6_witness(const Graph& g) {
  if (!g.has_labels()) throw_invalid("the pair-edge construction needs a bubble-sort graph");
  const int n = *g.dimension();
  if (n < 4) throw_invalid("the pair-edge construction needs n >= 4");
  const Permutation x = Permutation::identity(n);
  return lemma6_witness(g, static_cast<VertexId>(perm_rank(x)),
                        static_cast<VertexId>(perm_rank(x.swapped(1))));
}

namespace {

// Iterative deepening over the pair-size bound: the first bound admitting a
// pair is t + 1. Each pass is a full, deterministic scan.
DiagnosabilityReport exhaustive_value(const Graph& g, bool conditional, const SearchBudget& budget) {
  DiagnosabilityReport report;
  report.graph = g.name();
  report.conditional = conditional;
  report.mode = SearchMode::kExhaustive;
  const std::size_t n = g.vertex_count();
  const std::size_t limit =
      budget.override_guards ? n : std::min<std::size_t>(n, static_cast<std::size_t>(budget.max_t) + 1);
  for (std::size_t bound = 1; bound <= limit; ++bound) {
    PairSearchResult r = find_indistinguishable_pair(g, static_cast<int>(bound), conditional, budget);
    report.stats += r.stats;
    if (r.witness) {
      report.value = bound - 1;
      report.witness = std::move(r.witness);
      return report;
    }
  }
  if (limit < n) {
    throw_budget("no indistinguishable pair with both sizes <= " + std::to_string(limit) +
                 "; raise the t guard to continue");
  }
  report.value = n;
  report.no_pair_exists = true;
  return report;
}

}  // namespace

DiagnosabilityReport conditional_diagnosability(const Graph& g, SearchMode mode,
                                                const SearchBudget& budget) {
  if (mode == SearchMode::kExhaustive) return exhaustive_value(g, true, budget);

  if (!g.has_labels()) throw_invalid(std::string(to_string(mode)) + " mode needs a bubble-sort graph");
  const int n = *g.dimension();
  DiagnosabilityReport report;
  report.graph = g.name();
  report.conditional = true;
  report.mode = mode;
  report.value = lemma6_bound(n);
  WitnessPair w = lemma6_witness(g);
  if (!w.conditional || are_distinguishable(g, w.f1, w.f2)) {
    throw Error(ErrorCode::kVerificationFailed, "pair-edge witness failed its own checks");
  }
  report.witness = std::move(w);
  if (mode == SearchMode::kWitnessOnly) return report;

  report.samples = budget.samples;
  report.seed = budget.seed;
  PairSearchResult r =
      find_indistinguishable_pair_randomized(g, static_cast<int>(report.value), true, budget);
  report.stats = r.stats;
  report.best_sampled_size = r.best_sampled_size;
  if (r.witness) {
    report.refutation_found = true;
    report.value = r.witness->max_size() - 1;
    report.witness = std::move(r.witness);
  }
  return report;
}

DiagnosabilityReport diagnosability(const Graph& g, const SearchBudget& budget) {
  return exhaustive_value(g, false, budget);
}

}  // namespace bsdiag
