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

#ifndef BSDIAG_DIAGNOSABILITY_HPP_
#define BSDIAG_DIAGNOSABILITY_HPP_

#include <optional>
#include <string>

#include "decomposition.hpp"
#include "graph.hpp"
#include "pair_search.hpp"

namespace bsdiag {

enum class SearchMode { kExhaustive, kWitnessOnly, kRandomized };

const char* to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& text);

struct DiagnosabilityReport {
  std::string graph;
  bool conditional = false;
  SearchMode mode = SearchMode::kExhaustive;
  // t(G) or t_c(G). In witness-only and randomized modes this is the upper
  // bound certified by the witness, unless sampling refuted it.
  std::size_t value = 0;
  // When no indistinguishable pair exists at all, value is |V| and there is
  // no witness.
  bool no_pair_exists = false;
  std::optional<WitnessPair> witness;
  SearchStats stats;
  // Randomized mode.
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool refutation_found = false;
  std::optional<std::size_t> best_sampled_size;
};

// Pair-edge construction on B_n, n >= 4: with the 4-cycle x y y' x',
// F1 = N(cycle) ∪ {x, y} and F2 = N(cycle) ∪ {x', y'}. The pair is returned in
// construction orientation (F1 holds x and y), not canonical orientation.
WitnessPair lemma6_witness(const Graph& g, VertexId x, VertexId y);
// Default pair-edge: x = identity, y = identity with positions 1, 2 swapped.
WitnessPair lemma6_witness(const Graph& g);

// Upper bound 4n - 11 that the construction certifies for B_n.
std::size_t lemma6_bound(int n);

DiagnosabilityReport conditional_diagnosability(const Graph& g, SearchMode mode,
                                                const SearchBudget& budget);
// Exhaustive only.
DiagnosabilityReport diagnosability(const Graph& g, const SearchBudget& budget);

}  // namespace bsdiag

#endif  // BSDIAG_DIAGNOSABILITY_HPP_
