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

#ifndef BSDIAG_PAIR_SEARCH_HPP_
#define BSDIAG_PAIR_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "graph.hpp"

namespace bsdiag {

// A concrete indistinguishable pair. Stored in canonical orientation:
// |F1| >= |F2|, and F1 lexicographically first when the sizes tie.
struct WitnessPair {
  FaultSet f1;
  FaultSet f2;
  FaultSet s;  // F1 ∩ F2
  FaultSet d;  // F1 Δ F2
  bool conditional = false;

  static WitnessPair from_sets(FaultSet a, FaultSet b, bool conditional);

  std::size_t max_size() const { return f1.size(); }
  std::size_t min_size() const { return f2.size(); }
};

// Total order used to pick one witness deterministically: smaller max size,
// then smaller min size, then lexicographic F1, then F2.
bool witness_less(const WitnessPair& a, const WitnessPair& b);

struct SearchBudget {
  std::size_t max_vertices = 24;  // exhaustive mode guard
  int max_t = 8;                  // largest value an exhaustive run will certify
  bool override_guards = false;
  unsigned threads = 0;           // 0 selects hardware concurrency
  std::uint64_t samples = 100000; // randomized mode
  std::uint64_t seed = 1;
};

unsigned resolve_threads(unsigned requested);

struct SearchStats {
  std::uint64_t subsets_enumerated = 0;    // every nonempty D visited
  std::uint64_t candidates_examined = 0;   // D surviving the size bound
  std::uint64_t bipartitions_examined = 0;
  std::uint64_t samples_rejected = 0;      // randomized mode only
  double wall_ms = 0;

  SearchStats& operator+=(const SearchStats& o);
};

struct PairSearchResult {
  std::optional<WitnessPair> witness;
  bool exhaustive = true;
  // Randomized mode: set when every sample was drawn and none qualified.
  bool budget_exhausted = false;
  // Randomized mode: smallest max(|F1|,|F2|) over all valid sampled pairs,
  // with or without the size bound.
  std::optional<std::size_t> best_sampled_size;
  SearchStats stats;
};

// Exhaustive search for F1 != F2, max(|F1|,|F2|) <= t, indistinguishable
// (and both conditional when requested). nullopt witness proves none exists.
PairSearchResult find_indistinguishable_pair(const Graph& g, int t, bool conditional,
                                             const SearchBudget& budget);

// Randomized search over structured symmetric differences; a missing witness
// only means none was sampled.
PairSearchResult find_indistinguishable_pair_randomized(const Graph& g, int t, bool conditional,
                                                        const SearchBudget& budget);

// Cross-check by direct enumeration of all pairs of subsets (|V| <= 12).
// Returns the minimum max(|F1|,|F2|) over indistinguishable pairs, or nullopt
// if no pair exists.
std::optional<std::size_t> naive_min_pair_size(const Graph& g, bool conditional);

}  // namespace bsdiag

#endif  // BSDIAG_PAIR_SEARCH_HPP_
