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

#ifndef BSDIAG_DIAGNOSER_HPP_
#define BSDIAG_DIAGNOSER_HPP_

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "pmc.hpp"

namespace bsdiag {

// Components of the subgraph keeping only edges whose tests read 0 in both
// directions. In every consistent fault set a component is entirely faulty or
// entirely fault-free. Ordered by smallest vertex.
std::vector<std::vector<VertexId>> agreement_components(const Graph& g, const Syndrome& sigma);

struct DiagnoseOptions {
  int t = 0;
  bool conditional = false;
  std::size_t max_listed = 16;                  // Ambiguous candidates kept
  std::uint64_t max_examined = 50'000'000;      // budget on candidate sets
};

struct DiagnosisOutcome {
  enum class Kind { kUnique, kAmbiguous, kInfeasible };

  Kind kind = Kind::kInfeasible;
  // Unique: the fault set. Ambiguous: the first max_listed candidates in
  // lexicographic order.
  std::vector<FaultSet> candidates;
  std::uint64_t candidate_count = 0;
  std::uint64_t examined = 0;
};

const char* to_string(DiagnosisOutcome::Kind kind);

// Enumerates every fault set of size <= t consistent with sigma (and
// conditional, if requested) as a union of agreement components.
// Throws Error(kBudgetExceeded) when more than max_examined sets are visited.
DiagnosisOutcome diagnose(const Graph& g, const Syndrome& sigma, const DiagnoseOptions& opts);

}  // namespace bsdiag

#endif  // BSDIAG_DIAGNOSER_HPP_
