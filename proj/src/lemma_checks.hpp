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

#ifndef BSDIAG_LEMMA_CHECKS_HPP_
#define BSDIAG_LEMMA_CHECKS_HPP_

#include <cstdint>

#include "decomposition.hpp"
#include "diagnosability.hpp"

namespace bsdiag {

// Necessary conditions on an indistinguishable conditional pair:
//   every vertex outside F1 ∪ F2 keeps a neighbor outside F1 ∪ F2, and
//   every v in F1 Δ F2 has a neighbor in F1 - F2 and one in F2 - F1.
// Throws unless (F1, F2) is an indistinguishable conditional pair.
bool verify_lemma4(const Graph& g, const FaultSet& f1, const FaultSet& f2);

// True iff the union of the A2 parts (at most n - 3 vertices of S) minus S
// is connected. An empty A2 counts as connected.
bool a2_minus_s_connected(const Graph& g, const Decomposition& d, const FaultSet& s);

// True iff every two A2 parts are joined by a cross edge with neither end in S.
bool a2_parts_joined_fault_free(const Graph& g, const Decomposition& d, const FaultSet& s);

struct Lemma5Result {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;           // A2 - S disconnected
  std::uint64_t trials_with_a1 = 0;     // trials where A1 was nonempty
  std::uint64_t fault_free_join_failures = 0;
  bool passed() const { return failures == 0 && fault_free_join_failures == 0; }
};

// Random S with |S| <= 4n - 13, biased toward a few parts so that A1 is
// regularly nonempty. Requires B_n with n >= 5.
Lemma5Result verify_lemma5(const Graph& g, std::uint64_t trials, std::uint64_t seed);

struct Theorem2Result {
  DiagnosabilityReport report;
  std::size_t isolated_component_size = 0;  // B_4 - N(v): the isolated v
  std::size_t remaining_component_size = 0; // and the other component
  std::size_t witness_d_min_degree = 0;     // min degree inside B_4[D]
};

// Exhaustive conditional diagnosability of B_4 plus the side facts its proof
// uses. Throws Error(kVerificationFailed) if any of them does not hold.
Theorem2Result verify_theorem2_exhaustive(const SearchBudget& budget);

}  // namespace bsdiag

#endif  // BSDIAG_LEMMA_CHECKS_HPP_
