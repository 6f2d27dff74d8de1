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

#ifndef BSDIAG_PMC_HPP_
#define BSDIAG_PMC_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "graph.hpp"

namespace bsdiag {

// PMC test outcome convention: 1 means the tester declares the tested
// vertex faulty, 0 means fault-free.
inline constexpr std::uint8_t kTestFaulty = 1;
inline constexpr std::uint8_t kTestFaultFree = 0;

// True iff F contains no vertex's entire neighborhood.
bool is_conditional_fault_set(const Graph& g, const FaultSet& f);

// How faulty testers answer. Fault-free testers always answer truthfully.
class TesterStrategy {
 public:
  enum class Kind { kFixedZero, kFixedOne, kRandomSeeded };

  static TesterStrategy fixed_zero() { return TesterStrategy(Kind::kFixedZero, 0); }
  static TesterStrategy fixed_one() { return TesterStrategy(Kind::kFixedOne, 0); }
  static TesterStrategy random_seeded(std::uint64_t seed) {
    return TesterStrategy(Kind::kRandomSeeded, seed);
  }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

  // Stateless in (seed, tester, tested).
  std::uint8_t answer(VertexId tester, VertexId tested) const noexcept;

 private:
  TesterStrategy(Kind k, std::uint64_t seed) : kind_(k), seed_(seed) {}
  Kind kind_;
  std::uint64_t seed_;
};

// Test outcomes indexed by Graph::directed_index. Entries may be unset while a
// syndrome is being assembled from external input.
class Syndrome {
 public:
  static constexpr std::uint8_t kUnset = 0xFF;

  Syndrome() = default;
  // All entries start unset.
  explicit Syndrome(const Graph& g) : results_(g.directed_edge_count(), kUnset) {}

  std::size_t size() const noexcept { return results_.size(); }
  std::uint8_t operator[](std::size_t directed_index) const { return results_.at(directed_index); }
  std::uint8_t& operator[](std::size_t directed_index) { return results_.at(directed_index); }

  std::uint8_t at(const Graph& g, VertexId tester, VertexId tested) const {
    return results_.at(g.directed_index(tester, tested));
  }
  void set(const Graph& g, VertexId tester, VertexId tested, std::uint8_t result);

  bool complete() const;
  std::span<const std::uint8_t> results() const noexcept { return results_; }

  friend bool operator==(const Syndrome&, const Syndrome&) = default;

 private:
  std::vector<std::uint8_t> results_;
};

Syndrome generate_syndrome(const Graph& g, const FaultSet& f, const TesterStrategy& s);

// Throws on a partial syndrome or one sized for a different graph.
bool is_consistent(const Graph& g, const FaultSet& f, const Syndrome& sigma);

// Distinguishable iff some vertex outside F1 ∪ F2 is adjacent to F1 Δ F2.
// Throws when F1 == F2.
bool are_distinguishable(const Graph& g, const FaultSet& f1, const FaultSet& f2);

// For an indistinguishable pair, a single syndrome consistent with both sets:
// testers in F1 - F2 answer as if F2 were the fault set, testers in F2 - F1 as
// if F1 were, and all others report F1 membership. Throws if the pair is
// distinguishable.
Syndrome shared_syndrome(const Graph& g, const FaultSet& f1, const FaultSet& f2);

}  // namespace bsdiag

#endif  // BSDIAG_PMC_HPP_
