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

#include "pmc.hpp"

#include <algorithm>

#include "errors.hpp"
#include "rng.hpp"

namespace bsdiag {

bool is_conditional_fault_set(const Graph& g, const FaultSet& f) {
  g.check_universe(f);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), [&](VertexId w) { return f.contains(w); })) {
      return false;
    }
  }
  return true;
}

std::uint8_t TesterStrategy::answer(VertexId tester, VertexId tested) const noexcept {
  switch (kind_) {
    case Kind::kFixedZero:
      return kTestFaultFree;
    case Kind::kFixedOne:
      return kTestFaulty;
    case Kind::kRandomSeeded:
    default:
      return static_cast<std::uint8_t>(
          mix64(seed_, (static_cast<std::uint64_t>(tester) << 32) | tested) & 1u);
  }
}

void Syndrome::set(const Graph& g, VertexId tester, VertexId tested, std::uint8_t result) {
  if (result > 1) throw_invalid("test result must be 0 or 1");
  results_.at(g.directed_index(tester, tested)) = result;
}

bool Syndrome::complete() const {
  return std::none_of(results_.begin(), results_.end(), [](std::uint8_t r) { return r == kUnset; });
}

Syndrome generate_syndrome(const Graph& g, const FaultSet& f, const TesterStrategy& s) {
  g.check_universe(f);
  Syndrome sigma(g);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const bool faulty_tester = f.contains(u);
    std::size_t idx = g.directed_begin(u);
    for (VertexId v : g.neighbors(u)) {
      sigma[idx++] = faulty_tester ? s.answer(u, v) : (f.contains(v) ? kTestFaulty : kTestFaultFree);
    }
  }
  return sigma;
}

bool is_consistent(const Graph& g, const FaultSet& f, const Syndrome& sigma) {
  g.check_universe(f);
  if (sigma.size() != g.directed_edge_count()) throw_invalid("syndrome does not match graph");
  if (!sigma.complete()) throw_invalid("partial syndrome: some adjacent pairs have no result");
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (f.contains(u)) continue;
    std::size_t idx = g.directed_begin(u);
    for (VertexId v : g.neighbors(u)) {
      const std::uint8_t expected = f.contains(v) ? kTestFaulty : kTestFaultFree;
      if (sigma[idx++] != expected) return false;
    }
  }
  return true;
}

bool are_distinguishable(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
  g.check_universe(f1);
  g.check_universe(f2);
  if (f1 == f2) throw_invalid("are_distinguishable needs two distinct fault sets");
  const FaultSet both = f1 | f2;
  bool found = false;
  (f1 ^ f2).for_each([&](VertexId v) {
    if (found) return;
    for (VertexId u : g.neighbors(v)) {
      if (!both.contains(u)) {
        found = true;
        return;
      }
    }
  });
  return found;
}

Syndrome shared_syndrome(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
  if (are_distinguishable(g, f1, f2)) {
    throw_invalid("shared_syndrome: the pair is distinguishable");
  }
  Syndrome sigma(g);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const FaultSet& truth = (f1.contains(u) && !f2.contains(u)) ? f2 : f1;
    std::size_t idx = g.directed_begin(u);
    for (VertexId v : g.neighbors(u)) {
      sigma[idx++] = truth.contains(v) ? kTestFaulty : kTestFaultFree;
    }
  }
  return sigma;
}

}  // namespace bsdiag
