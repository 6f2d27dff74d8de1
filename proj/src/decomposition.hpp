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

#ifndef BSDIAG_DECOMPOSITION_HPP_
#define BSDIAG_DECOMPOSITION_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "graph.hpp"

namespace bsdiag {

// Split of B_n into the n copies of B_{n-1} obtained by fixing the last
// symbol. Parts are keyed by that symbol, 1..n.
class Decomposition {
 public:
  int dimension() const noexcept { return n_; }
  int part_of(VertexId v) const { return part_of_.at(v); }
  const std::vector<VertexId>& part(int symbol) const;
  FaultSet part_set(int symbol) const;
  std::size_t universe() const noexcept { return part_of_.size(); }

 private:
  friend Decomposition decompose_last_symbol(const Graph& g);

  int n_ = 0;
  std::vector<int> part_of_;
  std::vector<std::vector<VertexId>> parts_;
};

Decomposition decompose_last_symbol(const Graph& g);

// A1 holds parts with at least n - 2 vertices of S, A2 the rest.
struct PartClassification {
  std::vector<int> a1;
  std::vector<int> a2;
  std::vector<std::size_t> s_sizes;  // s_sizes[i - 1] = |S ∩ part i|
};

PartClassification classify_parts(const Decomposition& d, const FaultSet& s);

// Induced subgraph on the union of the given parts; returns the vertex set.
FaultSet union_of_parts(const Decomposition& d, const std::vector<int>& symbols);

// All edges between part i and part j, as (vertex in i, vertex in j),
// sorted by the first endpoint.
std::vector<Edge> cross_matching_edges(const Graph& g, const Decomposition& d, int i, int j);

// The 4-cycle x - y - y' - x' - x built from a pair-edge (x, y), where x'
// and y' swap the last two positions of x and y.
struct PairEdgeGadget {
  VertexId x = 0;
  VertexId y = 0;
  VertexId x_prime = 0;
  VertexId y_prime = 0;

  Edge pair_edge() const { return {x, y}; }
  Edge coupled_pair_edge() const { return {x_prime, y_prime}; }
  std::array<Edge, 2> couplers() const { return {Edge{x, x_prime}, Edge{y, y_prime}}; }
  FaultSet vertices(std::size_t universe) const { return FaultSet(universe, {x, y, x_prime, y_prime}); }
};

bool is_pair_edge(const Graph& g, VertexId x, VertexId y);
// Requires n >= 4 and a pair-edge (x, y).
PairEdgeGadget pair_edge_gadget(const Graph& g, VertexId x, VertexId y);

}  // namespace bsdiag

#endif  // BSDIAG_DECOMPOSITION_HPP_
