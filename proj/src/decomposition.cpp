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

#include "decomposition.hpp"

#include <algorithm>

#include "errors.hpp"

namespace bsdiag {

const std::vector<VertexId>& Decomposition::part(int symbol) const {
  if (symbol < 1 || symbol > n_) throw_invalid("part index " + std::to_string(symbol) + " out of range");
  return parts_[symbol - 1];
}

FaultSet Decomposition::part_set(int symbol) const {
  const auto& p = part(symbol);
  return FaultSet(universe(), std::span<const VertexId>(p));
}

Decomposition decompose_last_symbol(const Graph& g) {
  if (!g.has_labels()) throw_invalid("decomposition needs a bubble-sort graph with labels");
  Decomposition d;
  d.n_ = *g.dimension();
  d.part_of_.resize(g.vertex_count());
  d.parts_.resize(static_cast<std::size_t>(d.n_));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int last = g.label(v).at(d.n_);
    d.part_of_[v] = last;
    d.parts_[last - 1].push_back(v);
  }
  return d;
}

PartClassification classify_parts(const Decomposition& d, const FaultSet& s) {
  if (s.universe() != d.universe()) throw_invalid("fault set universe mismatch");
  const int n = d.dimension();
  PartClassification c;
  c.s_sizes.assign(static_cast<std::size_t>(n), 0);
  s.for_each([&](VertexId v) { ++c.s_sizes[d.part_of(v) - 1]; });
  for (int i = 1; i <= n; ++i) {
    const auto threshold = static_cast<std::size_t>(n >= 2 ? n - 2 : 0);
    (c.s_sizes[i - 1] >= threshold ? c.a1 : c.a2).push_back(i);
  }
  return c;
}

FaultSet union_of_parts(const Decomposition& d, const std::vector<int>& symbols) {
  FaultSet out(d.universe());
  for (int i : symbols) {
    for (VertexId v : d.part(i)) out.insert(v);
  }
  return out;
}

std::vector<Edge> cross_matching_edges(const Graph& g, const Decomposition& d, int i, int j) {
  if (i == j) throw_invalid("cross_matching_edges needs two distinct parts");
  const auto& pi = d.part(i);
  d.part(j);
  std::vector<Edge> out;
  for (VertexId u : pi) {
    for (VertexId w : g.neighbors(u)) {
      if (d.part_of(w) == j) out.emplace_back(u, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_pair_edge(const Graph& g, VertexId x, VertexId y) {
  if (!g.has_labels()) throw_invalid("pair-edges are defined on bubble-sort graphs");
  if (!g.adjacent(x, y)) return false;
  const int n = *g.dimension();
  if (n < 2) return false;
  const Permutation px = g.label(x);
  const Permutation py = g.label(y);
  return px.at(n) == py.at(n) && px.at(n - 1) == py.at(n - 1);
}

PairEdgeGadget pair_edge_gadget(const Graph& g, VertexId x, VertexId y) {
  if (!g.has_labels()) throw_invalid("pair-edges are defined on bubble-sort graphs");
  const int n = *g.dimension();
  if (n < 4) throw_invalid("pair-edge gadget requires n >= 4");
  if (!is_pair_edge(g, x, y)) {
    throw_invalid("(" + g.vertex_name(x) + ", " + g.vertex_name(y) + ") is not a pair-edge");
  }
  PairEdgeGadget p;
  p.x = x;
  p.y = y;
  p.x_prime = static_cast<VertexId>(perm_rank(g.label(x).swapped(n - 1)));
  p.y_prime = static_cast<VertexId>(perm_rank(g.label(y).swapped(n - 1)));
  return p;
}

}  // namespace bsdiag
