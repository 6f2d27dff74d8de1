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

#ifndef BSDIAG_GRAPH_HPP_
#define BSDIAG_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fault_set.hpp"
#include "permutation.hpp"

namespace bsdiag {

using Edge = std::pair<VertexId, VertexId>;

// Largest dimension accepted by build_bubble_sort unless overridden.
inline constexpr int kDefaultMaxDimension = 9;

// Immutable simple undirected graph in CSR form. Neighbor lists are sorted,
// and each ordered adjacent pair (u, v) owns a dense directed-edge index.
class Graph {
 public:
  // Throws on self-loops, duplicate edges or out-of-range endpoints.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::string name = {});

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  std::size_t directed_edge_count() const noexcept { return targets_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  // Index of the ordered pair (u, v) in 0..2|E|-1; throws if not adjacent.
  std::size_t directed_index(VertexId u, VertexId v) const;
  std::size_t directed_begin(VertexId u) const { return offsets_[u]; }

  // Bubble-sort graphs carry their dimension; vertex ids are Lehmer ranks.
  std::optional<int> dimension() const noexcept { return dimension_; }
  bool has_labels() const noexcept { return dimension_.has_value(); }
  bool vertex_transitive() const noexcept { return vertex_transitive_; }
  const std::string& name() const noexcept { return name_; }

  Permutation label(VertexId v) const;
  // Permutation label for bubble-sort graphs, decimal id otherwise.
  std::string vertex_name(VertexId v) const;
  // Inverse of vertex_name.
  VertexId parse_vertex(std::string_view name) const;

  std::vector<Edge> edges() const;

  void check_vertex(VertexId v) const;
  void check_universe(const FaultSet& s) const;

 private:
  friend Graph build_bubble_sort(int n, int max_dimension);

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::optional<int> dimension_;
  bool vertex_transitive_ = false;
  std::string name_;
};

// B_n: vertices are the permutations of 1..n, u ~ v iff v is u with one pair
// of adjacent positions swapped.
Graph build_bubble_sort(int n, int max_dimension = kDefaultMaxDimension);

// N_G(X): vertices outside X with a neighbor in X.
FaultSet neighborhood_set(const Graph& g, const FaultSet& x);

struct Component {
  std::vector<VertexId> vertices;  // sorted
  bool trivial = false;            // no edges, i.e. a single vertex
};

// Connected components of g - removed, ordered by smallest vertex.
std::vector<Component> components(const Graph& g, const FaultSet& removed);

// Small named graphs used by tests and the cross-check suite.
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_complete_bipartite(std::size_t a, std::size_t b);
Graph make_star(std::size_t leaves);
// Erdos-Renyi style graph; deterministic for a given seed.
Graph make_random_graph(std::size_t n, double density, std::uint64_t seed);

// "LABEL LABEL" per edge, smaller label first, lines sorted.
std::string export_edge_list(const Graph& g);
std::string export_dot(const Graph& g);

}  // namespace bsdiag

#endif  // BSDIAG_GRAPH_HPP_
