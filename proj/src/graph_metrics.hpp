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

#ifndef BSDIAG_GRAPH_METRICS_HPP_
#define BSDIAG_GRAPH_METRICS_HPP_

#include <cstddef>
#include <vector>

#include "graph.hpp"

namespace bsdiag {

enum class MetricMode {
  kAuto,          // single source when the graph is flagged vertex-transitive
  kSingleSource,  // requires a vertex-transitive graph
  kAllPairs,
};

// BFS distances from source; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);

// Throws on a disconnected graph.
std::size_t eccentricity(const Graph& g, VertexId v);
std::size_t diameter(const Graph& g, MetricMode mode = MetricMode::kAuto);

// Number of internally vertex-disjoint s-t paths for non-adjacent s, t,
// via unit-capacity augmenting paths on the split-vertex network. Stops
// once `cap` paths are found.
std::size_t local_vertex_connectivity(const Graph& g, VertexId s, VertexId t,
                                      std::size_t cap = static_cast<std::size_t>(-1));

// Minimum vertex cut size. Complete graphs return |V| - 1 by convention.
std::size_t vertex_connectivity(const Graph& g, MetricMode mode = MetricMode::kAuto);

}  // namespace bsdiag

#endif  // BSDIAG_GRAPH_METRICS_HPP_
