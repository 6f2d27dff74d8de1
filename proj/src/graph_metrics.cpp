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

#include "graph_metrics.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "errors.hpp"

namespace bsdiag {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Residual network for unit-capacity vertex-disjoint path counting.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.vertex_count(), -1) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      add_arc(in(v), out(v));
      for (VertexId w : g.neighbors(v)) add_arc(out(v), in(w));
    }
  }

  static std::size_t in(VertexId v) { return 2 * static_cast<std::size_t>(v); }
  static std::size_t out(VertexId v) { return 2 * static_cast<std::size_t>(v) + 1; }

  std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t cap) {
    std::fill(flow_.begin(), flow_.end(), 0);
    std::size_t total = 0;
    std::vector<int> via(head_.size());
    while (total < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<std::size_t> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          const std::size_t y = to_[a];
          if (via[y] == -1 && residual(a) > 0) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[sink] == -1) break;
      for (std::size_t y = sink; y != source;) {
        const int a = via[y];
        flow_[a] += 1;
        flow_[a ^ 1] -= 1;
        y = to_[a ^ 1];
      }
      ++total;
    }
    return total;
  }

 private:
  void add_arc(std::size_t from, std::size_t to) {
    push(from, to, 1);
    push(to, from, 0);
  }
  void push(std::size_t from, std::size_t to, int capacity) {
    to_.push_back(to);
    capacity_.push_back(capacity);
    flow_.push_back(0);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size() - 1);
  }
  int residual(int a) const { return capacity_[a] - flow_[a]; }

  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<std::size_t> to_;
  std::vector<int> capacity_;
  std::vector<int> flow_;
};

bool use_single_source(const Graph& g, MetricMode mode) {
  switch (mode) {
    case MetricMode::kSingleSource:
      if (!g.vertex_transitive()) {
        throw_invalid("single-source mode requires a vertex-transitive graph");
      }
      return true;
    case MetricMode::kAllPairs:
      return false;
    case MetricMode::kAuto:
    default:
      return g.vertex_transitive();
  }
}

}  // namespace

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
  g.check_vertex(source);
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t eccentricity(const Graph& g, VertexId v) {
  const auto dist = bfs_distances(g, v);
  const std::size_t ecc = *std::max_element(dist.begin(), dist.end());
  if (ecc == kUnreached) throw_invalid("diameter: graph " + g.name() + " is disconnected");
  return ecc;
}

std::size_t diameter(const Graph& g, MetricMode mode) {
  if (use_single_source(g, mode)) return eccentricity(g, 0);
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

std::size_t local_vertex_connectivity(const Graph& g, VertexId s, VertexId t, std::size_t cap) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t || g.adjacent(s, t)) {
    throw_invalid("local connectivity needs distinct non-adjacent vertices");
  }
  SplitNetwork net(g);
  return net.max_flow(SplitNetwork::out(s), SplitNetwork::in(t), cap);
}

std::size_t vertex_connectivity(const Graph& g, MetricMode mode) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw_invalid("vertex connectivity needs at least 2 vertices");
  const bool single = use_single_source(g, mode);
  SplitNetwork net(g);
  std::size_t best = n - 1;
  bool complete = true;
  const VertexId last_source = single ? 0 : static_cast<VertexId>(n - 1);
  for (VertexId s = 0; s <= last_source && s < n; ++s) {
    for (VertexId t = single ? 0 : s + 1; t < n; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      complete = false;
      best = std::min(best, net.max_flow(SplitNetwork::out(s), SplitNetwork::in(t), best));
      if (best == 0) return 0;
    }
  }
  return complete ? n - 1 : best;
}

}  // namespace bsdiag
