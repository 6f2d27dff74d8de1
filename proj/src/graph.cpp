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

#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "errors.hpp"

namespace bsdiag {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                        std::string name) {
  if (vertex_count == 0) throw_invalid("graph must have at least one vertex");
  if (vertex_count > (std::size_t{1} << 31)) throw_invalid("graph too large");
  std::vector<std::vector<VertexId>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw_invalid("edge endpoint out of range");
    if (u == v) throw_invalid("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.name_ = std::move(name);
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw_invalid("duplicate edge at vertex " + std::to_string(v));
    }
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.targets_.reserve(g.offsets_.back());
  for (auto& list : adj) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::directed_index(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) {
    throw_invalid("vertices " + vertex_name(u) + " and " + vertex_name(v) + " are not adjacent");
  }
  return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
}

Permutation Graph::label(VertexId v) const {
  if (!dimension_) throw_invalid("graph has no permutation labels");
  check_vertex(v);
  return perm_unrank(v, *dimension_);
}

std::string Graph::vertex_name(VertexId v) const {
  if (dimension_) return perm_unrank(v, *dimension_).label();
  return std::to_string(v);
}

VertexId Graph::parse_vertex(std::string_view name) const {
  if (dimension_) {
    const Permutation p = Permutation::parse(name);
    if (p.size() != *dimension_) {
      throw_invalid("label '" + std::string(name) + "' is not a vertex of B" +
                    std::to_string(*dimension_));
    }
    return static_cast<VertexId>(perm_rank(p));
  }
  VertexId v = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
  if (ec != std::errc() || ptr != name.data() + name.size()) {
    throw_invalid("bad vertex id '" + std::string(name) + "'");
  }
  check_vertex(v);
  return v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) throw_invalid("vertex id " + std::to_string(v) + " out of range");
}

void Graph::check_universe(const FaultSet& s) const {
  if (s.universe() != vertex_count()) {
    throw_invalid("vertex set universe " + std::to_string(s.universe()) +
                  " does not match graph order " + std::to_string(vertex_count()));
  }
}

Graph build_bubble_sort(int n, int max_dimension) {
  if (n < 2) throw_invalid("bubble-sort graph needs n >= 2");
  if (n > max_dimension || n > kMaxPermutationSize) {
    throw_invalid("n = " + std::to_string(n) + " exceeds the vertex budget (n <= " +
                  std::to_string(std::min(max_dimension, kMaxPermutationSize)) + ")");
  }
  const std::uint64_t count = factorial(n);
  Graph g;
  g.dimension_ = n;
  g.vertex_transitive_ = true;
  g.name_ = "B" + std::to_string(n);
  const auto degree = static_cast<std::size_t>(n - 1);
  g.offsets_.resize(count + 1);
  g.targets_.resize(count * degree);
  // Walk permutations in rank order by repeated next_permutation.
  std::vector<int> sym(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sym[i] = i + 1;
  std::vector<VertexId> nb(degree);
  for (std::uint64_t v = 0; v < count; ++v) {
    for (int i = 0; i + 1 < n; ++i) {
      std::swap(sym[i], sym[i + 1]);
      nb[i] = static_cast<VertexId>(perm_rank(Permutation(sym)));
      std::swap(sym[i], sym[i + 1]);
    }
    std::sort(nb.begin(), nb.end());
    g.offsets_[v] = v * degree;
    std::copy(nb.begin(), nb.end(), g.targets_.begin() + static_cast<std::ptrdiff_t>(v * degree));
    std::next_permutation(sym.begin(), sym.end());
  }
  g.offsets_[count] = count * degree;
  return g;
}

FaultSet neighborhood_set(const Graph& g, const FaultSet& x) {
  g.check_universe(x);
  FaultSet out(g.vertex_count());
  x.for_each([&](VertexId v) {
    for (VertexId w : g.neighbors(v)) {
      if (!x.contains(w)) out.insert(w);
    }
  });
  return out;
}

std::vector<Component> components(const Graph& g, const FaultSet& removed) {
  g.check_universe(removed);
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Component> out;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start] || removed.contains(start)) continue;
    Component c;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w] && !removed.contains(w)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.trivial = c.vertices.size() == 1;
    out.push_back(std::move(c));
  }
  return out;
}

Graph make_path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e, "P" + std::to_string(n));
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw_invalid("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e, "C" + std::to_string(n));
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e, "K" + std::to_string(n));
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph make_star(std::size_t leaves) {
  Graph g = make_complete_bipartite(1, leaves);
  return g;
}

Graph make_random_graph(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) e.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, e, "G(" + std::to_string(n) + "," + std::to_string(seed) + ")");
}

std::string export_edge_list(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    std::string a = g.vertex_name(u);
    std::string b = g.vertex_name(v);
    if (b < a) std::swap(a, b);
    lines.push_back(a + " " + b);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string export_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph \"" << (g.name().empty() ? "G" : g.name()) << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
  }
  for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bsdiag
