// Copyright 2026 The perfmatch Authors.
//
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

#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "perfmatch/errors.hpp"
#include "perfmatch/numeric.hpp"

namespace perfmatch {

// Vertices are dense integers 1..n.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Immutable once built: the edge list is stored
// normalized (u < v) and sorted lexicographically, neighbor lists ascend.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw ParameterError("negative vertex count");
    for (Edge& e : edges_) {
      if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
        throw ParameterError("edge endpoint out of range 1.." +
                             std::to_string(n_));
      if (e.u == e.v) throw ParameterError("self-loop at " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw ParameterError("duplicate edge");
    adjacency_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    if (u < 1 || u > n_) return false;
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Position of {u,v} in edges(), if present.
  std::optional<int> edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(1);
    for (Vertex v = 2; v <= n_; ++v) d = std::min(d, degree(v));
    return d;
  }
  bool is_regular(int d) const {
    for (Vertex v = 1; v <= n_; ++v)
      if (degree(v) != d) return false;
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Edge weights indexed like Graph::edges().
class WeightedGraph {
 public:
  WeightedGraph(Graph base, std::vector<Rational> weights)
      : base_(std::move(base)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != base_.size())
      throw ParameterError("weight vector does not match the edge set");
    for (const Rational& w : weights_)
      if (w < 0) throw ParameterError("negative edge weight");
  }

  static WeightedGraph unit(Graph g) {
    std::vector<Rational> w(static_cast<std::size_t>(g.size()), Rational(1));
    return {std::move(g), std::move(w)};
  }

  const Graph& graph() const { return base_; }
  const std::vector<Rational>& weights() const { return weights_; }

  Rational weight(Vertex u, Vertex v) const {
    auto idx = base_.edge_index(u, v);
    return idx ? weights_[*idx] : Rational(0);
  }

  // d_w(v): sum of incident weights.
  Rational weighted_degree(Vertex v) const {
    Rational s = 0;
    for (Vertex u : base_.neighbors(v)) s += weight(u, v);
    return s;
  }

  // d_{w,2}(v): sum of squared incident weights.
  Rational square_degree(Vertex v) const {
    Rational s = 0;
    for (Vertex u : base_.neighbors(v)) {
      Rational w = weight(u, v);
      s += w * w;
    }
    return s;
  }

 private:
  Graph base_;
  std::vector<Rational> weights_;
};

// ---------------------------------------------------------------------------
// Constructors. Numbering is part of the contract; fixtures depend on it.

// K_n on 1..n.
inline Graph complete_graph(int n) {
  if (n < 1) throw ParameterError("K_n needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) e.push_back({u, v});
  return {n, std::move(e)};
}

// C_n: 1-2-...-n-1.
inline Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("C_n needs n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v, v + 1});
  e.push_back({1, n});
  return {n, std::move(e)};
}

// P_n: path on n vertices 1-2-...-n.
inline Graph path_graph(int n) {
  if (n < 1) throw ParameterError("P_n needs n >= 1");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v, v + 1});
  return {n, std::move(e)};
}

// K_{r,s}: side A is 1..r, side B is r+1..r+s.
inline Graph complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw ParameterError("K_{r,s} needs r, s >= 1");
  std::vector<Edge> e;
  for (Vertex u = 1; u <= r; ++u)
    for (Vertex v = r + 1; v <= r + s; ++v) e.push_back({u, v});
  return {r + s, std::move(e)};
}

inline Graph complete_bipartite(int r) { return complete_bipartite(r, r); }

// Octahedron: K_6 minus the perfect matching {1,4},{2,5},{3,6}.
inline Graph octahedron() {
  std::vector<Edge> e;
  for (Vertex u = 1; u <= 6; ++u)
    for (Vertex v = u + 1; v <= 6; ++v)
      if (v - u != 3) e.push_back({u, v});
  return {6, std::move(e)};
}

// Dodecahedron in concentric ring numbering: inner pentagon 1..5, middle
// 10-cycle 6..15 (even offsets attach inward), outer pentagon 16..20.
inline Graph dodecahedron() {
  std::vector<Edge> e;
  for (int j = 0; j < 5; ++j) {
    e.push_back({1 + j, 1 + (j + 1) % 5});
    e.push_back({16 + j, 16 + (j + 1) % 5});
    e.push_back({1 + j, 6 + 2 * j});
    e.push_back({16 + j, 6 + 2 * j + 1});
  }
  for (int p = 0; p < 10; ++p) e.push_back({6 + p, 6 + (p + 1) % 10});
  return {20, std::move(e)};
}

// G x H. Vertex (u, u') is numbered (u-1)*|V(H)| + u'.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw ParameterError("cartesian product of an empty graph");
  const int nh = h.order();
  auto id = [nh](Vertex u, Vertex up) { return (u - 1) * nh + up; };
  std::vector<Edge> e;
  for (Vertex u = 1; u <= g.order(); ++u)
    for (const Edge& f : h.edges()) e.push_back({id(u, f.u), id(u, f.v)});
  for (Vertex up = 1; up <= nh; ++up)
    for (const Edge& f : g.edges()) e.push_back({id(f.u, up), id(f.v, up)});
  return {g.order() * nh, std::move(e)};
}

// Induced subgraph on `keep`, renumbered in the order given.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) pos.at(keep[i]) = static_cast<int>(i) + 1;
  std::vector<Edge> e;
  for (const Edge& f : g.edges())
    if (pos[f.u] && pos[f.v]) e.push_back({pos[f.u], pos[f.v]});
  return {static_cast<int>(keep.size()), std::move(e)};
}

// ---------------------------------------------------------------------------
// Structural queries.

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.order();
}

// Shortest cycle length, nullopt for forests. BFS from every vertex.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1);
  for (Vertex s = 1; s <= n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    parent[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (parent[v] != u) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

struct ShortCycles {
  bool has3 = false;
  bool has4 = false;
  friend bool operator==(const ShortCycles&, const ShortCycles&) = default;
};

// A 3-cycle is an edge whose ends share a neighbor; a 4-cycle is a pair of
// distinct vertices with two common neighbors.
inline ShortCycles has_short_cycles(const Graph& g) {
  ShortCycles r;
  const int n = g.order();
  std::vector<int> common(static_cast<std::size_t>(n) + 1);
  for (Vertex u = 1; u <= n && !(r.has3 && r.has4); ++u) {
    std::fill(common.begin(), common.end(), 0);
    for (Vertex w : g.neighbors(u))
      for (Vertex v : g.neighbors(w))
        if (v != u) ++common[v];
    for (Vertex v = 1; v <= n; ++v) {
      if (common[v] >= 2) r.has4 = true;
      if (common[v] >= 1 && g.adjacent(u, v)) r.has3 = true;
    }
  }
  return r;
}

// G': same vertices, u~v iff u and v have a common neighbor in g.
inline Graph square_graph(const Graph& g) {
  std::vector<Edge> e;
  const int n = g.order();
  std::vector<char> mark(static_cast<std::size_t>(n) + 1);
  for (Vertex u = 1; u <= n; ++u) {
    std::fill(mark.begin(), mark.end(), 0);
    for (Vertex w : g.neighbors(u))
      for (Vertex v : g.neighbors(w))
        if (v > u && !mark[v]) {
          mark[v] = 1;
          e.push_back({u, v});
        }
  }
  return {n, std::move(e)};
}

}  // namespace perfmatch
