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
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "perfmatch/embedding.hpp"
#include "perfmatch/errors.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/matching.hpp"
#include "perfmatch/matrix.hpp"
#include "perfmatch/numeric.hpp"

namespace perfmatch {

// One direction per edge. forward[i] means edges()[i].u -> edges()[i].v.
class Orientation {
 public:
  Orientation(Graph g, std::vector<bool> forward) : graph_(std::move(g)), forward_(std::move(forward)) {
    if (static_cast<int>(forward_.size()) != graph_.size())
      throw ParameterError("orientation must give one direction per edge");
  }

  // Every edge low -> high.
  static Orientation ascending(Graph g) {
    std::vector<bool> f(static_cast<std::size_t>(g.size()), true);
    return {std::move(g), std::move(f)};
  }

  // From an explicit arc list covering every edge exactly once.
  static Orientation from_arcs(Graph g, std::span<const Dart> arcs) {
    std::vector<int> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<bool> f(static_cast<std::size_t>(g.size()), true);
    for (const Dart& a : arcs) {
      auto idx = g.edge_index(a.from, a.to);
      if (!idx) throw ParameterError("arc is not an edge of the graph");
      if (seen[static_cast<std::size_t>(*idx)]++) throw ParameterError("edge oriented twice");
      f[static_cast<std::size_t>(*idx)] = a.from < a.to;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw ParameterError("arc list leaves an edge unoriented");
    return {std::move(g), std::move(f)};
  }

  const Graph& graph() const { return graph_; }
  const std::vector<bool>& forward() const { return forward_; }

  // +1 if u -> v, -1 if v -> u, 0 if not an edge.
  int sign(Vertex u, Vertex v) const {
    auto idx = graph_.edge_index(u, v);
    if (!idx) return 0;
    const bool low_to_high = forward_[static_cast<std::size_t>(*idx)];
    return (u < v) == low_to_high ? 1 : -1;
  }

  bool points_along(Dart d) const { return sign(d.from, d.to) > 0; }

  Orientation flipped(int edge_index) const {
    Orientation r = *this;
    r.forward_.at(static_cast<std::size_t>(edge_index)) = !r.forward_[static_cast<std::size_t>(edge_index)];
    return r;
  }

  std::vector<Dart> arcs() const {
    std::vector<Dart> r;
    const auto& e = graph_.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
      r.push_back(forward_[i] ? Dart{e[i].u, e[i].v} : Dart{e[i].v, e[i].u});
    return r;
  }

 private:
  Graph graph_;
  std::vector<bool> forward_;
};

// Skew-symmetric by construction: entries are only ever written in pairs.
template <typename T>
class SkewMatrix {
 public:
  explicit SkewMatrix(int n) : m_(n) {}

  void set(int i, int j, const T& x) {
    if (i == j) throw ParameterError("skew matrix diagonal is zero");
    m_(i, j) = x;
    m_(j, i) = -x;
  }
  int order() const { return m_.order(); }
  const T& operator()(int i, int j) const { return m_(i, j); }
  const Matrix<T>& matrix() const { return m_; }

 private:
  Matrix<T> m_;
};

// S(G): s_ij = 1 if i -> j, -1 if j -> i, 0 off edges. Indices are 0-based.
inline SkewMatrix<BigInt> skew_matrix(const Orientation& o) {
  const Graph& g = o.graph();
  SkewMatrix<BigInt> s(g.order());
  for (const Dart& a : o.arcs()) s.set(a.from - 1, a.to - 1, BigInt(1));
  return s;
}

// S(G_w): |s_ij| = w(i,j), sign from the orientation.
inline SkewMatrix<Rational> skew_matrix(const Orientation& o, const WeightedGraph& w) {
  if (!(w.graph() == o.graph())) throw ParameterError("weights belong to a different graph");
  SkewMatrix<Rational> s(o.graph().order());
  for (const Dart& a : o.arcs()) s.set(a.from - 1, a.to - 1, w.weight(a.from, a.to));
  return s;
}

inline BigInt exact_determinant(const SkewMatrix<BigInt>& s) { return exact_determinant(s.matrix()); }
inline Rational exact_determinant(const SkewMatrix<Rational>& s) { return exact_determinant(s.matrix()); }

// Number of darts of face f whose edge is oriented along the walk.
inline int clockwise_count(const Face& f, const Orientation& o) {
  int c = 0;
  for (int i = 0; i < f.length(); ++i)
    if (o.points_along(f.dart(i))) ++c;
  return c;
}

// Kasteleyn's condition: every bounded face has an odd clockwise count.
inline bool is_kasteleyn(const PlanarEmbedding& e, const Orientation& o) {
  for (int i = 0; i < static_cast<int>(e.faces().size()); ++i) {
    if (i == e.outer_index()) continue;
    if (clockwise_count(e.faces()[static_cast<std::size_t>(i)], o) % 2 == 0) return false;
  }
  return true;
}

// FKT. A BFS spanning tree (from vertex 1, ascending neighbors) is oriented
// low -> high. The remaining edges form a spanning tree of the dual rooted
// at the outer face; faces are fixed leaves-first, each choosing the
// direction of the edge to its parent so its clockwise count is odd.
inline Orientation kasteleyn_orient(const PlanarEmbedding& e) {
  const Graph& g = e.graph();
  const int n = g.order();
  if (!is_connected(g)) throw PreconditionError("kasteleyn_orient needs a connected graph");

  std::vector<char> in_tree(static_cast<std::size_t>(g.size()), 0);
  {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::queue<Vertex> q;
    q.push(1);
    seen[1] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          in_tree[static_cast<std::size_t>(*g.edge_index(u, v))] = 1;
          q.push(u);
        }
    }
  }

  std::vector<bool> forward(static_cast<std::size_t>(g.size()), true);
  std::vector<char> fixed(in_tree.begin(), in_tree.end());

  const int f = static_cast<int>(e.faces().size());
  std::vector<std::vector<std::pair<int, int>>> dual(static_cast<std::size_t>(f));  // (face, edge)
  for (int i = 0; i < g.size(); ++i) {
    if (in_tree[static_cast<std::size_t>(i)]) continue;
    const Edge& x = g.edges()[static_cast<std::size_t>(i)];
    const int a = e.face_of({x.u, x.v});
    const int b = e.face_of({x.v, x.u});
    dual[static_cast<std::size_t>(a)].push_back({b, i});
    dual[static_cast<std::size_t>(b)].push_back({a, i});
  }

  std::vector<int> parent_edge(static_cast<std::size_t>(f), -1);
  std::vector<char> reached(static_cast<std::size_t>(f), 0);
  std::vector<int> order;
  {
    std::queue<int> q;
    q.push(e.outer_index());
    reached[static_cast<std::size_t>(e.outer_index())] = 1;
    while (!q.empty()) {
      int face = q.front();
      q.pop();
      order.push_back(face);
      for (auto [other, edge] : dual[static_cast<std::size_t>(face)])
        if (!reached[static_cast<std::size_t>(other)]) {
          reached[static_cast<std::size_t>(other)] = 1;
          parent_edge[static_cast<std::size_t>(other)] = edge;
          q.push(other);
        }
    }
  }
  if (static_cast<int>(order.size()) != f) throw ConsistencyError("dual cotree is not spanning");

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int face = *it;
    const int pe = parent_edge[static_cast<std::size_t>(face)];
    if (pe < 0) continue;  // outer face
    const Face& fc = e.faces()[static_cast<std::size_t>(face)];
    int agree = 0;
    std::optional<Dart> parent_dart;
    for (int i = 0; i < fc.length(); ++i) {
      const Dart d = fc.dart(i);
      const int idx = *g.edge_index(d.from, d.to);
      if (idx == pe) {
        parent_dart = d;
        continue;
      }
      if (!fixed[static_cast<std::size_t>(idx)])
        throw ConsistencyError("face processed before one of its children");
      const bool low_to_high = forward[static_cast<std::size_t>(idx)];
      if ((d.from < d.to) == low_to_high) ++agree;
    }
    // Parent edge goes along the walk iff that makes the count odd.
    const bool along = agree % 2 == 0;
    forward[static_cast<std::size_t>(pe)] = (parent_dart->from < parent_dart->to) == along;
    fixed[static_cast<std::size_t>(pe)] = 1;
  }
  return {g, std::move(forward)};
}

// sqrt(det S) for an orientation whose pfaffian-ness the caller vouches for.
inline BigInt count_with_orientation(const Orientation& o) {
  if (o.graph().order() % 2 != 0) return 0;
  const BigInt det = exact_determinant(skew_matrix(o));
  auto root = exact_sqrt(det);
  if (!root) throw ConsistencyError("skew determinant " + det.str() + " is not a perfect square");
  return *root;
}

// Perfect matchings of a plane graph as sqrt(det S) under a Kasteleyn
// orientation.
inline BigInt count_by_pfaffian(const PlanarEmbedding& e) {
  if (e.graph().order() % 2 != 0) return 0;
  return count_with_orientation(kasteleyn_orient(e));
}

// B = S S^T = -S^2. Symmetric positive semidefinite with b_vv = d(v)
// (unweighted) or d_{w,2}(v) (weighted).
template <typename T>
struct GramMatrix {
  Matrix<T> b;
};

inline GramMatrix<BigInt> gram_matrix(const Orientation& o) {
  const auto s = skew_matrix(o).matrix();
  GramMatrix<BigInt> r{-(s * s)};
  const Graph& g = o.graph();
  for (Vertex v = 1; v <= g.order(); ++v)
    if (r.b(v - 1, v - 1) != g.degree(v)) throw ConsistencyError("gram diagonal is not the degree");
  return r;
}

inline GramMatrix<Rational> gram_matrix(const Orientation& o, const WeightedGraph& w) {
  const auto s = skew_matrix(o, w).matrix();
  GramMatrix<Rational> r{-(s * s)};
  for (Vertex v = 1; v <= o.graph().order(); ++v)
    if (r.b(v - 1, v - 1) != w.square_degree(v))
      throw ConsistencyError("gram diagonal is not the squared weighted degree");
  return r;
}

// Sign of sigma_M: the permutation 1..n -> i_1, j_1, i_2, j_2, ... with
// i_k < j_k and the i_k increasing.
inline int matching_permutation_sign(const Matching& m) {
  std::vector<Edge> pairs = m.pairs;
  for (Edge& e : pairs)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(pairs.begin(), pairs.end());
  std::vector<Vertex> seq;
  for (const Edge& e : pairs) {
    seq.push_back(e.u);
    seq.push_back(e.v);
  }
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

struct DeterminantMatchingCheck {
  Rational det;            // det S(G_w)
  Rational perfmat;        // weighted perfect matching sum
  Rational pfaffian;       // signed expansion over perfect matchings
  bool holds = false;      // det <= perfmat^2
  bool equality = false;   // det == perfmat^2
  bool signs_uniform = false;  // every nonzero pfaffian term has one sign
};

// det S(G_w) <= (perfmat G_w)^2, with equality exactly when all perfect
// matchings contribute pfaffian terms of the same sign.
inline DeterminantMatchingCheck verify_determinant_matching_bound(
    const Orientation& o, const WeightedGraph& w, int guard = kDefaultOracleGuard) {
  DeterminantMatchingCheck r;
  const auto s = skew_matrix(o, w);
  r.det = exact_determinant(s);
  int sign_seen = 0;
  r.signs_uniform = true;
  for (const Matching& m : list_perfect_matchings(o.graph(), guard)) {
    Rational weight = 1;
    for (const Edge& e : m.pairs) weight *= w.weight(e.u, e.v);
    Rational term = weight;
    for (const Edge& e : m.pairs) {
      const Vertex lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
      term *= o.sign(lo, hi);
    }
    term *= matching_permutation_sign(m);
    r.perfmat += weight;
    r.pfaffian += term;
    if (term != 0) {
      const int sg = term > 0 ? 1 : -1;
      if (sign_seen != 0 && sg != sign_seen) r.signs_uniform = false;
      sign_seen = sg;
    }
  }
  if (r.pfaffian * r.pfaffian != r.det)
    throw ConsistencyError("det S differs from the square of the pfaffian expansion");
  r.holds = r.det <= r.perfmat * r.perfmat;
  r.equality = r.det == r.perfmat * r.perfmat;
  return r;
}

inline DeterminantMatchingCheck verify_determinant_matching_bound(
    const Orientation& o, int guard = kDefaultOracleGuard) {
  return verify_determinant_matching_bound(o, WeightedGraph::unit(o.graph()), guard);
}

// K_4 x K_2 (numbered as cartesian_product(complete_graph(4),
// complete_graph(2))) with a pfaffian orientation; the graph is not planar,
// so FKT does not apply and the orientation is attested here.
inline Orientation k4xk2_pfaffian_fixture() {
  static constexpr Dart arcs[] = {{2, 1}, {3, 1}, {1, 5}, {1, 7}, {2, 4}, {6, 2}, {2, 8}, {4, 3},
                                  {5, 3}, {3, 7}, {4, 6}, {4, 8}, {6, 5}, {5, 7}, {6, 8}, {7, 8}};
  return Orientation::from_arcs(cartesian_product(complete_graph(4), complete_graph(2)), arcs);
}

}  // namespace perfmatch
