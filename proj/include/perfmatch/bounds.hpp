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

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "perfmatch/circulant.hpp"
#include "perfmatch/decomposition.hpp"
#include "perfmatch/embedding.hpp"
#include "perfmatch/errors.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/matching.hpp"
#include "perfmatch/numeric.hpp"
#include "perfmatch/pfaffian.hpp"

namespace perfmatch {

enum class BoundKind { upper, lower };

inline const char* to_string(BoundKind k) { return k == BoundKind::upper ? "upper" : "lower"; }

// value = radicand^(1/root), kept exact so that count <= value and equality
// can be decided on integers: count^root <=> radicand.
struct ExactRoot {
  Rational radicand;
  int root = 1;

  double log2() const { return log2_rational(radicand) / root; }
  int compare_with(const BigInt& count) const {  // sign of count - value
    const Rational lhs(pow(count, static_cast<unsigned>(root)));
    return lhs < radicand ? -1 : (lhs == radicand ? 0 : 1);
  }
};

// a^(1/p) vs b^(1/q), exactly: sign of a^(1/p) - b^(1/q).
inline int compare_roots(const ExactRoot& a, const ExactRoot& b) {
  const Rational l = pow(a.radicand, static_cast<unsigned>(b.root));
  const Rational r = pow(b.radicand, static_cast<unsigned>(a.root));
  return l < r ? -1 : (l == r ? 0 : 1);
}

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::upper;
  bool applicable = false;
  std::string reason;  // why not applicable, or a short note
  double log2_value = std::numeric_limits<double>::quiet_NaN();
  std::optional<ExactRoot> exact;

  static BoundEntry not_applicable(std::string name, std::string why, BoundKind kind = BoundKind::upper) {
    BoundEntry e;
    e.name = std::move(name);
    e.kind = kind;
    e.reason = std::move(why);
    return e;
  }
  static BoundEntry of(std::string name, ExactRoot v, BoundKind kind = BoundKind::upper) {
    BoundEntry e;
    e.name = std::move(name);
    e.kind = kind;
    e.applicable = true;
    e.log2_value = v.log2();
    e.exact = std::move(v);
    return e;
  }
};

namespace detail {

inline BigInt product_of_degrees(const Graph& g) {
  BigInt p = 1;
  for (Vertex v = 1; v <= g.order(); ++v) p *= g.degree(v);
  return p;
}

inline BigInt det_block(const Matrix<BigInt>& b, const std::vector<Vertex>& block) {
  std::vector<int> idx;
  for (Vertex v : block) idx.push_back(v - 1);
  return exact_determinant(b.principal(idx));
}

}  // namespace detail

// prod d(v)^(1/4). Needs a pfaffian orientation; the caller decides that.
inline BoundEntry hadamard_bound(const Graph& g) {
  BoundEntry e = BoundEntry::of("hadamard", {Rational(detail::product_of_degrees(g)), 4});
  if (g.min_degree() == 0) e.reason = "isolated vertex: bound is 0";
  return e;
}

// prod d_{w,2}(v)^(1/4) for edge weights w.
inline BoundEntry hadamard_bound(const WeightedGraph& w) {
  Rational p = 1;
  for (Vertex v = 1; v <= w.graph().order(); ++v) p *= w.square_degree(v);
  BoundEntry e = BoundEntry::of("hadamard_weighted", {p, 4});
  if (p == 0) e.reason = "vertex with zero weighted degree: bound is 0";
  return e;
}

// prod (d(v)!)^(1/(2 d(v))), valid for every graph.
inline BoundEntry bregman_bound(const Graph& g) {
  int l = 1;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) > 0) l = std::lcm(l, g.degree(v));
  const int root = 2 * l;
  BigInt p = 1;
  for (Vertex v = 1; v <= g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 0) {
      p = 0;
      break;
    }
    p *= pow(factorial(d), static_cast<unsigned>(root / (2 * d)));
  }
  BoundEntry e = BoundEntry::of("bregman", {Rational(p), root});
  if (p == 0) e.reason = "isolated vertex: bound is 0";
  return e;
}

// (d!)^(1/(2d)) against d^(1/4): sign of the difference, from (d!)^2 vs d^d.
inline int bregman_vs_hadamard_factor(int d) {
  if (d < 1) throw ParameterError("degree must be positive");
  const BigInt l = pow(factorial(d), 2u), r = pow(BigInt(d), static_cast<unsigned>(d));
  return l < r ? -1 : (l == r ? 0 : 1);
}

// Face-length chain: prod d^(1/4) <= (2m/n)^(n/4) <= (2g'(n-2)/((g'-2)n))^(n/4),
// with g' the shortest face of the embedding. Returns the chain value, the
// simplified (2g'/(g'-2))^(n/4) and, for g' >= 4, 2^(n/2).
inline std::vector<BoundEntry> girth_bounds(const PlanarEmbedding& e) {
  const auto gp = embedding_girth(e);
  const int n = e.graph().order();
  if (!gp) {
    return {BoundEntry::not_applicable("girth", "tree: no finite face girth"),
            BoundEntry::not_applicable("girth_simplified", "tree: no finite face girth"),
            BoundEntry::not_applicable("girth_corollary", "tree: no finite face girth")};
  }
  const int g = *gp;
  std::vector<BoundEntry> r;
  const Rational chain(BigInt(2 * g) * (n - 2), BigInt(g - 2) * n);
  r.push_back(BoundEntry::of("girth", {pow(chain, static_cast<unsigned>(n)), 4}));
  r.push_back(BoundEntry::of("girth_simplified", {pow(Rational(2 * g, g - 2), static_cast<unsigned>(n)), 4}));
  if (g >= 4) r.push_back(BoundEntry::of("girth_corollary", {Rational(pow(BigInt(2), static_cast<unsigned>(n))), 2}));
  else r.push_back(BoundEntry::not_applicable("girth_corollary", "shortest face is a triangle"));
  for (auto& x : r)
    if (x.applicable) x.reason = "face girth " + std::to_string(g);
  return r;
}

// Greedy maximal matching of the square graph, ascending edge order.
inline Matching default_square_matching(const Graph& g) { return greedy_maximal_matching(square_graph(g)); }

// prod_{uv in M'} (d(u)d(v)-1)^(1/4) prod_{v not in M'} d(v)^(1/4), for M' a
// matching of the square graph and g free of 4-cycles.
inline BoundEntry hf_square_bound(const Graph& g, const std::optional<Matching>& m_prime = std::nullopt) {
  const char* name = "hf_square";
  if (!is_connected(g)) return BoundEntry::not_applicable(name, "graph is disconnected");
  if (has_short_cycles(g).has4) return BoundEntry::not_applicable(name, "graph has a 4-cycle");
  const Matching m = m_prime ? *m_prime : default_square_matching(g);
  if (!m.is_valid_in(square_graph(g))) throw ParameterError("M' is not a matching of the square graph");
  BigInt p = 1;
  std::vector<char> used(static_cast<std::size_t>(g.order()) + 1, 0);
  for (const Edge& x : m.pairs) {
    p *= BigInt(g.degree(x.u)) * g.degree(x.v) - 1;
    used[static_cast<std::size_t>(x.u)] = used[static_cast<std::size_t>(x.v)] = 1;
  }
  for (Vertex v = 1; v <= g.order(); ++v)
    if (!used[static_cast<std::size_t>(v)]) p *= g.degree(v);
  BoundEntry e = BoundEntry::of(name, {Rational(p), 4});
  e.reason = "|M'| = " + std::to_string(m.size());
  return e;
}

// 8^(n/12) 3^(n/12) = 24^(n/12) for cubic graphs without 4-cycles.
inline BoundEntry cubic_no4_bound(const Graph& g) {
  const char* name = "cubic_no4";
  if (!g.is_regular(3)) return BoundEntry::not_applicable(name, "graph is not cubic");
  if (has_short_cycles(g).has4) return BoundEntry::not_applicable(name, "graph has a 4-cycle");
  return BoundEntry::of(name, {Rational(pow(BigInt(24), static_cast<unsigned>(g.order()))), 12});
}

// Closed forms for fullerenes on n vertices: two cases that need a
// hamiltonian cycle and one from the guaranteed long cycle of length
// (5n-4)/6.
inline std::vector<BoundEntry> fullerene_hamiltonian_bounds(int n, bool has_hamiltonian) {
  if (n < 20 || n % 2 != 0) throw ParameterError("fullerene order must be even and at least 20");
  std::vector<BoundEntry> r;
  const auto un = static_cast<unsigned>(n);
  if (!has_hamiltonian) {
    r.push_back(BoundEntry::not_applicable("fullerene_hamiltonian", "no hamiltonian cycle supplied"));
  } else if (n % 4 == 0) {
    r.push_back(BoundEntry::of("fullerene_hamiltonian", {Rational(pow(BigInt(8), un)), 8}));
  } else {
    r.push_back(BoundEntry::of("fullerene_hamiltonian", {Rational(pow(BigInt(8), un - 2) * 81), 8}));
  }
  const int q = (5 * n - 4) / 12;
  r.push_back(BoundEntry::of("fullerene_long_cycle",
                             {Rational(pow(BigInt(8), static_cast<unsigned>(q)) *
                                       pow(BigInt(3), static_cast<unsigned>(n - 2 * q))),
                              4}));
  return r;
}

// A hamiltonian cycle given as a vertex sequence (closing edge implied).
inline bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const int n = g.order();
  if (static_cast<int>(cycle.size()) != n || n < 3) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : cycle) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]++) return false;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

// (det B[V_1])^(1/4) prod (det B[U_i])^(1/4), B = -S^2 for a pfaffian S.
inline BoundEntry hf_block_bound(const Orientation& o, const CircularDecomposition& cd) {
  const char* name = "hf_block";
  if (cd.rings.empty()) return BoundEntry::not_applicable(name, "no rings");
  if (auto chk = validate_decomposition(o.graph(), cd); !chk.valid)
    return BoundEntry::not_applicable(name, "invalid decomposition: " + chk.reason);
  const auto b = gram_matrix(o).b;
  BigInt p = detail::det_block(b, cd.first_block());
  for (std::size_t i = 1; i < cd.rings.size(); ++i) p *= detail::det_block(b, cd.rings[i]);
  BoundEntry e = BoundEntry::of(name, {Rational(p), 4});
  e.reason = std::to_string(cd.rings.size()) + " rings, |V0| = " + std::to_string(cd.inner.size());
  return e;
}

namespace detail {

// Structural conditions for the ring refinement: no 3- or 4-cycles, and
// every ring vertex has at most one neighbor in each adjacent ring. Returns
// an empty string when they hold.
inline std::string ring_conditions(const Graph& g, const CircularDecomposition& cd) {
  const auto sc = has_short_cycles(g);
  if (sc.has3) return "graph has a triangle";
  if (sc.has4) return "graph has a 4-cycle";
  std::vector<int> level(static_cast<std::size_t>(g.order()) + 1, 0);  // 0 = V0
  for (std::size_t i = 0; i < cd.rings.size(); ++i)
    for (Vertex v : cd.rings[i]) level[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
  for (std::size_t i = 0; i < cd.rings.size(); ++i) {
    const int li = static_cast<int>(i) + 1;
    for (Vertex v : cd.rings[i]) {
      int down = 0, up = 0;
      for (Vertex u : g.neighbors(v)) {
        const int lu = level[static_cast<std::size_t>(u)];
        if (lu == li + 1) ++up;
        else if (lu == li - 1 && lu > 0) ++down;
      }
      if (up > 1 || down > 1)
        return "vertex " + std::to_string(v) + " has two neighbors in an adjacent ring";
    }
  }
  return {};
}

// Orientation induced on ring r, relabeled as the cycle 1-2-...-m-1.
inline Orientation ring_orientation(const Orientation& o, const std::vector<Vertex>& r) {
  const int m = static_cast<int>(r.size());
  Graph c = cycle_graph(m);
  std::vector<Dart> arcs;
  for (int i = 0; i < m; ++i) {
    const Vertex a = r[static_cast<std::size_t>(i)], b = r[static_cast<std::size_t>((i + 1) % m)];
    const Vertex la = i + 1, lb = (i + 1) % m + 1;
    arcs.push_back(o.sign(a, b) > 0 ? Dart{la, lb} : Dart{lb, la});
  }
  return Orientation::from_arcs(std::move(c), arcs);
}

}  // namespace detail

// (det B[V_1])^(1/4) prod_{i>=2} max_{+-}(det(D_c - 2I - T_{m_i,+-}^2))^(1/4).
// Each ring block of B is checked to equal D_c - 2I - S_ring^2, and its
// gauge class is recorded.
inline BoundEntry ring_refined_bound(const Orientation& o, const CircularDecomposition& cd) {
  const char* name = "ring_refined";
  const Graph& g = o.graph();
  if (cd.rings.size() < 2) return BoundEntry::not_applicable(name, "needs at least two rings");
  if (auto chk = validate_decomposition(g, cd); !chk.valid)
    return BoundEntry::not_applicable(name, "invalid decomposition: " + chk.reason);
  if (auto why = detail::ring_conditions(g, cd); !why.empty()) return BoundEntry::not_applicable(name, why);

  const auto b = gram_matrix(o).b;
  BigInt p = detail::det_block(b, cd.first_block());
  for (std::size_t i = 1; i < cd.rings.size(); ++i) {
    const auto& ring = cd.rings[i];
    const int m = static_cast<int>(ring.size());
    std::vector<BigInt> deg;
    for (Vertex v : ring) deg.push_back(g.degree(v));
    const auto s = skew_matrix(detail::ring_orientation(o, ring)).matrix();
    IntMatrix expected = -(s * s);
    for (int j = 0; j < m; ++j) expected(j, j) += deg[static_cast<std::size_t>(j)] - 2;
    std::vector<int> idx;
    for (Vertex v : ring) idx.push_back(v - 1);
    if (b.principal(idx) != expected) throw ConsistencyError("ring block of B is not D_c - 2I - S^2");
    const BigInt dp = ring_block_det({m, CycleSign::plus, deg});
    const BigInt dm = ring_block_det({m, CycleSign::minus, deg});
    p *= dp > dm ? dp : dm;
  }
  BoundEntry e = BoundEntry::of(name, {Rational(p), 4});
  e.reason = std::to_string(cd.rings.size()) + " rings";
  return e;
}

// 20^((n-n_1)/12) 3^(n_1/4) for semi-circular cubic graphs without 3- and
// 4-cycles, 20^(n/12) when circular.
inline BoundEntry semicircular_cubic_bound(const Graph& g, const CircularDecomposition& cd) {
  const char* name = "semicircular_cubic";
  if (!g.is_regular(3)) return BoundEntry::not_applicable(name, "graph is not cubic");
  const auto sc = has_short_cycles(g);
  if (sc.has3 || sc.has4) return BoundEntry::not_applicable(name, "graph has a 3- or 4-cycle");
  if (cd.rings.empty()) return BoundEntry::not_applicable(name, "no rings");
  if (auto chk = validate_decomposition(g, cd); !chk.valid)
    return BoundEntry::not_applicable(name, "invalid decomposition: " + chk.reason);
  const int n = g.order();
  if (cd.circular()) {
    BoundEntry e = BoundEntry::of(name, {Rational(pow(BigInt(20), static_cast<unsigned>(n))), 12});
    e.reason = "circular";
    return e;
  }
  const int n1 = static_cast<int>(cd.first_block().size());
  BoundEntry e = BoundEntry::of(name, {Rational(pow(BigInt(20), static_cast<unsigned>(n - n1)) *
                                                pow(BigInt(3), static_cast<unsigned>(3 * n1))),
                                       12});
  e.reason = "n1 = " + std::to_string(n1);
  return e;
}

// 5^((n-20)/10) perfect matchings at least, for pentacaps.
inline BoundEntry pentacap_lower_bound(int n) {
  if (n < 20) throw ParameterError("pentacap lower bound needs n >= 20");
  return BoundEntry::of("pentacap_lower", {Rational(pow(BigInt(5), static_cast<unsigned>(n - 20))), 10},
                        BoundKind::lower);
}

}  // namespace perfmatch
