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
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "perfmatch/errors.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/matrix.hpp"
#include "perfmatch/numeric.hpp"
#include "perfmatch/polynomial.hpp"

namespace perfmatch {

inline constexpr int kDefaultOracleGuard = 40;

// A set of pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> pairs;

  int size() const { return static_cast<int>(pairs.size()); }

  std::vector<Vertex> covered() const {
    std::vector<Vertex> c;
    for (const Edge& e : pairs) {
      c.push_back(e.u);
      c.push_back(e.v);
    }
    std::sort(c.begin(), c.end());
    return c;
  }

  bool is_perfect(int n) const { return 2 * size() == n; }

  // Every pair is an edge of g and no vertex is used twice.
  bool is_valid_in(const Graph& g) const {
    for (const Edge& e : pairs)
      if (!g.adjacent(e.u, e.v)) return false;
    auto c = covered();
    return std::adjacent_find(c.begin(), c.end()) == c.end();
  }
};

namespace detail {

inline void check_guard(int n, int guard) {
  if (n > guard || n > 64) throw OracleTooLarge(n, std::min(guard, 64));
}

inline std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint64_t> nb(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    nb[static_cast<std::size_t>(e.u - 1)] |= std::uint64_t{1} << (e.v - 1);
    nb[static_cast<std::size_t>(e.v - 1)] |= std::uint64_t{1} << (e.u - 1);
  }
  return nb;
}

// Number of perfect matchings of the subgraph on `free` (bit i = vertex i+1),
// branching on the lowest free vertex.
inline std::uint64_t count_pm(const std::vector<std::uint64_t>& nb, std::uint64_t free) {
  if (free == 0) return 1;
  const int v = std::countr_zero(free);
  const std::uint64_t rest = free & (free - 1);
  std::uint64_t options = nb[static_cast<std::size_t>(v)] & rest;
  std::uint64_t total = 0;
  while (options != 0) {
    const int u = std::countr_zero(options);
    options &= options - 1;
    total += count_pm(nb, rest & ~(std::uint64_t{1} << u));
  }
  return total;
}

}  // namespace detail

// Exact perfect-matching count by exhaustive branching. This is the ground
// truth every determinant-based count is checked against.
inline BigInt enumerate_perfect_matchings(const Graph& g, int guard = kDefaultOracleGuard) {
  const int n = g.order();
  if (n % 2 != 0) return 0;
  detail::check_guard(n, guard);
  if (n == 0) return 1;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return BigInt(detail::count_pm(detail::neighbor_masks(g), all));
}

// Same recursion, materializing every perfect matching.
inline std::vector<Matching> list_perfect_matchings(const Graph& g,
                                                    int guard = kDefaultOracleGuard) {
  const int n = g.order();
  std::vector<Matching> out;
  if (n % 2 != 0) return out;
  detail::check_guard(n, guard);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  Matching current;
  std::function<void()> rec = [&]() {
    Vertex v = 1;
    while (v <= n && used[v]) ++v;
    if (v > n) {
      out.push_back(current);
      return;
    }
    used[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      if (used[u]) continue;
      used[u] = 1;
      current.pairs.push_back({v, u});
      rec();
      current.pairs.pop_back();
      used[u] = 0;
    }
    used[v] = 0;
  };
  rec();
  return out;
}

// haf W: sum over perfect matchings of K_n of the product of matched entries.
template <typename T>
T hafnian(const Matrix<T>& w, int guard = kDefaultOracleGuard) {
  const int n = w.order();
  if (n % 2 != 0) throw ParameterError("hafnian needs even order");
  if (!w.is_symmetric()) throw ParameterError("hafnian needs a symmetric matrix");
  for (int i = 0; i < n; ++i)
    if (w(i, i) != 0) throw ParameterError("hafnian needs a zero diagonal");
  detail::check_guard(n, guard);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<T()> rec = [&]() -> T {
    int i = 0;
    while (i < n && used[static_cast<std::size_t>(i)]) ++i;
    if (i == n) return T(1);
    used[static_cast<std::size_t>(i)] = 1;
    T total = 0;
    for (int j = i + 1; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)] || w(i, j) == 0) continue;
      used[static_cast<std::size_t>(j)] = 1;
      total += w(i, j) * rec();
      used[static_cast<std::size_t>(j)] = 0;
    }
    used[static_cast<std::size_t>(i)] = 0;
    return total;
  };
  return rec();
}

template <typename T = BigInt>
Matrix<T> adjacency_matrix(const Graph& g) {
  Matrix<T> a(g.order());
  for (const Edge& e : g.edges()) a(e.u - 1, e.v - 1) = a(e.v - 1, e.u - 1) = T(1);
  return a;
}

inline RationalMatrix adjacency_matrix(const WeightedGraph& g) {
  RationalMatrix a(g.graph().order());
  const auto& edges = g.graph().edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    a(edges[i].u - 1, edges[i].v - 1) = a(edges[i].v - 1, edges[i].u - 1) = g.weights()[i];
  return a;
}

// Matching polynomial coefficients: coeffs[k] = phi(k, G), the number of
// k-edge matchings.
struct MatchPolynomial {
  std::vector<BigInt> coeffs;

  BigInt coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(k)];
  }
  // Total number of matchings (the polynomial at t = 1).
  BigInt total() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs) s += c;
    return s;
  }
  // As a polynomial in t with one factor of t per edge.
  Polynomial per_edge() const { return Polynomial(coeffs); }
  // As a polynomial in t with t^2 per edge (t per covered vertex).
  Polynomial per_vertex() const {
    std::vector<BigInt> v(coeffs.size() * 2, BigInt(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) v[2 * k] = coeffs[k];
    return Polynomial(std::move(v));
  }
  friend bool operator==(const MatchPolynomial&, const MatchPolynomial&) = default;
};

namespace detail {

inline MatchPolynomial from_polynomial(const Polynomial& p) {
  MatchPolynomial r{p.coeffs()};
  if (r.coeffs.empty()) r.coeffs.push_back(0);
  return r;
}

}  // namespace detail

// General graphs: phi(R) = phi(R - v) + t * sum_{u ~ v} phi(R - v - u) for the
// lowest remaining vertex v, memoized on the remaining vertex set.
inline MatchPolynomial matching_polynomial(const Graph& g, int guard = kDefaultOracleGuard) {
  const int n = g.order();
  detail::check_guard(n, guard);
  const auto nb = detail::neighbor_masks(g);
  std::unordered_map<std::uint64_t, Polynomial> memo;
  const Polynomial t = Polynomial::monomial(1, 1);
  std::function<Polynomial(std::uint64_t)> rec = [&](std::uint64_t rest) -> Polynomial {
    if (rest == 0) return 1;
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    const int v = std::countr_zero(rest);
    const std::uint64_t without = rest & (rest - 1);
    Polynomial sum = 0;
    std::uint64_t options = nb[static_cast<std::size_t>(v)] & without;
    while (options != 0) {
      const int u = std::countr_zero(options);
      options &= options - 1;
      sum += rec(without & ~(std::uint64_t{1} << u));
    }
    Polynomial r = rec(without) + t * sum;
    memo.emplace(rest, r);
    return r;
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return detail::from_polynomial(rec(all));
}

// P_n on n vertices: phi(P_n) = phi(P_{n-1}) + t phi(P_{n-2}), phi(P_0) = phi(P_1) = 1.
inline MatchPolynomial path_matching_polynomial(int n) {
  if (n < 0) throw ParameterError("path length must be nonnegative");
  const Polynomial t = Polynomial::monomial(1, 1);
  Polynomial a = 1, b = 1;  // P_0, P_1
  if (n == 0) return detail::from_polynomial(a);
  for (int k = 2; k <= n; ++k) {
    Polynomial c = b + t * a;
    a = std::move(b);
    b = std::move(c);
  }
  return detail::from_polynomial(b);
}

// phi(C_n) = phi(P_n) + t phi(P_{n-2}).
inline MatchPolynomial cycle_matching_polynomial(int n) {
  if (n < 3) throw ParameterError("C_n needs n >= 3");
  const Polynomial t = Polynomial::monomial(1, 1);
  return detail::from_polynomial(path_matching_polynomial(n).per_edge() +
                                 t * path_matching_polynomial(n - 2).per_edge());
}

// Maximal (not maximum) matching: scan vertices in `order` (default 1..n),
// pairing each free vertex with its lowest-numbered free neighbor.
inline Matching greedy_maximal_matching(const Graph& g, std::span<const Vertex> order = {}) {
  const int n = g.order();
  std::vector<Vertex> seq(order.begin(), order.end());
  if (seq.empty())
    for (Vertex v = 1; v <= n; ++v) seq.push_back(v);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  Matching m;
  for (Vertex v : seq) {
    if (v < 1 || v > n) throw ParameterError("order names a vertex out of range");
    if (used[v]) continue;
    for (Vertex u : g.neighbors(v)) {
      if (used[u]) continue;
      used[u] = used[v] = 1;
      m.pairs.push_back({std::min(u, v), std::max(u, v)});
      break;
    }
  }
  return m;
}

// From a simple path p_0..p_l (l >= 3 edges) in g, pairs p_i with p_{i+2}
// in blocks of four consecutive vertices. Returns a matching of the square
// graph of size 2*floor(l/4) for even l and floor(l/2) for odd l.
inline Matching matching_from_path(const Graph& g, std::span<const Vertex> path) {
  const int l = static_cast<int>(path.size()) - 1;
  if (l < 3) throw ParameterError("path must have length at least 3");
  std::vector<Vertex> seen(path.begin(), path.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw ParameterError("path repeats a vertex");
  for (int i = 0; i < l; ++i)
    if (!g.adjacent(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i) + 1]))
      throw ParameterError("path uses a non-edge");
  const int target = l % 2 == 0 ? 2 * (l / 4) : l / 2;
  Matching m;
  for (int b = 0; b + 3 <= l && m.size() < target; b += 4) {
    for (int off = 0; off < 2 && m.size() < target; ++off) {
      Vertex a = path[static_cast<std::size_t>(b + off)];
      Vertex c = path[static_cast<std::size_t>(b + off + 2)];
      m.pairs.push_back({std::min(a, c), std::max(a, c)});
    }
  }
  return m;
}

}  // namespace perfmatch
