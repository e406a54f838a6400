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
#include <set>
#include <string>
#include <vector>

#include "perfmatch/embedding.hpp"
#include "perfmatch/graph.hpp"

namespace perfmatch {

// Nested ring structure: rings[0] is the innermost cycle U_1, rings.back()
// the outermost; `inner` holds the vertices strictly inside U_1 (V_0).
// Each ring lists its vertices in cycle order.
struct CircularDecomposition {
  std::vector<Vertex> inner;
  std::vector<std::vector<Vertex>> rings;

  bool circular() const { return inner.empty(); }
  int ring_count() const { return static_cast<int>(rings.size()); }

  std::vector<int> profile() const {
    std::vector<int> p;
    for (const auto& r : rings) p.push_back(static_cast<int>(r.size()));
    return p;
  }

  // V_1 = V_0 plus the first ring.
  std::vector<Vertex> first_block() const {
    std::vector<Vertex> b = inner;
    if (!rings.empty()) b.insert(b.end(), rings.front().begin(), rings.front().end());
    return b;
  }
};

struct DecompositionCheck {
  bool valid = false;
  std::string reason;
};

// Structural validation: rings and V_0 partition V, each ring induces exactly
// its cycle, edges run only within a ring, between consecutive rings, or
// between V_0 and the first ring, and consecutive rings are linked.
inline DecompositionCheck validate_decomposition(const Graph& g, const CircularDecomposition& cd) {
  auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
  const int n = g.order();
  if (cd.rings.empty()) return fail("no rings");
  if (!is_connected(g)) return fail("graph is disconnected");
  // level: 0 for V_0, j for ring j (1-based).
  std::vector<int> level(static_cast<std::size_t>(n) + 1, -1);
  auto assign = [&](Vertex v, int lv) {
    if (v < 1 || v > n) return false;
    if (level[v] != -1) return false;
    level[v] = lv;
    return true;
  };
  for (Vertex v : cd.inner)
    if (!assign(v, 0)) return fail("inner set repeats or names a bad vertex");
  for (int j = 0; j < cd.ring_count(); ++j) {
    const auto& ring = cd.rings[static_cast<std::size_t>(j)];
    if (ring.size() < 3) return fail("ring " + std::to_string(j + 1) + " has fewer than 3 vertices");
    for (Vertex v : ring)
      if (!assign(v, j + 1)) return fail("ring " + std::to_string(j + 1) + " repeats or names a bad vertex");
  }
  for (Vertex v = 1; v <= n; ++v)
    if (level[v] == -1) return fail("vertex " + std::to_string(v) + " is not covered");

  std::vector<int> ring_edges(static_cast<std::size_t>(cd.ring_count()) + 1, 0);
  std::vector<int> links(static_cast<std::size_t>(cd.ring_count()) + 1, 0);
  for (const Edge& e : g.edges()) {
    const int a = std::min(level[e.u], level[e.v]);
    const int b = std::max(level[e.u], level[e.v]);
    if (a == b) {
      if (a > 0) ++ring_edges[static_cast<std::size_t>(a)];
    } else if (b - a != 1) {
      return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " skips a ring");
    } else if (a > 0) {
      ++links[static_cast<std::size_t>(a)];
    }
  }
  for (int j = 0; j < cd.ring_count(); ++j) {
    const auto& ring = cd.rings[static_cast<std::size_t>(j)];
    const std::size_t m = ring.size();
    for (std::size_t i = 0; i < m; ++i)
      if (!g.adjacent(ring[i], ring[(i + 1) % m]))
        return fail("ring " + std::to_string(j + 1) + " is not a cycle in the given order");
    if (ring_edges[static_cast<std::size_t>(j) + 1] != static_cast<int>(m))
      return fail("ring " + std::to_string(j + 1) + " has chords");
    if (j + 1 < cd.ring_count() && links[static_cast<std::size_t>(j) + 1] == 0)
      return fail("rings " + std::to_string(j + 1) + " and " + std::to_string(j + 2) + " are not linked");
  }
  return {true, {}};
}

namespace detail {

inline bool induces_cycle(const Graph& g, const std::vector<Vertex>& walk) {
  if (walk.size() < 3) return false;
  std::vector<Vertex> s = walk;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  std::size_t inside = 0;
  for (Vertex v : walk)
    for (Vertex u : g.neighbors(v))
      if (u > v && std::binary_search(s.begin(), s.end(), u)) ++inside;
  return inside == walk.size();
}

}  // namespace detail

// Greedy outer peeling. The outer face boundary must be an induced cycle;
// it becomes the outermost ring and is deleted. The next ring is the face of
// the remaining plane graph that swallowed the deleted ring. Peeling stops
// when nothing is left (circular) or the region is no longer bounded by an
// induced cycle (the remainder becomes V_0).
//
// nullopt means "not detected", not "not semi-circular": the greedy choice
// of rings need not find every realization.
inline std::optional<CircularDecomposition> detect_semicircular(
    const PlanarEmbedding& e, const std::optional<CircularDecomposition>& hint = std::nullopt) {
  const Graph& g = e.graph();
  if (hint) {
    if (!validate_decomposition(g, *hint).valid) return std::nullopt;
    return hint;
  }
  const int n = g.order();
  std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
  std::vector<std::vector<Vertex>> outer_to_inner;

  std::vector<Vertex> boundary = e.outer_face().walk;
  if (!detail::induces_cycle(g, boundary)) return std::nullopt;

  while (true) {
    outer_to_inner.push_back(boundary);
    for (Vertex v : boundary) alive[v] = 0;

    std::vector<Vertex> rest;
    for (Vertex v = 1; v <= n; ++v)
      if (alive[v]) rest.push_back(v);
    if (rest.empty()) break;

    // Plane subgraph on the survivors, renumbered 1..|rest|.
    std::vector<int> local(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < rest.size(); ++i) local[rest[i]] = static_cast<int>(i) + 1;
    const Graph sub = induced_subgraph(g, rest);
    std::vector<std::vector<Vertex>> rot(rest.size() + 1);
    for (Vertex v : rest)
      for (Vertex u : e.around(v))
        if (alive[u]) rot[local[v]].push_back(local[u]);
    const RotationSystem rs(sub, rot);

    // Each survivor touching the deleted ring marks the face through the
    // angle where the deleted neighbor sat.
    std::optional<Dart> region;
    std::set<std::vector<Vertex>> candidate_faces;
    bool peelable = true;
    for (Vertex r : boundary) {
      for (Vertex x : g.neighbors(r)) {
        if (!alive[x]) continue;
        const auto& around = e.around(x);
        const auto it = std::find(around.begin(), around.end(), r);
        auto pos = static_cast<std::size_t>(it - around.begin());
        std::optional<Vertex> before;
        for (std::size_t step = 1; step < around.size(); ++step) {
          Vertex c = around[(pos + around.size() - step) % around.size()];
          if (alive[c]) {
            before = c;
            break;
          }
        }
        if (!before) {
          peelable = false;
          break;
        }
        region = Dart{local[*before], local[x]};
        // Trace the face through this dart.
        std::vector<Vertex> walk;
        Dart d = *region;
        do {
          walk.push_back(d.from);
          d = rs.next(d);
        } while (d != *region);
        Face f{walk};
        RotationSystem::canonicalize(f);
        candidate_faces.insert(f.walk);
      }
      if (!peelable) break;
    }
    if (!peelable || candidate_faces.size() != 1) {
      break;
    }
    std::vector<Vertex> next;
    for (Vertex v : *candidate_faces.begin()) next.push_back(rest[static_cast<std::size_t>(v) - 1]);
    if (!detail::induces_cycle(g, next)) break;
    boundary = std::move(next);
  }

  CircularDecomposition cd;
  for (Vertex v = 1; v <= n; ++v)
    if (alive[v]) cd.inner.push_back(v);
  cd.rings.assign(outer_to_inner.rbegin(), outer_to_inner.rend());
  return cd;
}

}  // namespace perfmatch
