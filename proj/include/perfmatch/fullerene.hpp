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
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "perfmatch/decomposition.hpp"
#include "perfmatch/embedding.hpp"
#include "perfmatch/errors.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/leapfrog.hpp"

namespace perfmatch {

// A generated plane graph together with its ring structure.
struct LayeredGraph {
  PlanarEmbedding embedding;
  CircularDecomposition decomposition;
  const Graph& graph() const { return embedding.graph(); }
};

// Circular cap fullerene with end rings C_k and `layers` middle rings C_2k.
//
// Numbering is ring-major from the innermost ring, clockwise within a ring.
// Ring 0 is 1..k. Middle ring i (1-based) occupies k(2i-1)+1 .. k(2i+1);
// its even offsets attach to the ring inside, odd offsets to the ring
// outside. The outer ring's vertex j attaches to offset 2j+1 of the last
// middle ring. The outer face is bounded by the outer ring.
inline LayeredGraph circular_cap(int k, int layers) {
  if (k < 3) throw ParameterError("cap ring needs k >= 3");
  if (layers < 1) throw ParameterError("cap needs at least one middle ring");
  const int n = 2 * k * (layers + 1);
  std::vector<std::vector<Vertex>> rings;
  Vertex next = 1;
  auto make_ring = [&](int size) {
    std::vector<Vertex> r;
    for (int i = 0; i < size; ++i) r.push_back(next++);
    rings.push_back(std::move(r));
  };
  make_ring(k);
  for (int i = 1; i <= layers; ++i) make_ring(2 * k);
  make_ring(k);

  std::vector<Edge> edges;
  std::vector<Point> xy(static_cast<std::size_t>(n) + 1);
  const double step = std::numbers::pi / k;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const auto& r = rings[i];
    const int m = static_cast<int>(r.size());
    for (int p = 0; p < m; ++p) edges.push_back({r[static_cast<std::size_t>(p)], r[static_cast<std::size_t>((p + 1) % m)]});
    const double radius = std::ldexp(1.0, static_cast<int>(i));
    for (int p = 0; p < m; ++p) {
      double slot;  // angle in units of pi/k
      if (i == 0) slot = 2.0 * p;
      else if (i + 1 < rings.size()) slot = p + static_cast<double>(i) - 1.0;
      else slot = 2.0 * p + layers;
      xy[static_cast<std::size_t>(r[static_cast<std::size_t>(p)])] = {radius * std::cos(-slot * step),
                                                                       radius * std::sin(-slot * step)};
    }
  }
  for (int j = 0; j < k; ++j) edges.push_back({rings[0][static_cast<std::size_t>(j)], rings[1][static_cast<std::size_t>(2 * j)]});
  for (int i = 1; i < layers; ++i)
    for (int j = 0; j < k; ++j)
      edges.push_back({rings[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 * j + 1)],
                       rings[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(2 * j)]});
  for (int j = 0; j < k; ++j)
    edges.push_back({rings[static_cast<std::size_t>(layers)][static_cast<std::size_t>(2 * j + 1)],
                     rings.back()[static_cast<std::size_t>(j)]});

  return {embed_from_coordinates(Graph(n, std::move(edges)), xy), {{}, std::move(rings)}};
}

inline LayeredGraph pentacap(int layers) { return circular_cap(5, layers); }
inline LayeredGraph hexacap(int layers) { return circular_cap(6, layers); }

struct FullereneCheck {
  bool is_fullerene = false;
  int pentagons = 0;
  int hexagons = 0;
  std::vector<std::string> reasons;  // empty iff is_fullerene
};

// Cubic plane graph with only pentagonal and hexagonal faces. Euler then
// forces p = 12, n = 2h + 20, m = 3h + 30; all three are checked.
inline FullereneCheck validate_fullerene(const PlanarEmbedding& e) {
  FullereneCheck r;
  const Graph& g = e.graph();
  if (!g.is_regular(3)) r.reasons.push_back("not 3-regular");
  for (const Face& f : e.faces()) {
    if (f.length() == 5) ++r.pentagons;
    else if (f.length() == 6) ++r.hexagons;
    else r.reasons.push_back("face of length " + std::to_string(f.length()));
  }
  if (r.pentagons != 12) r.reasons.push_back("pentagon count " + std::to_string(r.pentagons) + " != 12");
  if (g.order() != 2 * r.hexagons + 20) r.reasons.push_back("n != 2h + 20");
  if (g.size() != 3 * r.hexagons + 30) r.reasons.push_back("m != 3h + 30");
  r.is_fullerene = r.reasons.empty();
  return r;
}

// Subdivides every edge of the first ring C_k with a new vertex u_i and
// attaches each u_i to a new inner ring C_k of vertices w_i: k pentagons
// around the old cap turn into hexagons, and a new layer of k pentagons
// closes the new cap. Adds 2k vertices. The result is renumbered
// ring-major from the new innermost ring.
inline LayeredGraph extend_cap(const LayeredGraph& f) {
  const auto& cd = f.decomposition;
  if (!cd.circular() || cd.ring_count() < 2) throw PreconditionError("extend_cap needs a circular graph with two rings");
  const int k = static_cast<int>(cd.rings[0].size());
  if ((k != 5 && k != 6) || static_cast<int>(cd.rings[1].size()) != 2 * k)
    throw PreconditionError("extend_cap needs rings C_k, C_2k with k in {5, 6}");
  const PlanarEmbedding& e = f.embedding;
  const Graph& g = e.graph();
  const int n = g.order();

  // The cap face bounded by ring 1, walked with the cap on its right.
  const auto& first = cd.rings[0];
  std::vector<Vertex> sorted_first = first;
  std::sort(sorted_first.begin(), sorted_first.end());
  const Face* cap = nullptr;
  for (std::size_t i = 0; i < e.faces().size(); ++i) {
    if (static_cast<int>(i) == e.outer_index()) continue;
    std::vector<Vertex> vs = e.faces()[i].walk;
    std::sort(vs.begin(), vs.end());
    if (vs == sorted_first) cap = &e.faces()[i];
  }
  if (!cap) throw PreconditionError("first ring does not bound a face");

  // u_i subdivides cap dart i (walk[i] -> walk[i+1]); w_i lies inside the cap.
  const Vertex u0 = n + 1, w0 = n + k + 1;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n + 2 * k) + 1);
  for (Vertex v = 1; v <= n; ++v) rot[v] = e.around(v);
  for (const Edge& x : g.edges()) {
    if (std::binary_search(sorted_first.begin(), sorted_first.end(), x.u) &&
        std::binary_search(sorted_first.begin(), sorted_first.end(), x.v))
      continue;
    edges.push_back(x);
  }
  for (int i = 0; i < k; ++i) {
    const Dart d = cap->dart(i);
    const Vertex u = u0 + i, w = w0 + i;
    const Vertex w_next = w0 + (i + 1) % k, w_prev = w0 + (i + k - 1) % k;
    std::replace(rot[d.from].begin(), rot[d.from].end(), d.to, u);
    std::replace(rot[d.to].begin(), rot[d.to].end(), d.from, u);
    rot[u] = {d.to, d.from, w};
    rot[w] = {w_next, u, w_prev};
    edges.push_back({d.from, u});
    edges.push_back({u, d.to});
    edges.push_back({u, w});
    edges.push_back({w, w_next});
  }
  const int total = n + 2 * k;
  PlanarEmbedding grown(Graph(total, std::move(edges)), std::move(rot), e.outer_key());

  std::vector<std::vector<Vertex>> rings;
  std::vector<Vertex> inner_ring, second;
  for (int i = 0; i < k; ++i) {
    inner_ring.push_back(w0 + i);
    second.push_back(cap->walk[static_cast<std::size_t>(i)]);
    second.push_back(u0 + i);
  }
  rings.push_back(std::move(inner_ring));
  rings.push_back(std::move(second));
  for (std::size_t j = 1; j < cd.rings.size(); ++j) rings.push_back(cd.rings[j]);

  // Ring-major renumbering.
  std::vector<Vertex> new_id(static_cast<std::size_t>(total) + 1, 0);
  Vertex next = 1;
  for (const auto& r : rings)
    for (Vertex v : r) new_id[static_cast<std::size_t>(v)] = next++;
  for (auto& r : rings)
    for (Vertex& v : r) v = new_id[static_cast<std::size_t>(v)];
  return {relabeled(grown, new_id), {{}, std::move(rings)}};
}

struct LeapfrogStructure {
  bool circular = false;
  bool detected = false;
  std::vector<int> profile;  // innermost ring first
  int inner_size = 0;
  std::vector<int> predicted_profile;
  int predicted_inner = 0;
  bool le_is_fullerene = false;
  bool vertex_count_tripled = false;
  bool matches_prediction = false;
};

// Predicted rings of Le(F) for a cap with `layers` middle rings, innermost
// first. Odd: C_k, C_3k, (3l-1)/2 rings C_4k, C_3k, C_k, circular. Even:
// C_k, 3l/2 rings C_4k, C_3k, C_k around k inner vertices.
inline std::vector<int> predicted_leapfrog_profile(int k, int layers) {
  std::vector<int> p;
  if (layers % 2 == 1) {
    p = {k, 3 * k};
    for (int i = 0; i < (3 * layers - 1) / 2; ++i) p.push_back(4 * k);
    p.push_back(3 * k);
    p.push_back(k);
  } else {
    p = {k};
    for (int i = 0; i < 3 * layers / 2; ++i) p.push_back(4 * k);
    p.push_back(3 * k);
    p.push_back(k);
  }
  return p;
}

inline LeapfrogStructure verify_leapfrog_structure(int k, int layers) {
  const LayeredGraph f = circular_cap(k, layers);
  const PlanarEmbedding le = leapfrog(f.embedding);
  LeapfrogStructure r;
  r.le_is_fullerene = validate_fullerene(le).is_fullerene;
  r.vertex_count_tripled = le.graph().order() == 3 * f.graph().order();
  r.predicted_profile = predicted_leapfrog_profile(k, layers);
  r.predicted_inner = layers % 2 == 1 ? 0 : k;
  if (auto cd = detect_semicircular(le)) {
    r.detected = true;
    r.circular = cd->circular();
    r.profile = cd->profile();
    r.inner_size = static_cast<int>(cd->inner.size());
  }
  r.matches_prediction = r.detected && r.profile == r.predicted_profile && r.inner_size == r.predicted_inner;
  return r;
}

}  // namespace perfmatch
