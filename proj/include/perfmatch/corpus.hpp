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
#include <numbers>
#include <string>
#include <vector>

#include "perfmatch/embedding.hpp"
#include "perfmatch/errors.hpp"
#include "perfmatch/fullerene.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/leapfrog.hpp"
#include "perfmatch/pfaffian.hpp"
#include "perfmatch/report.hpp"

namespace perfmatch {

namespace detail {

inline Point polar(double r, double turns) {
  const double a = -2.0 * std::numbers::pi * turns;  // clockwise
  return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace detail

// Straight-line plane drawings of the small classics. Index 0 is unused.
inline PlanarEmbedding k4_embedding() {
  std::vector<Point> xy{{}, detail::polar(1, 0), detail::polar(1, 1.0 / 3), detail::polar(1, 2.0 / 3), {0, 0}};
  return embed_from_coordinates(complete_graph(4), xy);
}

inline PlanarEmbedding cycle_embedding(int n) {
  std::vector<Point> xy(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) xy[static_cast<std::size_t>(i)] = detail::polar(1, static_cast<double>(i - 1) / n);
  return embed_from_coordinates(cycle_graph(n), xy);
}

// K_{1,1} and K_{2,2}; K_{r,r} is not planar for r >= 3.
inline PlanarEmbedding complete_bipartite_embedding(int r) {
  if (r == 1) {
    std::vector<Point> xy{{}, {0, 0}, {1, 0}};
    return embed_from_coordinates(complete_bipartite(1), xy);
  }
  if (r == 2) {
    std::vector<Point> xy{{}, {0, 1}, {0, -1}, {1, 0}, {-1, 0}};
    return embed_from_coordinates(complete_bipartite(2), xy);
  }
  throw ParameterError("K_{r,r} is planar only for r <= 2");
}

// Outer triangle 1,2,3; inner triangle 4,5,6 with v+3 opposite v.
inline PlanarEmbedding octahedron_embedding() {
  std::vector<Point> xy(7);
  for (int i = 0; i < 3; ++i) {
    xy[static_cast<std::size_t>(i) + 1] = detail::polar(2, i / 3.0);
    xy[static_cast<std::size_t>(i) + 4] = detail::polar(0.5, i / 3.0 + 0.5);
  }
  return embed_from_coordinates(octahedron(), xy);
}

// C_n x K_2 as two concentric n-gons; (u, c) is vertex 2(u-1) + c.
inline PlanarEmbedding prism_embedding(int n) {
  const Graph g = cartesian_product(cycle_graph(n), complete_graph(2));
  std::vector<Point> xy(static_cast<std::size_t>(2 * n) + 1);
  for (int u = 1; u <= n; ++u)
    for (int c = 1; c <= 2; ++c)
      xy[static_cast<std::size_t>(2 * (u - 1) + c)] = detail::polar(c == 1 ? 2 : 1, static_cast<double>(u - 1) / n);
  return embed_from_coordinates(g, xy);
}

inline PlanarEmbedding dodecahedron_embedding() { return pentacap(1).embedding; }

// Names accepted by classic_embedding / `gen classic`.
inline std::vector<std::string> classic_names() {
  return {"k4", "octahedron", "prism4", "dodecahedron", "k1,1", "k2,2", "cycle"};
}

inline PlanarEmbedding classic_embedding(const std::string& name, int param = 0) {
  if (name == "k4") return k4_embedding();
  if (name == "octahedron") return octahedron_embedding();
  if (name == "prism4") return prism_embedding(4);
  if (name == "prism") return prism_embedding(param);
  if (name == "dodecahedron") return dodecahedron_embedding();
  if (name == "k1,1") return complete_bipartite_embedding(1);
  if (name == "k2,2") return complete_bipartite_embedding(2);
  if (name == "cycle") return cycle_embedding(param);
  throw ParameterError("unknown classic graph '" + name + "'");
}

inline GraphInput family_input(const std::string& id, const LayeredGraph& f, const std::string& family) {
  GraphInput in(id, f.embedding, family);
  in.decomposition = f.decomposition;
  return in;
}

// The built-in corpus, in report order.
inline std::vector<GraphInput> builtin_corpus() {
  std::vector<GraphInput> c;
  c.emplace_back("K4", k4_embedding());
  for (int n = 4; n <= 12; ++n) c.emplace_back("C" + std::to_string(n), cycle_embedding(n));
  c.emplace_back("K1,1", complete_bipartite_embedding(1));
  c.emplace_back("K2,2", complete_bipartite_embedding(2));
  c.emplace_back("K3,3", complete_bipartite(3));
  c.emplace_back("K6", complete_graph(6));
  c.emplace_back("C4xK2", prism_embedding(4));
  {
    GraphInput k4k2("K4xK2", cartesian_product(complete_graph(4), complete_graph(2)));
    k4k2.attested_orientation = k4xk2_pfaffian_fixture();
    c.push_back(std::move(k4k2));
  }
  c.emplace_back("octahedron", octahedron_embedding());
  c.emplace_back("dodecahedron", dodecahedron_embedding(), "dodecahedron");
  for (int l = 1; l <= 3; ++l) c.push_back(family_input("pentacap-" + std::to_string(l), pentacap(l), "pentacap"));
  for (int l = 1; l <= 2; ++l) c.push_back(family_input("hexacap-" + std::to_string(l), hexacap(l), "hexacap"));
  c.emplace_back("leapfrog-pentacap-1", leapfrog(pentacap(1).embedding), "leapfrog");
  c.push_back(family_input("extended-pentacap-1", extend_cap(pentacap(1)), "extended"));
  c.push_back(family_input("extended-hexacap-1", extend_cap(hexacap(1)), "extended"));
  return c;
}

}  // namespace perfmatch
