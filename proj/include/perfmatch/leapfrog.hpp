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
#include <map>
#include <vector>

#include "perfmatch/embedding.hpp"
#include "perfmatch/errors.hpp"

namespace perfmatch {

// Leapfrog Le(G): stellate every face (outer included) and take the dual of
// the resulting triangulation.
//
// The triangles of the stellation are in bijection with the darts of G: dart
// u->v on face F spans the triangle (w_F, u, v). Across w_F-u and w_F-v it
// meets the triangles of the previous and next darts of F, across u-v the
// triangle of the reversed dart. Vertices of Le(G) are numbered by walking
// the faces of G in canonical order. The outer face of Le(G) is the one
// around the point placed in G's outer face.
inline PlanarEmbedding leapfrog(const PlanarEmbedding& e) {
  if (!e.bridges().empty()) throw PreconditionError("leapfrog needs a bridgeless graph");
  const auto& faces = e.faces();
  std::map<Dart, Vertex> id;
  Vertex next_id = 1;
  for (const Face& f : faces)
    for (int i = 0; i < f.length(); ++i) id[f.dart(i)] = next_id++;
  const int n = next_id - 1;

  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n) + 1);
  for (const Face& f : faces) {
    const int L = f.length();
    for (int i = 0; i < L; ++i) {
      const Dart d = f.dart(i);
      const Vertex self = id.at(d);
      const Vertex prev = id.at(f.dart((i + L - 1) % L));
      const Vertex nxt = id.at(f.dart(i + 1));
      const Vertex rev = id.at(d.reversed());
      // Counterclockwise around the triangle (u, w_F, v).
      rot[self] = {prev, nxt, rev};
      if (self < nxt) edges.push_back({self, nxt});
      if (self < prev && prev != nxt) edges.push_back({self, prev});
      if (self < rev) edges.push_back({self, rev});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g(n, std::move(edges));

  // Le's outer face is the cycle of darts of G's outer face.
  const Face& outer = e.outer_face();
  std::vector<Vertex> ring;
  for (int i = 0; i < outer.length(); ++i) ring.push_back(id.at(outer.dart(i)));
  std::sort(ring.begin(), ring.end());
  RotationSystem rs(g, rot);
  Dart key{};
  bool found = false;
  for (const Face& f : rs.trace_faces()) {
    std::vector<Vertex> vs = f.walk;
    std::sort(vs.begin(), vs.end());
    if (vs == ring) {
      key = f.key();
      found = true;
      break;
    }
  }
  if (!found) throw ConsistencyError("leapfrog lost the outer face");
  return PlanarEmbedding(std::move(g), std::move(rot), key);
}

}  // namespace perfmatch
