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
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "perfmatch/errors.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/numeric.hpp"

namespace perfmatch {

// Directed edge u -> v.
struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  Dart reversed() const { return {to, from}; }
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Closed boundary walk: walk[i] -> walk[i+1], wrapping. Canonically rotated
// so that (walk[0], walk[1]) is the lexicographically smallest dart.
struct Face {
  std::vector<Vertex> walk;

  int length() const { return static_cast<int>(walk.size()); }
  Dart key() const { return {walk[0], walk[1 % walk.size()]}; }
  Dart dart(int i) const {
    const auto L = walk.size();
    return {walk[static_cast<std::size_t>(i) % L], walk[(static_cast<std::size_t>(i) + 1) % L]};
  }
  bool is_simple_cycle() const {
    std::vector<Vertex> s = walk;
    std::sort(s.begin(), s.end());
    return walk.size() >= 3 && std::adjacent_find(s.begin(), s.end()) == s.end();
  }
};

// Rotation system bookkeeping shared by validated embeddings and by the raw
// face tracer used on intermediate subgraphs.
//
// Convention: rotation[v] lists v's neighbors counterclockwise. The face
// successor of dart u->v is v->w with w following u in rotation[v]; every
// face lies to the right of its darts, so bounded faces run clockwise and
// the outer face counterclockwise.
class RotationSystem {
 public:
  RotationSystem() = default;

  RotationSystem(const Graph& g, std::vector<std::vector<Vertex>> rotation)
      : rotation_(std::move(rotation)) {
    const int n = g.order();
    if (static_cast<int>(rotation_.size()) != n + 1)
      throw EmbeddingError("rotation must list every vertex 1.." + std::to_string(n));
    offset_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (Vertex v = 1; v <= n; ++v) offset_[v + 1] = offset_[v] + g.degree(v);
    position_.assign(static_cast<std::size_t>(offset_[n + 1]), -1);
    neighbors_.assign(static_cast<std::size_t>(n) + 1, {});
    for (Vertex v = 1; v <= n; ++v) {
      auto nb = g.neighbors(v);
      neighbors_[v].assign(nb.begin(), nb.end());
    }
    for (Vertex v = 1; v <= n; ++v) {
      const auto& rot = rotation_[v];
      if (static_cast<int>(rot.size()) != g.degree(v))
        throw EmbeddingError("rotation at " + std::to_string(v) + " has wrong length");
      for (std::size_t i = 0; i < rot.size(); ++i) {
        if (!g.adjacent(v, rot[i]))
          throw EmbeddingError("rotation at " + std::to_string(v) + " names a non-neighbor");
        int& p = position_[static_cast<std::size_t>(dart_id({v, rot[i]}))];
        if (p >= 0) throw EmbeddingError("rotation at " + std::to_string(v) + " repeats a neighbor");
        p = static_cast<int>(i);
      }
    }
  }

  int dart_count() const { return offset_.empty() ? 0 : offset_.back(); }
  const std::vector<Vertex>& around(Vertex v) const { return rotation_.at(v); }
  const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }

  // Dense id of a dart, via the sorted neighbor list of its tail.
  int dart_id(Dart d) const {
    const auto& nb = neighbors_.at(d.from);
    auto it = std::lower_bound(nb.begin(), nb.end(), d.to);
    if (it == nb.end() || *it != d.to)
      throw EmbeddingError("not a dart: " + std::to_string(d.from) + "->" + std::to_string(d.to));
    return offset_[d.from] + static_cast<int>(it - nb.begin());
  }

  Dart next(Dart d) const {
    const auto& rot = rotation_[d.to];
    const int p = position_[static_cast<std::size_t>(dart_id(d.reversed()))];
    return {d.to, rot[(static_cast<std::size_t>(p) + 1) % rot.size()]};
  }

  // All faces, each canonically rotated, sorted by key.
  std::vector<Face> trace_faces() const {
    std::vector<char> used(static_cast<std::size_t>(dart_count()), 0);
    std::vector<Face> faces;
    for (Vertex v = 1; v < static_cast<Vertex>(rotation_.size()); ++v) {
      for (Vertex u : rotation_[v]) {
        Dart start{v, u};
        if (used[static_cast<std::size_t>(dart_id(start))]) continue;
        Face f;
        Dart d = start;
        do {
          auto id = static_cast<std::size_t>(dart_id(d));
          if (used[id]) throw EmbeddingError("face traversal does not close");
          used[id] = 1;
          f.walk.push_back(d.from);
          d = next(d);
        } while (d != start);
        canonicalize(f);
        faces.push_back(std::move(f));
      }
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.key() < b.key(); });
    return faces;
  }

  static void canonicalize(Face& f) {
    const std::size_t L = f.walk.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < L; ++i) {
      Dart a{f.walk[i], f.walk[(i + 1) % L]};
      Dart b{f.walk[best], f.walk[(best + 1) % L]};
      if (a < b) best = i;
    }
    std::rotate(f.walk.begin(), f.walk.begin() + static_cast<std::ptrdiff_t>(best), f.walk.end());
  }

 private:
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<int> offset_;
  std::vector<int> position_;
};

// A connected plane graph given combinatorially. Validation on construction:
// rotations permute neighborhoods, face traversal closes, and Euler's
// relation f - m + n = 2 holds.
class PlanarEmbedding {
 public:
  PlanarEmbedding(Graph g, std::vector<std::vector<Vertex>> rotation, Dart outer)
      : graph_(std::move(g)) {
    if (graph_.size() == 0) throw EmbeddingError("embedding needs at least one edge");
    if (!is_connected(graph_)) throw EmbeddingError("embedded graph must be connected");
    rotation_ = RotationSystem(graph_, std::move(rotation));
    faces_ = rotation_.trace_faces();
    const int f = static_cast<int>(faces_.size());
    if (f - graph_.size() + graph_.order() != 2)
      throw EmbeddingError("Euler's relation fails (f=" + std::to_string(f) + ", m=" +
                           std::to_string(graph_.size()) + ", n=" +
                           std::to_string(graph_.order()) + "); rotation is not planar");
    dart_face_.assign(static_cast<std::size_t>(rotation_.dart_count()), -1);
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < faces_[i].length(); ++j)
        dart_face_[static_cast<std::size_t>(rotation_.dart_id(faces_[i].dart(j)))] = i;
    outer_ = face_of(outer);
  }

  const Graph& graph() const { return graph_; }
  const RotationSystem& rotation() const { return rotation_; }
  const std::vector<Vertex>& around(Vertex v) const { return rotation_.around(v); }

  const std::vector<Face>& faces() const { return faces_; }
  int face_of(Dart d) const { return dart_face_.at(static_cast<std::size_t>(rotation_.dart_id(d))); }
  int outer_index() const { return outer_; }
  const Face& outer_face() const { return faces_[static_cast<std::size_t>(outer_)]; }
  Dart outer_key() const { return outer_face().key(); }

  Dart next(Dart d) const { return rotation_.next(d); }

  // Edges with the same face on both sides.
  std::vector<Edge> bridges() const {
    std::vector<Edge> r;
    for (const Edge& e : graph_.edges())
      if (face_of({e.u, e.v}) == face_of({e.v, e.u})) r.push_back(e);
    return r;
  }

 private:
  Graph graph_;
  RotationSystem rotation_;
  std::vector<Face> faces_;
  std::vector<int> dart_face_;
  int outer_ = 0;
};

// Straight-line drawing to rotation system: neighbors sorted by angle, outer
// face is the one with the largest signed area. The drawing must be plane.
struct Point {
  double x = 0;
  double y = 0;
};

inline PlanarEmbedding embed_from_coordinates(Graph g, std::span<const Point> coords) {
  const int n = g.order();
  if (static_cast<int>(coords.size()) != n + 1)
    throw ParameterError("coordinates must be indexed 1..n");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) {
    auto nb = g.neighbors(v);
    rot[v].assign(nb.begin(), nb.end());
    auto angle = [&](Vertex u) {
      return std::atan2(coords[u].y - coords[v].y, coords[u].x - coords[v].x);
    };
    std::sort(rot[v].begin(), rot[v].end(),
              [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  RotationSystem rs(g, rot);
  auto faces = rs.trace_faces();
  double best = -1e300;
  Dart outer{};
  for (const Face& f : faces) {
    double area = 0;
    for (int i = 0; i < f.length(); ++i) {
      Dart d = f.dart(i);
      area += coords[d.from].x * coords[d.to].y - coords[d.to].x * coords[d.from].y;
    }
    if (area > best) {
      best = area;
      outer = f.key();
    }
  }
  return PlanarEmbedding(std::move(g), std::move(rot), outer);
}

// Same embedding with vertex v renamed new_id[v] (new_id indexed 1..n).
inline PlanarEmbedding relabeled(const PlanarEmbedding& e, std::span<const Vertex> new_id) {
  const Graph& g = e.graph();
  const int n = g.order();
  std::vector<Edge> edges;
  for (const Edge& x : g.edges()) edges.push_back({new_id[x.u], new_id[x.v]});
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v)
    for (Vertex u : e.around(v)) rot[new_id[v]].push_back(new_id[u]);
  Dart outer = e.outer_key();
  return PlanarEmbedding(Graph(n, std::move(edges)), std::move(rot),
                         {new_id[outer.from], new_id[outer.to]});
}

// Minimum face length of this embedding; nullopt for trees.
inline std::optional<int> embedding_girth(const PlanarEmbedding& e) {
  if (e.graph().size() == e.graph().order() - 1) return std::nullopt;
  int best = std::numeric_limits<int>::max();
  for (const Face& f : e.faces()) best = std::min(best, f.length());
  return best;
}

struct EdgeBoundCheck {
  int m = 0;
  Rational rhs;  // g'(n-2)/(g'-2)
  bool holds = false;
  bool equality = false;
};

// m <= g'(n-2)/(g'-2) with g' the given face-length floor, evaluated exactly.
inline EdgeBoundCheck check_edge_bound(int n, int m, int girth_floor) {
  if (girth_floor < 3) throw ParameterError("edge bound needs girth >= 3");
  EdgeBoundCheck r;
  r.m = m;
  r.rhs = Rational(BigInt(girth_floor) * (n - 2), BigInt(girth_floor - 2));
  r.holds = Rational(m) <= r.rhs;
  r.equality = Rational(m) == r.rhs;
  return r;
}

inline EdgeBoundCheck check_edge_bound(const PlanarEmbedding& e) {
  auto g = embedding_girth(e);
  if (!g) throw ParameterError("edge bound is undefined for trees");
  return check_edge_bound(e.graph().order(), e.graph().size(), *g);
}

}  // namespace perfmatch
