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
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "perfmatch/decomposition.hpp"
#include "perfmatch/embedding.hpp"
#include "perfmatch/errors.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/pfaffian.hpp"
#include "perfmatch/report.hpp"

namespace perfmatch {

using json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParameterError("edge must be a pair [u, v]");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(j.at("n").get<int>(), std::move(edges));
}

inline json to_json(const CircularDecomposition& cd) { return {{"inner", cd.inner}, {"rings", cd.rings}}; }

inline CircularDecomposition decomposition_from_json(const json& j) {
  return {j.at("inner").get<std::vector<Vertex>>(), j.at("rings").get<std::vector<std::vector<Vertex>>>()};
}

// Rotation keys are vertex numbers as strings; each list is counterclockwise.
inline json to_json(const PlanarEmbedding& e) {
  json rot = json::object();
  for (Vertex v = 1; v <= e.graph().order(); ++v) rot[std::to_string(v)] = e.around(v);
  const Dart o = e.outer_key();
  return {{"graph", to_json(e.graph())}, {"rotation", rot}, {"outer", {o.from, o.to}}};
}

inline PlanarEmbedding embedding_from_json(const json& j, const Graph& g) {
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.order()) + 1);
  for (const auto& [key, list] : j.at("rotation").items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      throw ParameterError("rotation key '" + key + "' is not a vertex");
    }
    if (v < 1 || v > g.order()) throw ParameterError("rotation key " + key + " out of range");
    rot[static_cast<std::size_t>(v)] = list.get<std::vector<Vertex>>();
  }
  const auto& o = j.at("outer");
  return PlanarEmbedding(g, std::move(rot), Dart{o.at(0).get<int>(), o.at(1).get<int>()});
}

// Graph document: {"id", "family", "graph", optional "embedding" (rotation
// + outer), "pfaffian_orientation" (arc list), "decomposition",
// "hamiltonian_cycle"}.
inline json to_json(const GraphInput& in) {
  json j{{"id", in.id}, {"family", in.family}, {"graph", to_json(in.graph)}};
  if (in.embedding) {
    json e = to_json(*in.embedding);
    e.erase("graph");
    j["embedding"] = e;
  }
  if (in.attested_orientation) {
    json arcs = json::array();
    for (const Dart& d : in.attested_orientation->arcs()) arcs.push_back({d.from, d.to});
    j["pfaffian_orientation"] = arcs;
  }
  if (in.decomposition) j["decomposition"] = to_json(*in.decomposition);
  if (in.hamiltonian_cycle) j["hamiltonian_cycle"] = *in.hamiltonian_cycle;
  return j;
}

inline GraphInput graph_input_from_json(const json& j) {
  GraphInput in(j.value("id", std::string("graph")), graph_from_json(j.at("graph")));
  in.family = j.value("family", std::string("classic"));
  if (j.contains("embedding")) in.embedding = embedding_from_json(j.at("embedding"), in.graph);
  if (j.contains("pfaffian_orientation")) {
    std::vector<Dart> arcs;
    for (const auto& a : j.at("pfaffian_orientation")) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    in.attested_orientation = Orientation::from_arcs(in.graph, arcs);
  }
  if (j.contains("decomposition")) in.decomposition = decomposition_from_json(j.at("decomposition"));
  if (j.contains("hamiltonian_cycle")) in.hamiltonian_cycle = j.at("hamiltonian_cycle").get<std::vector<Vertex>>();
  return in;
}

namespace detail {

inline json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace detail

inline json to_json(const BoundResult& r) {
  const BoundEntry& b = r.bound;
  json j{{"name", b.name}, {"kind", to_string(b.kind)}, {"applicable", b.applicable}, {"note", b.reason}};
  j["log2_value"] = b.applicable ? detail::finite_or_null(b.log2_value) : json(nullptr);
  if (b.exact) j["exact"] = {{"radicand", to_string(b.exact->radicand)}, {"root", b.exact->root}};
  else j["exact"] = nullptr;
  j["tightness"] = r.tightness ? detail::finite_or_null(*r.tightness) : json(nullptr);
  j["exact_equal"] = r.exact_equal ? json(*r.exact_equal) : json(nullptr);
  j["sound"] = r.sound ? json(*r.sound) : json(nullptr);
  return j;
}

inline json to_json(const BoundReport& rep) {
  json j{{"schema_version", kReportSchemaVersion},
         {"id", rep.id},
         {"family", rep.family},
         {"n", rep.n},
         {"m", rep.m},
         {"exact_count", rep.count ? json(rep.count->str()) : json(nullptr)},
         {"count_method", rep.count_method},
         {"pfaffian_certified", rep.pfaffian_certified},
         {"pfaffian_source", rep.pfaffian_source}};
  j["decomposition"] = rep.decomposition ? to_json(*rep.decomposition) : json(nullptr);
  json bs = json::array();
  for (const auto& b : rep.bounds) bs.push_back(to_json(b));
  j["bounds"] = bs;
  return j;
}

inline std::string csv_header() {
  return "id,family,n,m,exact_count,count_method,bound,kind,applicable,log2_value,exact_radicand,exact_root,"
         "tightness,exact_equal,sound,note";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

inline std::string csv_double(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return "";
  std::ostringstream os;
  os << std::setprecision(17) << *x;
  return os.str();
}

inline std::string csv_bool(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

}  // namespace detail

// One row per bound.
inline std::string to_csv_rows(const BoundReport& rep) {
  std::ostringstream os;
  for (const auto& r : rep.bounds) {
    const BoundEntry& b = r.bound;
    os << detail::csv_field(rep.id) << ',' << detail::csv_field(rep.family) << ',' << rep.n << ',' << rep.m << ','
       << (rep.count ? rep.count->str() : "") << ',' << rep.count_method << ',' << b.name << ','
       << to_string(b.kind) << ',' << (b.applicable ? "true" : "false") << ','
       << detail::csv_double(b.applicable ? std::optional<double>(b.log2_value) : std::nullopt) << ','
       << (b.exact ? to_string(b.exact->radicand) : "") << ',' << (b.exact ? std::to_string(b.exact->root) : "")
       << ',' << detail::csv_double(r.tightness) << ',' << detail::csv_bool(r.exact_equal) << ','
       << detail::csv_bool(r.sound) << ',' << detail::csv_field(b.reason) << '\n';
  }
  return os.str();
}

}  // namespace perfmatch
