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
#include <optional>
#include <string>
#include <vector>

#include "perfmatch/bounds.hpp"
#include "perfmatch/decomposition.hpp"
#include "perfmatch/embedding.hpp"
#include "perfmatch/errors.hpp"
#include "perfmatch/fullerene.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/matching.hpp"
#include "perfmatch/pfaffian.hpp"

namespace perfmatch {

// One graph to evaluate. A pfaffian orientation comes either from the
// embedding (FKT) or from an attested arc list, which is only trusted after
// it reproduces the oracle count.
struct GraphInput {
  std::string id;
  Graph graph;
  std::string family = "classic";
  std::optional<PlanarEmbedding> embedding;
  std::optional<Orientation> attested_orientation;
  std::optional<CircularDecomposition> decomposition;  // hint, validated
  std::optional<std::vector<Vertex>> hamiltonian_cycle;

  explicit GraphInput(std::string id_, Graph g) : id(std::move(id_)), graph(std::move(g)) {}
  GraphInput(std::string id_, PlanarEmbedding e, std::string fam = "classic")
      : id(std::move(id_)), graph(e.graph()), family(std::move(fam)), embedding(std::move(e)) {}
};

struct CompareOptions {
  int max_oracle = kDefaultOracleGuard;
  double tolerance = 1e-9;  // relative, log2 domain
};

struct BoundResult {
  BoundEntry bound;
  std::optional<double> tightness;  // log2(bound) - log2(count), upper bounds
  std::optional<bool> exact_equal;  // count^root == radicand
  std::optional<bool> sound;        // count on the right side of the bound
};

struct BoundReport {
  std::string id;
  std::string family;
  int n = 0;
  int m = 0;
  std::optional<BigInt> count;
  std::string count_method;  // "pfaffian", "oracle", "pfaffian+oracle", "none"
  bool pfaffian_certified = false;
  std::string pfaffian_source;  // "embedding", "attested", or reason it is absent
  std::optional<CircularDecomposition> decomposition;
  std::vector<BoundResult> bounds;

  const BoundResult* find(const std::string& name) const {
    for (const auto& b : bounds)
      if (b.bound.name == name) return &b;
    return nullptr;
  }
};

namespace detail {

inline double log2_count(const BigInt& c) { return log2_big(c); }

inline BoundResult judge(BoundEntry b, const std::optional<BigInt>& count, double tol) {
  BoundResult r{std::move(b), {}, {}, {}};
  if (!r.bound.applicable || !count) return r;
  const double lc = log2_count(*count);
  const double lb = r.bound.log2_value;
  const double slack = std::isfinite(lb) ? tol * std::max(1.0, std::abs(lb)) : 0.0;
  bool ok;
  if (r.bound.kind == BoundKind::upper) {
    ok = *count == 0 || lc <= lb + slack;
    if (*count > 0) r.tightness = lb - lc;
  } else {
    ok = lb == -std::numeric_limits<double>::infinity() || lc >= lb - slack;
  }
  if (r.bound.exact) {
    const int c = r.bound.exact->compare_with(*count);
    r.exact_equal = c == 0;
    ok = ok && (r.bound.kind == BoundKind::upper ? c <= 0 : c >= 0);
  }
  r.sound = ok;
  return r;
}

}  // namespace detail

// Runs every bound whose hypotheses can be certified, computes the exact
// count (pfaffian and/or oracle), and checks each bound against it. Throws
// BoundViolation if any bound is contradicted.
inline BoundReport compare_all(const GraphInput& in, const CompareOptions& opt = {}) {
  const Graph& g = in.graph;
  BoundReport rep;
  rep.id = in.id;
  rep.family = in.family;
  rep.n = g.order();
  rep.m = g.size();

  std::optional<BigInt> oracle;
  if (g.order() <= opt.max_oracle) oracle = enumerate_perfect_matchings(g, opt.max_oracle);

  std::optional<Orientation> pf;
  if (in.embedding) {
    if (!(in.embedding->graph() == g)) throw ParameterError(in.id + ": embedding is of a different graph");
    pf = kasteleyn_orient(*in.embedding);
    rep.pfaffian_source = "embedding";
  } else if (in.attested_orientation) {
    if (!(in.attested_orientation->graph() == g)) throw ParameterError(in.id + ": orientation is of a different graph");
    if (!oracle) {
      rep.pfaffian_source = "attestation not certifiable above the oracle guard";
    } else if (verify_determinant_matching_bound(*in.attested_orientation, opt.max_oracle).equality) {
      pf = in.attested_orientation;
      rep.pfaffian_source = "attested";
    } else {
      rep.pfaffian_source = "attested orientation is not pfaffian";
    }
  } else {
    rep.pfaffian_source = "no embedding or attested orientation";
  }
  rep.pfaffian_certified = pf.has_value();

  std::optional<BigInt> pcount;
  if (pf) pcount = count_with_orientation(*pf);
  if (pcount && oracle && *pcount != *oracle)
    throw ConsistencyError(in.id + ": pfaffian count " + pcount->str() + " != oracle " + oracle->str());
  if (pcount && oracle) rep.count_method = "pfaffian+oracle";
  else if (pcount) rep.count_method = "pfaffian";
  else if (oracle) rep.count_method = "oracle";
  else rep.count_method = "none";
  rep.count = pcount ? pcount : oracle;

  std::vector<BoundEntry> entries;
  auto needs_pf = [&](BoundEntry e) {
    if (!pf && e.applicable) {
      e.applicable = false;
      e.reason = "no pfaffian certificate";
    }
    entries.push_back(std::move(e));
  };

  needs_pf(hadamard_bound(g));
  entries.push_back(bregman_bound(g));
  if (in.embedding) {
    for (auto& e : girth_bounds(*in.embedding)) needs_pf(std::move(e));
  } else {
    for (const char* nm : {"girth", "girth_simplified", "girth_corollary"})
      entries.push_back(BoundEntry::not_applicable(nm, "no planar embedding"));
  }
  needs_pf(hf_square_bound(g));
  needs_pf(cubic_no4_bound(g));

  if (in.embedding && validate_fullerene(*in.embedding).is_fullerene) {
    bool ham = false;
    if (in.hamiltonian_cycle) {
      if (!is_hamiltonian_cycle(g, *in.hamiltonian_cycle)) throw ParameterError(in.id + ": not a hamiltonian cycle");
      ham = true;
    }
    for (auto& e : fullerene_hamiltonian_bounds(g.order(), ham)) needs_pf(std::move(e));
  } else {
    entries.push_back(BoundEntry::not_applicable("fullerene_hamiltonian", "not a fullerene"));
    entries.push_back(BoundEntry::not_applicable("fullerene_long_cycle", "not a fullerene"));
  }

  if (in.decomposition) {
    auto chk = validate_decomposition(g, *in.decomposition);
    if (!chk.valid) throw ParameterError(in.id + ": decomposition hint rejected: " + chk.reason);
    rep.decomposition = in.decomposition;
  } else if (in.embedding) {
    rep.decomposition = detect_semicircular(*in.embedding);
  }
  if (rep.decomposition && pf) {
    entries.push_back(hf_block_bound(*pf, *rep.decomposition));
    entries.push_back(ring_refined_bound(*pf, *rep.decomposition));
  } else {
    const char* why = rep.decomposition ? "no pfaffian certificate" : "no ring decomposition detected";
    entries.push_back(BoundEntry::not_applicable("hf_block", why));
    entries.push_back(BoundEntry::not_applicable("ring_refined", why));
  }
  if (rep.decomposition) needs_pf(semicircular_cubic_bound(g, *rep.decomposition));
  else entries.push_back(BoundEntry::not_applicable("semicircular_cubic", "no ring decomposition detected"));

  if (in.family == "pentacap") entries.push_back(pentacap_lower_bound(g.order()));
  else entries.push_back(BoundEntry::not_applicable("pentacap_lower", "not a pentacap", BoundKind::lower));

  for (auto& e : entries) {
    BoundResult r = detail::judge(std::move(e), rep.count, opt.tolerance);
    if (r.sound && !*r.sound)
      throw BoundViolation(in.id + ": count " + rep.count->str() + " violates " + to_string(r.bound.kind) +
                           " bound " + r.bound.name);
    rep.bounds.push_back(std::move(r));
  }
  return rep;
}

}  // namespace perfmatch
