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


#include <gtest/gtest.h>

#include "perfmatch/bounds.hpp"
#include "perfmatch/corpus.hpp"
#include "perfmatch/report.hpp"

using namespace perfmatch;

namespace {

// Asserts that the bound's exact value is exactly `v`.
void expect_value(const BoundEntry& b, const BigInt& v) {
  ASSERT_TRUE(b.applicable) << b.name << ": " << b.reason;
  ASSERT_TRUE(b.exact);
  EXPECT_EQ(b.exact->compare_with(v), 0) << b.name;
}

const BoundEntry& by_name(const std::vector<BoundEntry>& v, const std::string& name) {
  for (const auto& b : v)
    if (b.name == name) return b;
  throw std::runtime_error("no bound " + name);
}

}  // namespace

TEST(ExactRoot, Comparisons) {
  const ExactRoot three{Rational(81), 4};
  EXPECT_EQ(three.compare_with(3), 0);
  EXPECT_EQ(three.compare_with(4), 1);
  EXPECT_EQ(three.compare_with(2), -1);
  EXPECT_NEAR(three.log2(), std::log2(3.0), 1e-12);
  EXPECT_EQ(compare_roots({Rational(9), 2}, {Rational(81), 4}), 0);
  EXPECT_EQ(compare_roots({Rational(2), 2}, {Rational(2), 3}), 1);
}

TEST(Hadamard, Examples) {
  expect_value(hadamard_bound(complete_graph(4)), 3);
  expect_value(hadamard_bound(octahedron()), 8);
  const auto z = hadamard_bound(Graph(3, {{1, 2}}));
  EXPECT_FALSE(z.reason.empty());
  EXPECT_EQ(z.exact->radicand, 0);
}

TEST(Hadamard, Weighted) {
  WeightedGraph w(cycle_graph(4), {Rational(2), Rational(1), Rational(1), Rational(2)});
  // Every vertex sees one weight 2 and one weight 1: d_{w,2} = 5.
  EXPECT_EQ(hadamard_bound(w).exact->radicand, 625);
}

TEST(Bregman, Examples) {
  expect_value(bregman_bound(complete_bipartite(3)), 6);
  expect_value(bregman_bound(complete_bipartite(2)), 2);
  EXPECT_EQ(bregman_vs_hadamard_factor(1), 0);
  EXPECT_EQ(bregman_vs_hadamard_factor(2), 0);
  for (int d = 3; d <= 12; ++d) EXPECT_EQ(bregman_vs_hadamard_factor(d), 1) << d;
  EXPECT_THROW(bregman_vs_hadamard_factor(0), ParameterError);
}

TEST(Bregman, DominatedByHadamardOnRegularGraphs) {
  for (const Graph& g : {complete_graph(4), octahedron(), dodecahedron(), complete_graph(6)})
    EXPECT_LT(compare_roots(*hadamard_bound(g).exact, *bregman_bound(g).exact), 0);
  EXPECT_EQ(compare_roots(*hadamard_bound(cycle_graph(6)).exact, *bregman_bound(cycle_graph(6)).exact), 0);
}

TEST(Girth, Examples) {
  const auto d = girth_bounds(dodecahedron_embedding());
  expect_value(by_name(d, "girth"), 243);
  EXPECT_TRUE(by_name(d, "girth_corollary").applicable);
  const auto c = girth_bounds(cycle_embedding(6));
  EXPECT_NEAR(by_name(c, "girth").log2_value, 1.5, 1e-12);
  EXPECT_FALSE(by_name(girth_bounds(k4_embedding()), "girth_corollary").applicable);
}

TEST(Girth, ChainIsOrdered) {
  for (const auto& in : builtin_corpus()) {
    if (!in.embedding || in.graph.size() == 0) continue;
    const auto v = girth_bounds(*in.embedding);
    const auto& chain = by_name(v, "girth");
    if (!chain.applicable) continue;
    EXPECT_LE(compare_roots(*hadamard_bound(in.graph).exact, *chain.exact), 0) << in.id;
    EXPECT_LE(compare_roots(*chain.exact, *by_name(v, "girth_simplified").exact), 0) << in.id;
  }
}

TEST(HfSquare, Formula) {
  const Graph g = dodecahedron();
  const Matching m = default_square_matching(g);
  const auto b = hf_square_bound(g);
  ASSERT_TRUE(b.applicable);
  EXPECT_EQ(b.exact->radicand, Rational(pow(BigInt(8), static_cast<unsigned>(m.size())) *
                                        pow(BigInt(3), static_cast<unsigned>(20 - 2 * m.size()))));
  EXPECT_LT(compare_roots(*b.exact, *hadamard_bound(g).exact), 0);
  EXPECT_EQ(compare_roots(*hf_square_bound(g, Matching{}).exact, *hadamard_bound(g).exact), 0);
}

TEST(HfSquare, ThirdOfCubicGivesCubicNo4) {
  // Any 8 pairs of a square-graph matching on the 24 vertices of hexacap(1).
  const Graph g = hexacap(1).graph();
  Matching m = default_square_matching(g);
  ASSERT_GE(m.size(), 8);
  m.pairs.resize(8);
  EXPECT_EQ(compare_roots(*hf_square_bound(g, m).exact, *cubic_no4_bound(g).exact), 0);
}

TEST(HfSquare, Applicability) {
  EXPECT_FALSE(hf_square_bound(cartesian_product(cycle_graph(4), complete_graph(2))).applicable);
  EXPECT_FALSE(hf_square_bound(Graph(4, {{1, 2}, {3, 4}})).applicable);
  EXPECT_THROW(hf_square_bound(dodecahedron(), Matching{{{1, 2}, {2, 3}}}), ParameterError);
  EXPECT_FALSE(cubic_no4_bound(octahedron()).applicable);
  EXPECT_FALSE(cubic_no4_bound(cartesian_product(cycle_graph(4), complete_graph(2))).applicable);
}

TEST(Fullerene, ClosedForms) {
  expect_value(by_name(fullerene_hamiltonian_bounds(20, false), "fullerene_long_cycle"), 192);
  EXPECT_FALSE(by_name(fullerene_hamiltonian_bounds(20, false), "fullerene_hamiltonian").applicable);
  // n = 26: 8^3 sqrt(3), i.e. radicand^(1/8) with radicand 8^24 81.
  const auto h26 = by_name(fullerene_hamiltonian_bounds(26, true), "fullerene_hamiltonian");
  EXPECT_EQ(compare_roots(*h26.exact, {Rational(pow(BigInt(8), 6u) * 3), 2}), 0);
  const auto h60 = by_name(fullerene_hamiltonian_bounds(60, true), "fullerene_hamiltonian");
  EXPECT_NEAR(h60.log2_value, 22.5, 1e-9);
  EXPECT_THROW(fullerene_hamiltonian_bounds(21, true), ParameterError);
  EXPECT_THROW(fullerene_hamiltonian_bounds(18, true), ParameterError);
}

TEST(Hamiltonian, Check) {
  EXPECT_TRUE(is_hamiltonian_cycle(cycle_graph(5), std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_hamiltonian_cycle(cycle_graph(5), std::vector<Vertex>{1, 3, 2, 4, 5}));
  EXPECT_FALSE(is_hamiltonian_cycle(cycle_graph(5), std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(Blocks, DodecahedronBetweenCountAndGirth) {
  const LayeredGraph f = pentacap(1);
  const Orientation o = kasteleyn_orient(f.embedding);
  const auto b = hf_block_bound(o, f.decomposition);
  ASSERT_TRUE(b.applicable);
  EXPECT_LE(b.exact->compare_with(36), 0);
  EXPECT_GE(b.exact->compare_with(243), 0);
  const auto r = ring_refined_bound(o, f.decomposition);
  ASSERT_TRUE(r.applicable) << r.reason;
  EXPECT_LE(r.exact->compare_with(36), 0);
  EXPECT_LE(compare_roots(*b.exact, *r.exact), 0);
}

TEST(Blocks, Applicability) {
  const LayeredGraph f = pentacap(1);
  const Orientation o = kasteleyn_orient(f.embedding);
  CircularDecomposition one{{}, {f.decomposition.rings[0]}};
  EXPECT_FALSE(ring_refined_bound(o, one).applicable);
  EXPECT_FALSE(hf_block_bound(o, CircularDecomposition{}).applicable);
  const auto cube = prism_embedding(4);
  EXPECT_FALSE(ring_refined_bound(kasteleyn_orient(cube), *detect_semicircular(cube)).applicable);
}

TEST(Semicircular, Examples) {
  const LayeredGraph f = pentacap(1);
  const auto b = semicircular_cubic_bound(f.graph(), f.decomposition);
  EXPECT_EQ(compare_roots(*b.exact, {Rational(pow(BigInt(20), 20u)), 12}), 0);
  EXPECT_LE(b.exact->compare_with(36), 0);
  CircularDecomposition semi{{1}, {}};
  EXPECT_FALSE(semicircular_cubic_bound(f.graph(), semi).applicable);
  EXPECT_FALSE(semicircular_cubic_bound(complete_graph(4), *detect_semicircular(k4_embedding())).applicable);
}

TEST(PentacapLower, Values) {
  expect_value(pentacap_lower_bound(20), 1);
  expect_value(pentacap_lower_bound(30), 5);
  expect_value(pentacap_lower_bound(40), 25);
  EXPECT_EQ(pentacap_lower_bound(40).kind, BoundKind::lower);
  EXPECT_THROW(pentacap_lower_bound(10), ParameterError);
  for (int l = 1; l <= 3; ++l) {
    const Graph g = pentacap(l).graph();
    EXPECT_GE(pentacap_lower_bound(g.order()).exact->compare_with(count_by_pfaffian(pentacap(l).embedding)), 0);
  }
}

TEST(CompareAll, Octahedron) {
  const auto rep = compare_all(GraphInput("octahedron", octahedron_embedding()));
  EXPECT_EQ(rep.count, BigInt(8));
  EXPECT_EQ(rep.count_method, "pfaffian+oracle");
  const auto* h = rep.find("hadamard");
  ASSERT_TRUE(h);
  EXPECT_EQ(h->exact_equal, true);
  EXPECT_NEAR(*h->tightness, 0.0, 1e-12);
}

TEST(CompareAll, NonPfaffianGraph) {
  const auto rep = compare_all(GraphInput("k33", complete_bipartite(3)));
  EXPECT_FALSE(rep.pfaffian_certified);
  EXPECT_EQ(rep.count_method, "oracle");
  EXPECT_FALSE(rep.find("hadamard")->bound.applicable);
  EXPECT_TRUE(rep.find("bregman")->bound.applicable);
  EXPECT_EQ(rep.find("bregman")->exact_equal, true);  // K_{3,3} meets Bregman
}

TEST(CompareAll, NoCountAboveGuardWithoutEmbedding) {
  CompareOptions opt;
  opt.max_oracle = 4;
  const auto rep = compare_all(GraphInput("c6", cycle_graph(6)), opt);
  EXPECT_EQ(rep.count_method, "none");
  EXPECT_FALSE(rep.count);
}

TEST(CompareAll, CorpusIsSound) {
  for (const auto& in : builtin_corpus()) {
    BoundReport rep;
    ASSERT_NO_THROW(rep = compare_all(in)) << in.id;
    ASSERT_TRUE(rep.count) << in.id;
    for (const auto& b : rep.bounds)
      if (b.sound) EXPECT_TRUE(*b.sound) << in.id << " " << b.bound.name;
  }
}

TEST(CompareAll, PentacapFamilyGetsLowerBound) {
  const LayeredGraph f = pentacap(2);
  const auto rep = compare_all(family_input("pentacap-2", f, "pentacap"));
  EXPECT_EQ(rep.count, BigInt(151));
  ASSERT_TRUE(rep.find("pentacap_lower"));
  EXPECT_EQ(rep.find("pentacap_lower")->sound, true);
  ASSERT_TRUE(rep.find("semicircular_cubic"));
  EXPECT_TRUE(rep.find("semicircular_cubic")->bound.applicable);
}
