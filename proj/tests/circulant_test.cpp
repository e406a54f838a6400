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

#include <bit>
#include <cmath>
#include <random>

#include "perfmatch/circulant.hpp"

using namespace perfmatch;

namespace {

Orientation cycle_from_mask(int n, std::uint32_t mask) {
  // Bit i set: edge {i+1, i+2} (closing edge for i = n-1) is reversed.
  std::vector<Dart> arcs;
  for (int i = 0; i < n; ++i) {
    Dart d = i + 1 < n ? Dart{i + 1, i + 2} : Dart{1, n};
    if ((mask >> i) & 1u) d = d.reversed();
    arcs.push_back(d);
  }
  return Orientation::from_arcs(cycle_graph(n), arcs);
}

}  // namespace

TEST(TMatrix, Determinants) {
  EXPECT_EQ(exact_determinant(t_matrix(6, CycleSign::plus)), 4);
  EXPECT_EQ(exact_determinant(t_matrix(6, CycleSign::minus)), 0);
  EXPECT_EQ(exact_determinant(t_matrix(7, CycleSign::plus)), 0);
  EXPECT_EQ(exact_determinant(t_matrix(7, CycleSign::minus)), 0);
  for (int n = 4; n <= 16; n += 2) {
    EXPECT_EQ(exact_determinant(t_matrix(n, CycleSign::plus)), 4) << n;
    EXPECT_EQ(exact_determinant(t_matrix(n, CycleSign::minus)), 0) << n;
  }
}

TEST(TMatrix, Shape) {
  const auto t = t_matrix(4, CycleSign::plus).matrix();
  std::vector<BigInt> row;
  for (int j = 0; j < 4; ++j) row.push_back(abs(t(0, j)));
  EXPECT_EQ(row, (std::vector<BigInt>{0, 1, 0, 1}));
  EXPECT_EQ(t(0, 3), 1);
  EXPECT_EQ(t_matrix(4, CycleSign::minus).matrix()(0, 3), -1);
  EXPECT_TRUE(t.is_skew_symmetric());
  EXPECT_THROW(t_matrix(2, CycleSign::plus), ParameterError);
}

TEST(Gauge, Examples) {
  const auto r = gauge_reduce(cycle_from_mask(6, 0b100000));  // 1 -> ... -> 6, 6 -> 1
  EXPECT_EQ(r.sign, CycleSign::minus);
  EXPECT_EQ(r.diagonal, std::vector<int>(6, 1));

  // Every edge of the previous orientation reversed.
  const auto flipped = gauge_reduce(cycle_from_mask(6, 0b011111));
  EXPECT_EQ(flipped.sign, CycleSign::minus);
  EXPECT_EQ(flipped.diagonal, (std::vector<int>{1, -1, 1, -1, 1, -1}));

  EXPECT_THROW(gauge_reduce(Orientation::ascending(path_graph(4))), ParameterError);
  EXPECT_THROW(gauge_reduce(Orientation::ascending(complete_graph(4))), ParameterError);
}

TEST(Gauge, AllOrientationsOfC8) {
  int plus = 0;
  for (std::uint32_t mask = 0; mask < 256; ++mask) {
    const Orientation o = cycle_from_mask(8, mask);
    GaugeResult r;
    ASSERT_NO_THROW(r = gauge_reduce(o)) << mask;
    // The class is the parity of reversed edges.
    EXPECT_EQ(r.sign == CycleSign::plus, std::popcount(mask) % 2 == 0) << mask;
    plus += r.sign == CycleSign::plus;
  }
  EXPECT_EQ(plus, 128);
}

TEST(Gauge, RandomLargerCycles) {
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t) {
    const int n = 9 + t % 20;
    std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1);
    EXPECT_NO_THROW(gauge_reduce(cycle_from_mask(n, bits(rng))));
  }
}

TEST(Lucas, Numbers) {
  const std::vector<int> want{2, 1, 3, 4, 7, 11, 18, 29, 47, 76};
  for (int n = 0; n < 10; ++n) EXPECT_EQ(lucas_number(n), want[static_cast<std::size_t>(n)]);
  EXPECT_EQ(lucas_det(6, CycleSign::plus), 400);
  EXPECT_EQ(lucas_det(5, CycleSign::plus), 121);
  EXPECT_EQ(lucas_det(5, CycleSign::minus), 121);
  EXPECT_EQ(lucas_det(6, CycleSign::minus), 256);
  EXPECT_THROW(lucas_det(2, CycleSign::plus), ParameterError);
}

TEST(Lucas, ClosedFormMatchesDeterminant) {
  for (int n = 3; n <= 24; ++n)
    for (auto s : {CycleSign::plus, CycleSign::minus}) {
      const auto t = t_matrix(n, s).matrix();
      EXPECT_EQ(exact_determinant(IntMatrix::identity(n) - t * t), lucas_det(n, s)) << n << to_string(s);
    }
}

TEST(RingBlock, Determinants) {
  EXPECT_EQ(ring_block_det(RingBlock::uniform(6, CycleSign::plus, 3)), 400);
  EXPECT_EQ(ring_block_det(RingBlock::uniform(5, CycleSign::plus, 3)), 121);
  EXPECT_EQ(ring_block_det(RingBlock::uniform(6, CycleSign::plus, 2)), 16);
  EXPECT_EQ(ring_block_det(RingBlock::uniform(6, CycleSign::minus, 2)), 0);
  EXPECT_EQ(ring_block_det(RingBlock::uniform(5, CycleSign::plus, 2)), 0);
  for (int n = 3; n <= 12; ++n)
    for (auto s : {CycleSign::plus, CycleSign::minus})
      EXPECT_EQ(ring_block_det(RingBlock::uniform(n, s, 3)), lucas_det(n, s));
}

TEST(RingBlock, Validation) {
  EXPECT_THROW(RingBlock(2, CycleSign::plus), ParameterError);
  EXPECT_THROW(RingBlock(3, CycleSign::plus, std::vector<BigInt>{3, 3}), ParameterError);
  EXPECT_THROW(RingBlock(3, CycleSign::plus, std::vector<BigInt>{3, 1, 3}), ParameterError);
  EXPECT_THROW(ring_block_matrix(RingBlock(4, CycleSign::plus)), ParameterError);
}

TEST(SquareIdentity, OnTMatrices) {
  for (int n = 3; n <= 10; ++n)
    for (auto s : {CycleSign::plus, CycleSign::minus})
      for (int a = 1; a <= 3; ++a) EXPECT_TRUE(square_identity_holds(t_matrix(n, s).matrix(), a));
}

TEST(MatchingPolynomialIdentity, Examples) {
  const auto d4 = matching_poly_identity_details(4);
  EXPECT_EQ(d4.det_minus, Polynomial({1, 0, 4}));
  EXPECT_EQ(d4.matching, Polynomial({1, 0, 4, 0, 2}));
  const auto d5 = matching_poly_identity_details(5);
  EXPECT_EQ(d5.det_plus, Polynomial({1, 0, 5, 0, 5}));
  EXPECT_EQ(d5.det_minus, Polynomial({1, 0, 5, 0, 5}));
  const auto d6 = matching_poly_identity_details(6);
  EXPECT_EQ(d6.det_plus - d6.det_minus, Polynomial::monomial(4, 6));
}

TEST(MatchingPolynomialIdentity, HoldsUpTo16) {
  for (int n = 3; n <= 16; ++n) EXPECT_TRUE(matching_poly_identity_check(n)) << n;
  EXPECT_THROW(matching_poly_identity_check(2), ParameterError);
}

TEST(Monotonicity, ExactCrossPowering) {
  EXPECT_LT(pow(BigInt(121), 7u), pow(BigInt(841), 5u));
  // a_6 = 400^(1/6) = 20^(1/3): 400^3 == 20^6.
  EXPECT_EQ(pow(lucas_det(6, CycleSign::plus), 3u), pow(BigInt(20), 6u));
  const auto m = sequence_monotonicity_check(40);
  EXPECT_TRUE(m.odd_increasing);
  EXPECT_TRUE(m.even_decreasing);
  EXPECT_TRUE(m.within_first_pair);
  EXPECT_TRUE(m.bounded_by_cube_root_20);
  EXPECT_TRUE(m.equality_only_at_6);
  EXPECT_THROW(sequence_monotonicity_check(7), ParameterError);
}

TEST(Monotonicity, LimitForDisplay) {
  const auto m = sequence_monotonicity_check(41);
  const double golden_sq = std::pow((1 + std::sqrt(5.0)) / 2, 2);
  EXPECT_NEAR(m.display.back(), golden_sq, 1e-3);
  EXPECT_NEAR(m.display[3], std::cbrt(20.0), 1e-12);  // n = 6
}
