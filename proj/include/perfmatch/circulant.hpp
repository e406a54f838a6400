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
#include <optional>
#include <string>
#include <vector>

#include "perfmatch/errors.hpp"
#include "perfmatch/graph.hpp"
#include "perfmatch/matching.hpp"
#include "perfmatch/matrix.hpp"
#include "perfmatch/numeric.hpp"
#include "perfmatch/pfaffian.hpp"
#include "perfmatch/polynomial.hpp"

namespace perfmatch {

// Orientations of C_n = 1-2-...-n-1 with the path 1 -> 2 -> ... -> n and the
// closing edge either 1 -> n (plus) or n -> 1 (minus).
enum class CycleSign { plus, minus };

inline const char* to_string(CycleSign s) { return s == CycleSign::plus ? "+" : "-"; }

inline SkewMatrix<BigInt> t_matrix(int n, CycleSign sign) {
  if (n < 3) throw ParameterError("T_n needs n >= 3");
  SkewMatrix<BigInt> t(n);
  for (int i = 0; i + 1 < n; ++i) t.set(i, i + 1, BigInt(1));
  if (sign == CycleSign::plus) t.set(0, n - 1, BigInt(1));
  else t.set(n - 1, 0, BigInt(1));
  return t;
}

struct GaugeResult {
  CycleSign sign = CycleSign::plus;
  std::vector<int> diagonal;  // entries of D, each +1 or -1
};

// Any orientation of C_n is conjugate, by a diagonal +-1 matrix D, to T_{n,+}
// or T_{n,-}. D is fixed along the path 1..n; the closing edge then decides
// the sign. The result is checked by explicit multiplication.
inline GaugeResult gauge_reduce(const Orientation& o) {
  const Graph& g = o.graph();
  const int n = g.order();
  if (n < 3 || !(g == cycle_graph(n))) throw ParameterError("gauge_reduce needs the cycle 1-2-...-n-1");
  GaugeResult r;
  r.diagonal.assign(static_cast<std::size_t>(n), 1);
  for (int i = 1; i < n; ++i)
    r.diagonal[static_cast<std::size_t>(i)] = r.diagonal[static_cast<std::size_t>(i) - 1] * o.sign(i, i + 1);
  const int closing = r.diagonal.front() * r.diagonal.back() * o.sign(1, n);
  r.sign = closing > 0 ? CycleSign::plus : CycleSign::minus;

  IntMatrix d(n);
  for (int i = 0; i < n; ++i) d(i, i) = r.diagonal[static_cast<std::size_t>(i)];
  if (d * skew_matrix(o).matrix() * d != t_matrix(n, r.sign).matrix())
    throw ConsistencyError("gauge reduction does not reproduce T_n");
  return r;
}

// Lucas numbers L_1 = 1, L_2 = 3, L_n = L_{n-1} + L_{n-2}; L_n is also the
// total number of matchings of C_n.
inline BigInt lucas_number(int n) {
  if (n < 0) throw ParameterError("Lucas index must be nonnegative");
  BigInt a = 2, b = 1;  // L_0, L_1
  if (n == 0) return a;
  for (int k = 2; k <= n; ++k) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

// det(I_n - T_{n,sign}^2) in closed form: L_n^2 for odd n, (L_n + 2)^2 for
// even n with sign plus, (L_n - 2)^2 for even n with sign minus.
inline BigInt lucas_det(int n, CycleSign sign) {
  if (n < 3) throw ParameterError("lucas_det needs n >= 3");
  BigInt l = lucas_number(n);
  if (n % 2 == 0) l += sign == CycleSign::plus ? 2 : -2;
  return l * l;
}

// A ring of a circular decomposition: cycle length, the sign its induced
// orientation reduces to, and optionally the degrees D_c of its vertices.
struct RingBlock {
  int n = 0;
  CycleSign sign = CycleSign::plus;
  std::optional<std::vector<BigInt>> diagonal;

  RingBlock(int length, CycleSign s, std::optional<std::vector<BigInt>> diag = std::nullopt)
      : n(length), sign(s), diagonal(std::move(diag)) {
    if (n < 3) throw ParameterError("ring needs at least 3 vertices");
    if (diagonal) {
      if (static_cast<int>(diagonal->size()) != n) throw ParameterError("ring diagonal has wrong length");
      for (const BigInt& d : *diagonal)
        if (d < 2) throw ParameterError("ring vertex degree must be at least 2");
    }
  }

  static RingBlock uniform(int length, CycleSign s, int degree) {
    return {length, s, std::vector<BigInt>(static_cast<std::size_t>(length), BigInt(degree))};
  }
};

// D_c - 2I - T^2.
inline IntMatrix ring_block_matrix(const RingBlock& rb) {
  if (!rb.diagonal) throw ParameterError("ring block needs its degree diagonal");
  const auto t = t_matrix(rb.n, rb.sign).matrix();
  IntMatrix m = -(t * t);
  for (int i = 0; i < rb.n; ++i) m(i, i) += (*rb.diagonal)[static_cast<std::size_t>(i)] - 2;
  return m;
}

inline BigInt ring_block_det(const RingBlock& rb) { return exact_determinant(ring_block_matrix(rb)); }

// det(a^2 I - S^2) == det(aI + S)^2 for a skew-symmetric S.
inline bool square_identity_holds(const IntMatrix& s, const BigInt& a) {
  const int n = s.order();
  const IntMatrix id = IntMatrix::identity(n);
  const BigInt lhs = exact_determinant((a * a) * id - s * s);
  const BigInt root = exact_determinant(a * id + s);
  return lhs == root * root;
}

// I + tT as a polynomial matrix.
inline PolyMatrix shifted_t_matrix(int n, CycleSign sign) {
  const auto t = t_matrix(n, sign).matrix();
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) m(i, j) = 1;
      else if (t(i, j) != 0) m(i, j) = Polynomial::monomial(t(i, j), 1);
    }
  return m;
}

struct PolynomialIdentityCheck {
  int n = 0;
  Polynomial det_plus;   // det(I + t T_{n,+})
  Polynomial det_minus;  // det(I + t T_{n,-})
  Polynomial matching;   // phi(t, C_n), t^2 per edge
  bool minus_matches_truncated = false;  // det_minus == phi without t^n term
  bool plus_matches = false;             // det_plus == phi (+ 2t^n, n even)
  bool difference_matches = false;       // det_plus - det_minus == 4t^n (n even) or 0
  bool ok() const { return minus_matches_truncated && plus_matches && difference_matches; }
};

// Expands det(I + tT_{n,+-}) symbolically and compares against the matching
// polynomial of C_n from the general recursion.
inline PolynomialIdentityCheck matching_poly_identity_details(int n) {
  if (n < 3 || n > 20) throw ParameterError("symbolic identity check needs 3 <= n <= 20");
  PolynomialIdentityCheck r;
  r.n = n;
  r.det_plus = determinant_by_minors(shifted_t_matrix(n, CycleSign::plus));
  r.det_minus = determinant_by_minors(shifted_t_matrix(n, CycleSign::minus));
  const MatchPolynomial phi = matching_polynomial(cycle_graph(n), 64);
  r.matching = phi.per_vertex();

  Polynomial truncated;
  const int top = (n + 1) / 2 - 1;  // ceil(n/2) - 1
  for (int j = 0; j <= top; ++j) truncated += Polynomial::monomial(phi.coefficient(j), 2 * j);
  r.minus_matches_truncated = r.det_minus == truncated;

  const Polynomial tn = Polynomial::monomial(1, n);
  const Polynomial expected_plus = n % 2 == 0 ? r.matching + Polynomial(2) * tn : r.matching;
  r.plus_matches = r.det_plus == expected_plus;

  const Polynomial expected_diff = n % 2 == 0 ? Polynomial(4) * tn : Polynomial();
  r.difference_matches = r.det_plus - r.det_minus == expected_diff;
  return r;
}

inline bool matching_poly_identity_check(int n) { return matching_poly_identity_details(n).ok(); }

struct MonotonicityCheck {
  int n_max = 0;
  bool odd_increasing = false;
  bool even_decreasing = false;
  bool within_first_pair = false;  // a_3 <= a_n <= a_4
  bool bounded_by_cube_root_20 = false;  // a_n <= 20^(1/3) for n >= 5
  bool equality_only_at_6 = false;
  std::vector<double> display;  // a_n for n = 3..n_max, display only
  bool ok() const {
    return odd_increasing && even_decreasing && within_first_pair && bounded_by_cube_root_20 &&
           equality_only_at_6;
  }
};

// a_n = det(I_n - T_{n,+}^2)^(1/n). All comparisons a_p vs a_q are done on
// integers by cross-powering: a_p <= a_q iff det_p^q <= det_q^p.
inline MonotonicityCheck sequence_monotonicity_check(int n_max) {
  if (n_max < 8) throw ParameterError("monotonicity check needs n_max >= 8");
  MonotonicityCheck r;
  r.n_max = n_max;
  std::vector<BigInt> det(static_cast<std::size_t>(n_max) + 3);
  for (int n = 3; n <= n_max + 2; ++n) det[static_cast<std::size_t>(n)] = lucas_det(n, CycleSign::plus);
  auto d = [&](int n) -> const BigInt& { return det[static_cast<std::size_t>(n)]; };
  auto cmp = [&](int p, int q) {  // sign of a_p - a_q
    const BigInt lhs = pow(d(p), static_cast<unsigned>(q));
    const BigInt rhs = pow(d(q), static_cast<unsigned>(p));
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  };
  r.odd_increasing = r.even_decreasing = r.within_first_pair = true;
  r.bounded_by_cube_root_20 = r.equality_only_at_6 = true;
  for (int n = 3; n <= n_max; ++n) {
    if (n + 2 <= n_max) {
      if (n % 2 == 1 && cmp(n, n + 2) >= 0) r.odd_increasing = false;
      if (n % 2 == 0 && cmp(n, n + 2) <= 0) r.even_decreasing = false;
    }
    if (cmp(3, n) > 0 || cmp(n, 4) > 0) r.within_first_pair = false;
    if (n >= 5) {
      const BigInt lhs = pow(d(n), 3u);
      const BigInt rhs = pow(BigInt(20), static_cast<unsigned>(n));
      if (lhs > rhs) r.bounded_by_cube_root_20 = false;
      if ((lhs == rhs) != (n == 6)) r.equality_only_at_6 = false;
    }
    r.display.push_back(std::exp2(log2_big(d(n)) / n));
  }
  return r;
}

}  // namespace perfmatch
