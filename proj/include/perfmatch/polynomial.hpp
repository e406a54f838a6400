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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "perfmatch/matrix.hpp"
#include "perfmatch/numeric.hpp"

namespace perfmatch {

// Dense univariate polynomial with big-integer coefficients; coeffs()[k] is
// the coefficient of t^k. Always trimmed: no trailing zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long c) {  // NOLINT: constants convert implicitly
    if (c != 0) coeffs_.push_back(c);
  }
  Polynomial(std::initializer_list<long long> c) {
    for (long long x : c) coeffs_.emplace_back(x);
    trim();
  }
  explicit Polynomial(std::vector<BigInt> c) : coeffs_(std::move(c)) { trim(); }

  static Polynomial monomial(BigInt c, int k) {
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1, BigInt(0));
    v[static_cast<std::size_t>(k)] = std::move(c);
    return Polynomial(std::move(v));
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  BigInt evaluate(const BigInt& t) const {
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (BigInt& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!s.empty()) s += coeffs_[k] < 0 ? " - " : " + ";
      else if (coeffs_[k] < 0) s += "-";
      BigInt a = abs(coeffs_[k]);
      if (k == 0 || a != 1) s += a.str();
      if (k >= 1) s += "t";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

using PolyMatrix = Matrix<Polynomial>;

// Determinant by cofactor expansion along rows, memoized on the set of
// columns already used. Cost is bounded by the number of reachable column
// subsets, so sparse matrices of order up to ~20 are cheap.
template <typename T>
T determinant_by_minors(const Matrix<T>& m) {
  const int n = m.order();
  if (n > 24) throw OracleTooLarge(n, 24);
  std::unordered_map<std::uint32_t, T> layer{{0u, T(1)}};
  for (int i = 0; i < n; ++i) {
    std::unordered_map<std::uint32_t, T> next;
    for (const auto& [mask, acc] : layer) {
      for (int j = 0; j < n; ++j) {
        const std::uint32_t bit = 1u << j;
        if (mask & bit) continue;
        const T& a = m(i, j);
        if (a == T(0)) continue;
        // Columns already used to the right of j give the inversion parity.
        const int inversions = std::popcount(mask & ~((bit << 1) - 1u));
        T term = acc * a;
        if (inversions & 1) term = -term;
        auto [it, inserted] = next.try_emplace(mask | bit, term);
        if (!inserted) it->second += term;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find(n == 0 ? 0u : ((1u << n) - 1u));
  return it == layer.end() ? T(0) : it->second;
}

}  // namespace perfmatch
