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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "perfmatch/errors.hpp"
#include "perfmatch/numeric.hpp"

namespace perfmatch {

// Dense row-major square matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows)
      : Matrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw ParameterError("matrix is not square");
      int j = 0;
      for (const T& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int order() const { return n_; }

  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  // Principal submatrix on the given 0-based indices.
  Matrix principal(std::span<const int> idx) const {
    Matrix r(static_cast<int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        r(static_cast<int>(a), static_cast<int>(b)) = (*this)(idx[a], idx[b]);
    return r;
  }

  Matrix transposed() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_skew_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw ParameterError("matrix order mismatch");
    Matrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.n_ != b.n_) throw ParameterError("matrix order mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.n_ != b.n_) throw ParameterError("matrix order mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a) {
    for (T& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (T& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so
// intermediate entries stay integral and bounded by minors of the input.
inline BigInt exact_determinant(IntMatrix m) {
  const int n = m.order();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    const BigInt& pivot = m(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (pivot * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = pivot;
  }
  return sign > 0 ? BigInt(m(n - 1, n - 1)) : BigInt(-m(n - 1, n - 1));
}

// Rows are scaled to integers by their common denominator, then Bareiss.
inline Rational exact_determinant(const RationalMatrix& m) {
  const int n = m.order();
  IntMatrix scaled(n);
  BigInt scale = 1;
  for (int i = 0; i < n; ++i) {
    BigInt l = 1;
    for (int j = 0; j < n; ++j)
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(i, j)));
    for (int j = 0; j < n; ++j)
      scaled(i, j) = boost::multiprecision::numerator(m(i, j)) *
                     (l / boost::multiprecision::denominator(m(i, j)));
    scale *= l;
  }
  return Rational(exact_determinant(std::move(scaled)), scale);
}

// Exact positive semidefiniteness: every principal minor is nonnegative.
// Exponential in n; intended for small matrices only.
inline bool is_positive_semidefinite(const IntMatrix& m) {
  const int n = m.order();
  if (n > 20) throw OracleTooLarge(n, 20);
  std::vector<int> idx;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    idx.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (exact_determinant(m.principal(idx)) < 0) return false;
  }
  return true;
}

// Leading principal minors only; necessary, and for positive definite
// matrices also sufficient.
inline bool leading_minors_nonnegative(const IntMatrix& m) {
  std::vector<int> idx;
  for (int k = 0; k < m.order(); ++k) {
    idx.push_back(k);
    if (exact_determinant(m.principal(idx)) < 0) return false;
  }
  return true;
}

}  // namespace perfmatch
