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

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "perfmatch/errors.hpp"

namespace perfmatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

inline BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

// floor(sqrt(x)) by Newton iteration; x must be nonnegative.
inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw ParameterError("isqrt of a negative number");
  if (x < 2) return x;
  // Start above the root: 2^(ceil(bits/2)).
  const auto bits = boost::multiprecision::msb(x) + 1;
  BigInt y = BigInt(1) << ((bits + 1) / 2);
  while (true) {
    BigInt next = (y + x / y) >> 1;
    if (next >= y) break;
    y = std::move(next);
  }
  return y;
}

// Exact square root if x is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& x) {
  if (x < 0) return std::nullopt;
  BigInt r = isqrt(x);
  if (r * r != x) return std::nullopt;
  return r;
}

// log2 of a positive integer without overflow; -inf for zero.
inline double log2_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const auto top = boost::multiprecision::msb(x);
  if (top < 60) return std::log2(x.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(top) - 52;
  const BigInt head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

inline double log2_rational(const Rational& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  return log2_big(boost::multiprecision::numerator(x)) -
         log2_big(boost::multiprecision::denominator(x));
}

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace perfmatch
