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

#include <stdexcept>
#include <string>

namespace perfmatch {

// Invalid sizes, malformed matrices, bad paths or matchings.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rotation system does not describe a valid connected plane graph.
class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation's structural precondition (connectivity, bridgelessness,
// ring pattern) does not hold for the input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive routines refuse inputs above their size guard.
class OracleTooLarge : public std::runtime_error {
 public:
  OracleTooLarge(int n, int guard)
      : std::runtime_error("oracle too large: n=" + std::to_string(n) +
                           " exceeds guard " + std::to_string(guard)),
        n_(n),
        guard_(guard) {}
  int n() const { return n_; }
  int guard() const { return guard_; }

 private:
  int n_;
  int guard_;
};

// An internal identity failed (non-square pfaffian determinant, a violated
// theorem). Always indicates a bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computed count exceeds an upper bound (or falls below a lower one).
class BoundViolation : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace perfmatch
