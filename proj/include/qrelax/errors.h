// Copyright 2026 The qrelax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qrelax {

// Argument outside the mathematical domain of an operation (negative time,
// p outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Structurally malformed input: non-Hermitian matrices, wrong trace,
// mismatched dimensions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iterative routine failed to converge, or a bracket had no sign change.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BracketError : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

// The closed-form path needs an X-shaped density matrix.
class UnsupportedStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Conditional state requested for a measurement outcome of (near) zero
// probability.
class ZeroProbabilityOutcome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad combination of sweep/CLI parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qrelax
