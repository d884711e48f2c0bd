// Copyright 2026 The tropsched Authors
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

#ifndef TROPSCHED_ERRORS_HPP_
#define TROPSCHED_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropsched {

// Operand shapes do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix holds an infinity that is not allowed in its semiring
// (+inf in an R_max matrix, -inf in an R_min matrix).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed instance, configuration or document.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The precedence graph has a circuit of positive weight.
class InfeasibleCircuit : public std::runtime_error {
 public:
  InfeasibleCircuit(std::size_t node, const std::string& what)
      : std::runtime_error(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

// Search space or wall-clock budget exhausted.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tropsched

#endif  // TROPSCHED_ERRORS_HPP_
