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

#ifndef TROPSCHED_STAR_HPP_
#define TROPSCHED_STAR_HPP_

#include <cstddef>
#include <optional>

#include "tropsched/matrix.hpp"

namespace tropsched {

// Outcome of a Kleene star computation.
struct StarResult {
  // A* when the precedence graph has no positive-weight circuit.
  std::optional<MaxPlusMatrix> star;
  // Otherwise a node lying on a positive-weight circuit.
  std::size_t witness = 0;

  bool ok() const noexcept { return star.has_value(); }
};

// Kleene star A* = ⊕_{i>=0} Aⁱ of a square R_max matrix, computed by a
// Floyd–Warshall sweep in O(n³). (A*)_ij is the maximum weight of a path
// from node j to node i of the precedence graph (arc j -> i per finite A_ij).
//
// Throws DimensionError if `a` is not square and DomainError if it holds +inf.
StarResult kleene_star(const MaxPlusMatrix& a);

// Same as kleene_star but throws InfeasibleCircuit instead of returning it.
MaxPlusMatrix star_or_throw(const MaxPlusMatrix& a);

// True iff the precedence graph of `a` has no circuit of positive weight.
bool in_gamma(const MaxPlusMatrix& a);

// The four blocks of [[a, b], [c, d]]*.
struct BlockStar {
  MaxPlusMatrix top_left;
  MaxPlusMatrix top_right;
  MaxPlusMatrix bottom_left;
  MaxPlusMatrix bottom_right;
};

// Star of a 2x2 block matrix assembled from its sub-stars:
//   TL = a*(a* b d* c a*)* a*          TR = a* b d* (d* c a* b d*)*
//   BL = d* c a* (a* b d* c a*)*       BR = d*(d* c a* b d*)* d*
// Throws InfeasibleCircuit if any of the sub-stars does not exist.
BlockStar block_star(const MaxPlusMatrix& a, const MaxPlusMatrix& b, const MaxPlusMatrix& c,
                     const MaxPlusMatrix& d);

// Assembles [[a, b], [c, d]].
MaxPlusMatrix assemble_blocks(const MaxPlusMatrix& a, const MaxPlusMatrix& b, const MaxPlusMatrix& c,
                              const MaxPlusMatrix& d);

}  // namespace tropsched

#endif  // TROPSCHED_STAR_HPP_
