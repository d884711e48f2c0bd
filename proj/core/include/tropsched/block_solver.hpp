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

// Makespan of a block-tridiagonal M_v in O(K n³) without forming M_v*.
//
// With 0-based steps k = 0..K-1 and couplings i = 0..K-2:
//
//   ℙ_i = C_i* P_i C_{i+1}*          𝕀_i = C_{i+1}* I_i C_i*
//   ℂ_{K-2} = ℙ_{K-2} 𝕀_{K-2}        ℂ_i = ℙ_i ℂ_{i+1}* 𝕀_i
//   𝕄 = 𝕀_{K-2} ℂ_{K-2}* ⋯ 𝕀_0 ℂ_0*   (𝕄 = C_0* when K = 1)
//
// G(M_v) has no positive circuit iff every G(C_k) and every G(ℂ_i) has none;
// then 𝕄 is the bottom-left block of M_v* and the makespan is 𝕄(n-1, 0).

#ifndef TROPSCHED_BLOCK_SOLVER_HPP_
#define TROPSCHED_BLOCK_SOLVER_HPP_

#include <optional>
#include <vector>

#include "tropsched/matrix.hpp"
#include "tropsched/sldi.hpp"

namespace tropsched {

struct ReducedChain {
  std::vector<MaxPlusMatrix> c_star;        // K
  std::vector<MaxPlusMatrix> pp;            // K-1, ℙ_i
  std::vector<MaxPlusMatrix> ii;            // K-1, 𝕀_i
  std::vector<MaxPlusMatrix> cc;            // K-1, ℂ_i
  std::vector<MaxPlusMatrix> cc_star;       // K-1, ℂ_i*
  MaxPlusMatrix m;                          // 𝕄
};

struct BlockFeasibility {
  std::optional<ReducedChain> reduced;
  std::optional<InfeasibilityWitness> witness;

  bool feasible() const noexcept { return reduced.has_value(); }
};

// Runs the backward ℂ recursion once, keeping ℂ_{i+1}* for the next level.
BlockFeasibility block_feasible(const BlockChain& chain);

// Makespan from 𝕄(n-1, 0). No trajectory.
MakespanResult block_makespan(const BlockChain& chain);
MakespanResult block_makespan(const SldiInstance& inst);

struct CornerBlocks {
  MaxPlusMatrix m11;  // C_0* ℂ_0* C_0*, the (1,1) block of M_v*
  MaxPlusMatrix mk1;  // 𝕄, the (K,1) block of M_v*
};

// Throws InfeasibleCircuit on an infeasible chain.
CornerBlocks corner_blocks(const BlockChain& chain);

}  // namespace tropsched

#endif  // TROPSCHED_BLOCK_SOLVER_HPP_
