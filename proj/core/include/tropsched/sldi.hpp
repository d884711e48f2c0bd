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

// Switched max-plus linear-dual inequalities (SLDIs):
//
//   A⁰ ⊗ x(k) ⪯ x(k)   ⪯ B⁰ ⊠ x(k)        k = 1..K
//   A¹ ⊗ x(k) ⪯ x(k+1) ⪯ B¹ ⊠ x(k)        k = 1..K-1
//
// where the matrices are those of mode v_k. Equivalently, for all i, j:
//   A⁰_ij <= x_i(k) - x_j(k) <= B⁰_ij  and  A¹_ij <= x_i(k+1) - x_j(k) <= B¹_ij.

#ifndef TROPSCHED_SLDI_HPP_
#define TROPSCHED_SLDI_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropsched/matrix.hpp"

namespace tropsched {

// One mode's constraint matrices. a0/a1 are R_max (lower bounds), b0/b1 are
// R_min (upper bounds), all n x n.
struct ModeSpec {
  std::string label;
  MaxPlusMatrix a0;
  MaxPlusMatrix a1;
  MaxPlusMatrix b0;
  MaxPlusMatrix b1;

  std::size_t dimension() const noexcept { return a0.rows(); }
};

// Throws DimensionError, DomainError or InvalidInput (empty window, with the
// offending (i, j) named in the message; indices are 1-based there).
void validate_mode(const ModeSpec& mode);

// A finite mode sequence over an alphabet of modes.
struct SldiInstance {
  std::size_t n = 0;
  std::map<std::string, ModeSpec> modes;
  std::vector<std::string> sequence;

  std::size_t steps() const noexcept { return sequence.size(); }
  const ModeSpec& mode_at(std::size_t k) const { return modes.at(sequence.at(k)); }
};

// Validates every mode, dimensions and labels; K >= 1. With
// `check_flow_shop`, also requires A⁰_{i+1,i} >= 0 and A¹_{ii} >= 0 for every
// used mode (permutation flow-shop ordering).
void validate_instance(const SldiInstance& inst, bool check_flow_shop = false);

// The R_max matrices of one step after residuation:
//   C = A⁰ ⊕ B⁰♯   (within-step),  I = A¹  (forward),  P = B¹♯  (backward).
struct ReducedMode {
  MaxPlusMatrix c;
  MaxPlusMatrix i;
  MaxPlusMatrix p;
};

ReducedMode reduce_mode(const ModeSpec& mode);

// The reduced matrices of a whole sequence: K diagonal blocks, K-1 forward
// and K-1 backward coupling blocks, all n x n over R_max.
struct BlockChain {
  std::size_t n = 0;
  std::vector<MaxPlusMatrix> c;
  std::vector<MaxPlusMatrix> i;
  std::vector<MaxPlusMatrix> p;

  std::size_t steps() const noexcept { return c.size(); }
};

// Reduces every step of a validated instance. The last step's A¹/B¹ are
// never used.
BlockChain make_chain(const SldiInstance& inst);

// Throws DimensionError on inconsistent lengths or shapes.
void validate_chain(const BlockChain& chain);

// Block-tridiagonal Kn x Kn matrix M_v with diagonal C_k, sub-diagonal I_k
// and super-diagonal P_k. The SLDI holds for x̃ = [x(1); ...; x(K)] iff
// M_v ⊗ x̃ ⪯ x̃.
MaxPlusMatrix assemble_mv(const BlockChain& chain);
MaxPlusMatrix assemble_mv(const SldiInstance& inst);

// Which algorithm produced a result.
enum class SolverKind { kDense, kBlock, kOracle, kFast };
const char* to_string(SolverKind s) noexcept;

enum class MakespanStatus {
  kFeasible,
  // Feasible, but the last event is not constrained by the first one; the
  // makespan is -inf.
  kDecoupled,
  kInfeasible,
  // Nothing to schedule (K = 0); makespan 0.
  kEmpty,
};
const char* to_string(MakespanStatus s) noexcept;

// Where infeasibility was detected.
struct InfeasibilityWitness {
  enum class Kind {
    kNode,          // a node of G(M_v) on a positive circuit (0-based)
    kStep,          // G(C_k) has a positive circuit (0-based k)
    kReducedStep,   // G(ℂ_i) has a positive circuit (0-based i)
    kType,          // a product type's own segment is infeasible
  };
  Kind kind = Kind::kNode;
  std::size_t index = 0;
  // For kType: the step within the type's segment.
  std::size_t detail = 0;

  std::string describe() const;
};

struct MakespanResult {
  MakespanStatus status = MakespanStatus::kInfeasible;
  // x_n(K) - x_1(1) when feasible; -inf when decoupled.
  ExtReal makespan;
  // K vectors of n finite event times with x_1(1) = 0, when requested.
  std::optional<std::vector<std::vector<double>>> trajectory;
  SolverKind solver = SolverKind::kDense;
  std::optional<InfeasibilityWitness> witness;

  bool feasible() const noexcept { return status != MakespanStatus::kInfeasible; }
};

// Makespan through the Kleene star of the assembled M_v; O((Kn)³).
// The trajectory, if requested, is the first column of M_v* split into K
// vectors; events unreachable from x_1(1) are lifted to finite values that
// keep every constraint.
MakespanResult dense_makespan(const BlockChain& chain, bool want_trajectory = false);
MakespanResult dense_makespan(const SldiInstance& inst, bool want_trajectory = false);

// Splits a stacked Kn vector into K vectors of n.
std::vector<std::vector<double>> split_trajectory(const std::vector<double>& stacked, std::size_t n);

enum class BoundSide { kLower, kUpper };

struct Violation {
  std::size_t k = 0;  // 0-based step; x_i is read at k+1 when between_steps
  std::size_t i = 0;
  std::size_t j = 0;
  bool between_steps = false;  // x_i(k+1) - x_j(k) rather than x_i(k) - x_j(k)
  BoundSide side = BoundSide::kLower;
  double bound = 0.0;
  // Signed margin; negative means violated.
  double slack = 0.0;
};

// Lists every window violated by more than `tol`. Throws DimensionError if
// `xs` does not hold K vectors of size n.
std::vector<Violation> check_trajectory(const SldiInstance& inst,
                                        const std::vector<std::vector<double>>& xs,
                                        double tol = kDefaultTolerance);

}  // namespace tropsched

#endif  // TROPSCHED_SLDI_HPP_
