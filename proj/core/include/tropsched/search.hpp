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

// Schedule evaluation and exhaustive search over type permutations.
//
// A type change uses mode c_j, whose B¹ = 𝒯, so P = ℰ at every boundary
// between two types. The boundary ℙ and ℂ then vanish and ℂ* = E, which cuts
// the backward recursion: every type's run of products reduces exactly as a
// standalone chain of that type. The product 𝕄 factors as
//
//   𝕄(w) = S_{j_J} ⊗ X_{j_{J-1} -> j_J} ⊗ ⋯ ⊗ X_{j_1 -> j_2} ⊗ S_{j_1}
//
// with S_j the 𝕄 of type j alone and X_{j -> j'} = C*_{j'} ⊗ I_{c_j} ⊗ C*_j.
// Feasibility is decided per type, independently of the schedule.

#ifndef TROPSCHED_SEARCH_HPP_
#define TROPSCHED_SEARCH_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropsched/bakery.hpp"
#include "tropsched/matrix.hpp"
#include "tropsched/sldi.hpp"

namespace tropsched {

class SegmentCache {
 public:
  // Runs the block recursion once per type. Never throws on infeasibility;
  // see feasible().
  static SegmentCache build(const BakeryConfig& cfg);

  std::size_t n() const noexcept { return n_; }
  std::size_t type_count() const noexcept { return types_; }
  // active()[j] iff Q_j > 0.
  const std::vector<bool>& active() const noexcept { return active_; }

  // False iff some type with positive demand is infeasible on its own, in
  // which case every schedule is infeasible.
  bool feasible() const noexcept { return !witness_.has_value(); }
  const std::optional<InfeasibilityWitness>& witness() const noexcept { return witness_; }

  // Requires feasible() and Q_j > 0.
  const MaxPlusMatrix& segment(std::size_t j) const;
  const MaxPlusMatrix& boundary(std::size_t from, std::size_t to) const;
  const MaxPlusMatrix& c_star(std::size_t j) const;

  // Row-major doubles (-inf for ε) of the same matrices, for the hot path.
  const double* segment_data(std::size_t j) const { return seg_raw_.at(j).data(); }
  const double* boundary_data(std::size_t from, std::size_t to) const {
    return bnd_raw_.at(from * types_ + to).data();
  }

 private:
  std::size_t n_ = 0;
  std::size_t types_ = 0;
  std::vector<bool> active_;
  std::optional<InfeasibilityWitness> witness_;
  std::vector<MaxPlusMatrix> segments_;
  std::vector<MaxPlusMatrix> c_stars_;
  std::vector<MaxPlusMatrix> boundaries_;  // types_ x types_, row-major by (from, to)
  std::vector<std::vector<double>> seg_raw_;
  std::vector<std::vector<double>> bnd_raw_;
};

// The full 𝕄(w) from the cache. Throws InfeasibleCircuit if the cache is
// infeasible.
MaxPlusMatrix fast_product(const SegmentCache& cache, const Schedule& w);

// 𝕄(w)(n-1, 0) by matrix-vector products, O(J n²) per schedule.
MakespanResult fast_makespan(const SegmentCache& cache, const Schedule& w);

// Dense M_v* has (Q n)² entries; refuse beyond this dimension.
inline constexpr std::size_t kDefaultDenseMaxDimension = 1024;

// Evaluates schedules of one configuration with a fixed method. Immutable
// after construction and safe to share between threads.
class ScheduleEvaluator {
 public:
  ScheduleEvaluator(const BakeryConfig& cfg, SolverKind method,
                    std::size_t dense_max_dimension = kDefaultDenseMaxDimension);

  SolverKind method() const noexcept { return method_; }
  const BakeryConfig& config() const noexcept { return cfg_; }
  // Present for kFast.
  const std::optional<SegmentCache>& cache() const noexcept { return cache_; }

  // The reduced chain of schedule `w` from the cached per-type modes.
  BlockChain chain(const Schedule& w) const;

  // Throws InvalidInput for a non-permutation, or for kDense beyond the
  // dimension cap.
  MakespanResult operator()(const Schedule& w, bool want_trajectory = false) const;

 private:
  BakeryConfig cfg_;
  SolverKind method_;
  std::size_t dense_max_dimension_;
  std::optional<SegmentCache> cache_;
  std::vector<ReducedMode> reduced_;  // 3 per type: a_j, b_j, c_j
};

// One-shot convenience; builds a fresh evaluator.
MakespanResult evaluate_schedule(const BakeryConfig& cfg, const Schedule& w, SolverKind method);

struct SearchOptions {
  SolverKind method = SolverKind::kFast;
  // J! above this throws BudgetExceeded before any work.
  std::uint64_t max_permutations = 3628800;  // 10!
  // Wall-clock cap; <= 0 disables it.
  double budget_seconds = 0.0;
  // 0: TROPSCHED_THREADS if set, else hardware concurrency.
  std::size_t threads = 0;
  bool keep_table = false;
  std::size_t dense_max_dimension = kDefaultDenseMaxDimension;
};

struct ScheduleRow {
  Schedule schedule;
  MakespanStatus status = MakespanStatus::kFeasible;
  ExtReal makespan;
};

struct SearchTimings {
  double setup_seconds = 0.0;
  double search_seconds = 0.0;
};

struct SearchResult {
  // kFeasible, kInfeasible (every schedule infeasible) or kEmpty.
  MakespanStatus status = MakespanStatus::kEmpty;
  Schedule best;
  ExtReal best_makespan;
  std::uint64_t evaluated = 0;
  // Lexicographic order of schedules when keep_table is set.
  std::vector<ScheduleRow> table;
  SearchTimings timings;
};

// Threads used when SearchOptions::threads is 0.
std::size_t default_thread_count();

// n! saturating at UINT64_MAX.
std::uint64_t factorial(std::size_t n) noexcept;

// Minimizes the makespan over all permutations of the active types. Ties go
// to the lexicographically smallest schedule, so the result does not depend
// on the thread count. Throws BudgetExceeded.
SearchResult exhaustive_search(const BakeryConfig& cfg, const SearchOptions& opt = {});

}  // namespace tropsched

#endif  // TROPSCHED_SEARCH_HPP_
