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

// A bakery line as a permutation flow shop with time windows.
//
// Stages, in order: a mixer (machine 1), a no-wait unit-capacity line
// (machines 2..M-2, e.g. dividing, rounding, pre-proofing, rolling), and two
// batch machines (M-1 proofer, M oven) that hold up to C_j products of a single
// type. Each product k has the event vector
//   x(k) = [ξ_1(k), ξ'_1(k), ..., ξ_M(k), ξ'_M(k)]
// of entry/exit times per machine; in 0-based event indices ξ_m -> 2m-2 and
// ξ'_m -> 2m-1 (m 1-based). All times are minutes.

#ifndef TROPSCHED_BAKERY_HPP_
#define TROPSCHED_BAKERY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropsched/sldi.hpp"

namespace tropsched {

inline constexpr std::size_t kMinMachines = 3;

struct Window {
  double lo = 0.0;
  double hi = 0.0;

  bool operator==(const Window&) const = default;
};

struct ProductType {
  std::string name;
  std::size_t quantity = 0;  // Q_j, products per day
  std::size_t capacity = 1;  // C_j, products per proofer/oven load
  // τ⁻_{m,j}, τ⁺_{m,j} for every machine m.
  std::vector<Window> processing;
};

struct BakeryConfig {
  std::vector<std::string> machine_names;
  // τ⁻_m, τ⁺_m from machine m to m+1; size M-1.
  std::vector<Window> transport;
  std::vector<ProductType> types;
  double clean_time = 0.0;

  std::size_t machines() const noexcept { return machine_names.size(); }
  std::size_t type_count() const noexcept { return types.size(); }
  // n = 2M.
  std::size_t event_dimension() const noexcept { return 2 * machines(); }
};

// Default names of the seven-stage line.
std::vector<std::string> default_machine_names();

struct ConfigIssue {
  std::optional<std::size_t> machine;  // 0-based
  std::optional<std::size_t> type;     // 0-based
  std::string message;

  // "machine 6 (proofing), type 2 (rye): ..." with 1-based numbers.
  std::string describe(const BakeryConfig& cfg) const;
};

// Every violated invariant; empty iff the configuration is valid.
std::vector<ConfigIssue> validate_config(const BakeryConfig& cfg);
// Throws InvalidInput listing all issues.
void require_valid(const BakeryConfig& cfg);

// Order in which product types enter the mixer (0-based type indices).
using Schedule = std::vector<std::size_t>;

// Types with Q_j > 0, ascending.
std::vector<std::size_t> active_types(const BakeryConfig& cfg);

// Throws InvalidInput unless `w` is a permutation of the active types.
void require_schedule(const BakeryConfig& cfg, const Schedule& w);

// B_j = ceil(Q_j / C_j).
std::size_t batch_count(const ProductType& t) noexcept;
// Size of batch b (0-based) of type t: C_j except possibly the last one,
// which holds Q_j - (B_j - 1) C_j.
std::size_t batch_size(const ProductType& t, std::size_t b) noexcept;

struct ProductIndexing {
  std::vector<std::size_t> type_of;   // j(k), 0-based type per product
  std::vector<std::size_t> batch_of;  // b(k), 0-based batch within its type
  std::size_t total_batches = 0;      // B

  std::size_t products() const noexcept { return type_of.size(); }
};

// Types in schedule order, each split into consecutive batches of C_j.
ProductIndexing index_products(const BakeryConfig& cfg, const Schedule& w);

enum class ModeKind {
  kSameBatch,   // a_j: product k+1 is in the same batch
  kNewBatch,    // b_j: next batch of the same type
  kTypeChange,  // c_j: next product has another type
};

// "a1", "b1", "c1" for type 0, etc.
std::string mode_label(ModeKind kind, std::size_t type);

// The 3J modes (a_j, b_j, c_j for every type).
std::map<std::string, ModeSpec> build_modes(const BakeryConfig& cfg);

// v_k per product; the last product gets a_{j(Q)}.
std::vector<std::string> build_sequence(const ProductIndexing& idx);

// Requires at least one product.
SldiInstance bakery_instance(const BakeryConfig& cfg, const Schedule& w);

// The reduced chain for schedule `w`, reducing each mode only once.
BlockChain bakery_chain(const BakeryConfig& cfg, const Schedule& w);

// Makespan ξ'_M(Q) - ξ_1(1) with the dense, block or oracle solver (kFast is
// served by SegmentCache). Empty demand gives status kEmpty and makespan 0.
// A trajectory is only available from kDense.
MakespanResult bakery_makespan(const BakeryConfig& cfg, const Schedule& w, SolverKind method,
                               bool want_trajectory = false);

// Shop-level properties every consistent trajectory must have: batch-mates
// share mixer entry and proofer/oven times, type changes keep the cleaning
// gap, no-wait machines run exactly τ⁻, and no product overtakes another on
// machines 2..M or at the mixer exit. Returns one message per violation.
std::vector<std::string> bakery_invariant_violations(const BakeryConfig& cfg, const ProductIndexing& idx,
                                                     const std::vector<std::vector<double>>& xs,
                                                     double tol = 1e-6);

}  // namespace tropsched

#endif  // TROPSCHED_BAKERY_HPP_
