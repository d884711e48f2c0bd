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

// Seeded generators for test and benchmark inputs. All values are integers.

#ifndef TROPSCHED_SYNTH_HPP_
#define TROPSCHED_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "tropsched/bakery.hpp"
#include "tropsched/sldi.hpp"

namespace tropsched {

struct RandomSldiOptions {
  std::size_t n = 4;
  std::size_t steps = 6;
  // Probability of an extra off-chain window on each (i, j).
  double density = 0.25;
  // Plant a positive circuit.
  bool infeasible = false;
  int max_slack = 5;
};

// One mode per step. Windows are drawn around a hidden integer trajectory, so
// the instance is feasible unless `infeasible` is set, in which case exactly
// one pair of opposing lower bounds closes a positive circuit. A⁰_{i+1,i} and
// A¹_{ii} are always finite, so feasible instances have a finite makespan.
SldiInstance random_sldi(std::mt19937_64& rng, const RandomSldiOptions& opt);

struct RandomShopOptions {
  std::size_t machines = 7;
  std::size_t types = 3;
  // Total demand Q is drawn from [types, max_total_quantity].
  std::size_t max_total_quantity = 20;
  std::size_t max_capacity = 4;
  int max_duration = 12;
};

// A valid configuration that is feasible for every schedule: the mixer
// window and the link into the proofer leave room for a full batch to drain
// through the no-wait line.
BakeryConfig random_shop(std::mt19937_64& rng, const RandomShopOptions& opt);

// Q = 975 products of J = 9 types in B = 12 batches on the seven-stage line.
BakeryConfig scale_shop(std::uint64_t seed = 975);

}  // namespace tropsched

#endif  // TROPSCHED_SYNTH_HPP_
