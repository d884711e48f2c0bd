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

#ifndef TROPSCHED_TOOLS_GANTT_HPP_
#define TROPSCHED_TOOLS_GANTT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "tropsched/bakery.hpp"

namespace tropsched::cli {

// Occupancy of machine m by product k; all indices 0-based.
struct GanttRecord {
  std::size_t product = 0;
  std::size_t machine = 0;
  std::size_t type = 0;
  std::size_t batch = 0;
  double start = 0.0;
  double end = 0.0;
};

// Ordered by product, then machine.
std::vector<GanttRecord> gantt_records(const BakeryConfig& cfg, const ProductIndexing& idx,
                                       const std::vector<std::vector<double>>& xs);

// One rectangle per product on the mixer and the no-wait line, one per batch
// on the proofer and the oven: (M-2) Q + 2 B bars in total.
std::vector<GanttRecord> merge_batches(const BakeryConfig& cfg, const std::vector<GanttRecord>& records);

std::string gantt_json(const BakeryConfig& cfg, const Schedule& w, const std::vector<GanttRecord>& records,
                       double makespan);

// One lane per machine, bars colored by type, dashed makespan marker, hour
// ticks.
std::string gantt_svg(const BakeryConfig& cfg, const std::vector<GanttRecord>& records, double makespan);

}  // namespace tropsched::cli

#endif  // TROPSCHED_TOOLS_GANTT_HPP_
