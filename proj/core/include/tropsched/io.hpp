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

// JSON documents.
//
// Shop configuration (times in minutes; a window is [min, max] or a single
// number meaning min == max):
//
//   {
//     "machines": [
//       {"name": "mixing", "processing": {"rye": [10, 40], "wheat": [8, 30]}},
//       ...
//     ],
//     "transport": [[0, 0], ..., [2, 20]],     // M-1 windows, machine m -> m+1
//     "types": [{"name": "rye", "capacity": 4, "quantity": 10}, ...],
//     "clean_time": 5,
//     "demand": {"rye": 10, "wheat": 6}        // optional, overrides quantity
//   }
//
// Demand document: {"demand": {"rye": 10}} or the bare object {"rye": 10}.
//
// SLDI instance, matrices as literals ("0,-inf;3,0", see parse_matrix):
//
//   {"n": 2, "modes": {"a": {"a0": "...", "a1": "...", "b0": "...", "b1": "..."}},
//    "sequence": ["a", "a"]}
//
// Errors are InvalidInput naming the source and the JSON path of the field.

#ifndef TROPSCHED_IO_HPP_
#define TROPSCHED_IO_HPP_

#include <filesystem>
#include <string>

#include "tropsched/bakery.hpp"
#include "tropsched/sldi.hpp"

namespace tropsched {

// Structural parsing only; run validate_config for the shop invariants.
BakeryConfig parse_shop(const std::string& text, const std::string& source = "<input>");
BakeryConfig load_shop(const std::filesystem::path& path);
std::string shop_to_json(const BakeryConfig& cfg);

// Sets Q_j of the named types; types not mentioned get Q_j = 0.
void apply_demand(BakeryConfig& cfg, const std::string& text, const std::string& source = "<input>");
void load_demand(BakeryConfig& cfg, const std::filesystem::path& path);

SldiInstance parse_sldi(const std::string& text, const std::string& source = "<input>");
SldiInstance load_sldi(const std::filesystem::path& path);
std::string sldi_to_json(const SldiInstance& inst);

// Whole file as a string; InvalidInput if unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace tropsched

#endif  // TROPSCHED_IO_HPP_
