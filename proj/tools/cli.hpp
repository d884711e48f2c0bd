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

// The tropsched command line, callable in-process.

#ifndef TROPSCHED_TOOLS_CLI_HPP_
#define TROPSCHED_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "tropsched/bakery.hpp"

namespace tropsched::cli {

enum ExitCode : int {
  kOk = 0,
  kMethodsDisagree = 1,
  kInfeasible = 2,
  kInvalidInput = 3,
  kBudgetExceeded = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "rye,wheat" or "2,1" (1-based) into type indices.
Schedule parse_schedule(const BakeryConfig& cfg, const std::string& spec);

}  // namespace tropsched::cli

#endif  // TROPSCHED_TOOLS_CLI_HPP_
