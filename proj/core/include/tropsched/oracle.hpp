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

// Independent check of the max-plus solvers: the makespan problem read as a
// system of difference constraints and solved by Bellman-Ford longest paths.

#ifndef TROPSCHED_ORACLE_HPP_
#define TROPSCHED_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "tropsched/matrix.hpp"
#include "tropsched/sldi.hpp"

namespace tropsched {

struct Arc {
  std::size_t src = 0;
  std::size_t dst = 0;
  double weight = 0.0;

  bool operator==(const Arc&) const = default;
};

// Precedence graph: one arc j -> i of weight A_ij per finite entry. Nodes are
// 0-based.
struct ConstraintGraph {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;
};

ConstraintGraph to_graph(const MaxPlusMatrix& a);
// Same arc set as to_graph(assemble_mv(chain)) without the dense matrix.
// Arcs are ordered by (src, dst).
ConstraintGraph to_graph(const BlockChain& chain);

struct LongestPath {
  enum class Status { kValue, kPositiveCycle, kUnreachable };
  Status status = Status::kUnreachable;
  double value = 0.0;
  // For kPositiveCycle: a node whose label still improved after |V|-1 rounds.
  std::size_t witness = 0;
};

// Maximum-weight src -> dst path by Bellman-Ford relaxation. Any arc still
// relaxable after |V|-1 rounds reports kPositiveCycle, wherever it lies.
LongestPath bf_longest_path(const ConstraintGraph& g, std::size_t src, std::size_t dst);

// Longest path from x_1(1) to x_n(K) on the chain's constraint graph.
MakespanResult oracle_makespan(const BlockChain& chain);
MakespanResult oracle_makespan(const SldiInstance& inst);

}  // namespace tropsched

#endif  // TROPSCHED_ORACLE_HPP_
