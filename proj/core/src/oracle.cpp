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

#include "tropsched/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <tuple>

#include "tropsched/errors.hpp"

namespace tropsched {

namespace {

constexpr double kUnlabeled = -std::numeric_limits<double>::infinity();

// One relaxation sweep; returns the last improved node, if any.
std::optional<std::size_t> relax(const ConstraintGraph& g, std::vector<double>& label) {
  std::optional<std::size_t> improved;
  for (const Arc& a : g.arcs) {
    const double from = label[a.src];
    if (from == kUnlabeled) continue;
    if (from + a.weight > label[a.dst]) {
      label[a.dst] = from + a.weight;
      improved = a.dst;
    }
  }
  return improved;
}

// Bellman-Ford from the given initial labels. Returns a node on (or reached
// from) a positive cycle if one is reachable from the labeled set.
std::optional<std::size_t> run(const ConstraintGraph& g, std::vector<double>& label) {
  for (std::size_t round = 0; round + 1 < std::max<std::size_t>(g.node_count, 1); ++round) {
    if (!relax(g, label)) return std::nullopt;
  }
  return relax(g, label);
}

void add_block_arcs(ConstraintGraph& g, const MaxPlusMatrix& block, std::size_t row0, std::size_t col0) {
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) {
      if (block(i, j).is_finite()) g.arcs.push_back({col0 + j, row0 + i, block(i, j).value_unchecked()});
    }
  }
}

}  // namespace

ConstraintGraph to_graph(const MaxPlusMatrix& a) {
  if (!a.is_square()) throw DimensionError("to_graph: matrix is not square");
  require_max_valued(a, "to_graph");
  ConstraintGraph g;
  g.node_count = a.rows();
  add_block_arcs(g, a, 0, 0);
  std::sort(g.arcs.begin(), g.arcs.end(),
            [](const Arc& x, const Arc& y) { return std::tie(x.src, x.dst) < std::tie(y.src, y.dst); });
  return g;
}

ConstraintGraph to_graph(const BlockChain& chain) {
  validate_chain(chain);
  const std::size_t n = chain.n;
  ConstraintGraph g;
  g.node_count = chain.steps() * n;
  for (std::size_t k = 0; k < chain.steps(); ++k) {
    add_block_arcs(g, chain.c[k], k * n, k * n);
    if (k + 1 < chain.steps()) {
      add_block_arcs(g, chain.i[k], (k + 1) * n, k * n);
      add_block_arcs(g, chain.p[k], k * n, (k + 1) * n);
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end(),
            [](const Arc& x, const Arc& y) { return std::tie(x.src, x.dst) < std::tie(y.src, y.dst); });
  return g;
}

LongestPath bf_longest_path(const ConstraintGraph& g, std::size_t src, std::size_t dst) {
  if (src >= g.node_count || dst >= g.node_count) throw DimensionError("bf_longest_path: node out of range");
  for (const Arc& a : g.arcs) {
    if (a.src >= g.node_count || a.dst >= g.node_count) throw DimensionError("bf_longest_path: arc out of range");
  }
  LongestPath out;

  // Global check: every node starts labeled, as if fed by a virtual source.
  std::vector<double> label(g.node_count, 0.0);
  if (auto node = run(g, label)) {
    out.status = LongestPath::Status::kPositiveCycle;
    out.witness = *node;
    return out;
  }

  std::fill(label.begin(), label.end(), kUnlabeled);
  label[src] = 0.0;
  // No positive cycle exists, so this converges within |V|-1 rounds.
  (void)run(g, label);
  if (label[dst] == kUnlabeled) {
    out.status = LongestPath::Status::kUnreachable;
    return out;
  }
  out.status = LongestPath::Status::kValue;
  out.value = label[dst];
  return out;
}

MakespanResult oracle_makespan(const BlockChain& chain) {
  const ConstraintGraph g = to_graph(chain);
  const LongestPath lp = bf_longest_path(g, 0, g.node_count - 1);
  MakespanResult result;
  result.solver = SolverKind::kOracle;
  switch (lp.status) {
    case LongestPath::Status::kPositiveCycle:
      result.status = MakespanStatus::kInfeasible;
      result.witness = InfeasibilityWitness{InfeasibilityWitness::Kind::kNode, lp.witness, 0};
      break;
    case LongestPath::Status::kUnreachable:
      result.status = MakespanStatus::kDecoupled;
      result.makespan = ExtReal::NegInf();
      break;
    case LongestPath::Status::kValue:
      result.status = MakespanStatus::kFeasible;
      result.makespan = Finite(lp.value);
      break;
  }
  return result;
}

MakespanResult oracle_makespan(const SldiInstance& inst) { return oracle_makespan(make_chain(inst)); }

}  // namespace tropsched
