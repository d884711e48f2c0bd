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

#include "tropsched/sldi.hpp"

#include <algorithm>

#include "tropsched/errors.hpp"
#include "tropsched/star.hpp"

namespace tropsched {

namespace {

void check_window(const MaxPlusMatrix& lower, const MaxPlusMatrix& upper, const std::string& label,
                  const char* which) {
  for (std::size_t i = 0; i < lower.rows(); ++i) {
    for (std::size_t j = 0; j < lower.cols(); ++j) {
      if (upper(i, j) < lower(i, j)) {
        throw InvalidInput("mode '" + label + "': empty " + which + " window at (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + "): lower " +
                           to_string(lower(i, j)) + " > upper " + to_string(upper(i, j)));
      }
    }
  }
}

}  // namespace

void validate_mode(const ModeSpec& mode) {
  const std::size_t n = mode.a0.rows();
  for (const MaxPlusMatrix* m : {&mode.a0, &mode.a1, &mode.b0, &mode.b1}) {
    if (m->rows() != n || m->cols() != n) {
      throw DimensionError("mode '" + mode.label + "': constraint matrices must all be " +
                           std::to_string(n) + "x" + std::to_string(n));
    }
  }
  require_max_valued(mode.a0, "mode '" + mode.label + "' A0");
  require_max_valued(mode.a1, "mode '" + mode.label + "' A1");
  require_min_valued(mode.b0, "mode '" + mode.label + "' B0");
  require_min_valued(mode.b1, "mode '" + mode.label + "' B1");
  check_window(mode.a0, mode.b0, mode.label, "within-step");
  check_window(mode.a1, mode.b1, mode.label, "between-step");
}

void validate_instance(const SldiInstance& inst, bool check_flow_shop) {
  if (inst.n == 0) throw InvalidInput("SLDI instance: dimension n must be positive");
  if (inst.sequence.empty()) throw InvalidInput("SLDI instance: the mode sequence is empty");
  for (const auto& [label, mode] : inst.modes) {
    validate_mode(mode);
    if (mode.dimension() != inst.n) {
      throw DimensionError("mode '" + label + "' has dimension " + std::to_string(mode.dimension()) +
                           ", instance expects " + std::to_string(inst.n));
    }
  }
  for (std::size_t k = 0; k < inst.sequence.size(); ++k) {
    if (!inst.modes.contains(inst.sequence[k])) {
      throw InvalidInput("sequence position " + std::to_string(k + 1) + ": unknown mode '" +
                         inst.sequence[k] + "'");
    }
  }
  if (!check_flow_shop) return;
  for (std::size_t k = 0; k < inst.sequence.size(); ++k) {
    const ModeSpec& mode = inst.mode_at(k);
    for (std::size_t i = 0; i + 1 < inst.n; ++i) {
      if (mode.a0(i + 1, i) < Finite(0.0)) {
        throw InvalidInput("mode '" + mode.label + "' breaks flow-shop ordering: A0(" +
                           std::to_string(i + 2) + "," + std::to_string(i + 1) + ") < 0");
      }
    }
    if (k + 1 == inst.sequence.size()) continue;
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (mode.a1(i, i) < Finite(0.0)) {
        throw InvalidInput("mode '" + mode.label + "' breaks flow-shop ordering: A1(" +
                           std::to_string(i + 1) + "," + std::to_string(i + 1) + ") < 0");
      }
    }
  }
}

ReducedMode reduce_mode(const ModeSpec& mode) {
  return ReducedMode{.c = oplus(mode.a0, sharp(mode.b0)), .i = mode.a1, .p = sharp(mode.b1)};
}

BlockChain make_chain(const SldiInstance& inst) {
  validate_instance(inst);
  std::map<std::string, ReducedMode> reduced;
  for (const auto& [label, mode] : inst.modes) reduced.emplace(label, reduce_mode(mode));

  BlockChain chain;
  chain.n = inst.n;
  const std::size_t steps = inst.steps();
  chain.c.reserve(steps);
  chain.i.reserve(steps - 1);
  chain.p.reserve(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) {
    const ReducedMode& r = reduced.at(inst.sequence[k]);
    chain.c.push_back(r.c);
    if (k + 1 < steps) {
      chain.i.push_back(r.i);
      chain.p.push_back(r.p);
    }
  }
  return chain;
}

void validate_chain(const BlockChain& chain) {
  if (chain.c.empty()) throw DimensionError("block chain: no steps");
  if (chain.i.size() + 1 != chain.c.size() || chain.p.size() + 1 != chain.c.size()) {
    throw DimensionError("block chain: expected K diagonal and K-1 coupling blocks");
  }
  auto check = [&](const std::vector<MaxPlusMatrix>& blocks, const char* name) {
    for (const MaxPlusMatrix& b : blocks) {
      if (b.rows() != chain.n || b.cols() != chain.n) {
        throw DimensionError(std::string("block chain: ") + name + " block is not n x n");
      }
      require_max_valued(b, std::string("block chain ") + name);
    }
  };
  check(chain.c, "C");
  check(chain.i, "I");
  check(chain.p, "P");
}

MaxPlusMatrix assemble_mv(const BlockChain& chain) {
  validate_chain(chain);
  const std::size_t n = chain.n;
  const std::size_t steps = chain.steps();
  MaxPlusMatrix m = MaxPlusMatrix::Epsilon(steps * n);
  for (std::size_t k = 0; k < steps; ++k) {
    m.set_block(k * n, k * n, chain.c[k]);
    if (k + 1 < steps) {
      m.set_block((k + 1) * n, k * n, chain.i[k]);
      m.set_block(k * n, (k + 1) * n, chain.p[k]);
    }
  }
  return m;
}

MaxPlusMatrix assemble_mv(const SldiInstance& inst) { return assemble_mv(make_chain(inst)); }

const char* to_string(SolverKind s) noexcept {
  switch (s) {
    case SolverKind::kDense:
      return "dense";
    case SolverKind::kBlock:
      return "block";
    case SolverKind::kOracle:
      return "oracle";
    case SolverKind::kFast:
      return "fast";
  }
  return "?";
}

const char* to_string(MakespanStatus s) noexcept {
  switch (s) {
    case MakespanStatus::kFeasible:
      return "feasible";
    case MakespanStatus::kDecoupled:
      return "decoupled";
    case MakespanStatus::kInfeasible:
      return "infeasible";
    case MakespanStatus::kEmpty:
      return "empty";
  }
  return "?";
}

std::string InfeasibilityWitness::describe() const {
  switch (kind) {
    case Kind::kNode:
      return "positive circuit through node " + std::to_string(index + 1) + " of G(M_v)";
    case Kind::kStep:
      return "positive circuit within step k=" + std::to_string(index + 1);
    case Kind::kReducedStep:
      return "positive circuit in the reduced chain at i=" + std::to_string(index + 1);
    case Kind::kType:
      return "product type " + std::to_string(index + 1) + " is infeasible on its own (step " +
             std::to_string(detail + 1) + " of its segment)";
  }
  return "infeasible";
}

std::vector<std::vector<double>> split_trajectory(const std::vector<double>& stacked, std::size_t n) {
  std::vector<std::vector<double>> xs;
  for (std::size_t off = 0; off + n <= stacked.size(); off += n) {
    xs.emplace_back(stacked.begin() + static_cast<std::ptrdiff_t>(off),
                    stacked.begin() + static_cast<std::ptrdiff_t>(off + n));
  }
  return xs;
}

MakespanResult dense_makespan(const BlockChain& chain, bool want_trajectory) {
  const MaxPlusMatrix mv = assemble_mv(chain);
  const std::size_t dim = mv.rows();
  MakespanResult result;
  result.solver = SolverKind::kDense;

  StarResult star = kleene_star(mv);
  if (!star.ok()) {
    result.status = MakespanStatus::kInfeasible;
    result.witness = InfeasibilityWitness{InfeasibilityWitness::Kind::kNode, star.witness, 0};
    return result;
  }
  const MaxPlusMatrix& s = *star.star;
  result.makespan = s(dim - 1, 0);
  result.status = result.makespan.is_neg_inf() ? MakespanStatus::kDecoupled : MakespanStatus::kFeasible;
  if (!want_trajectory) return result;

  // x = S ⊗ z with z = (0, -L, ..., -L). Any S ⊗ z solves M_v ⊗ x ⪯ x; for L
  // large enough it matches the first column wherever that column is finite
  // and fills the remaining events with finite values.
  double lo = 0.0;
  double hi = 0.0;
  for (ExtReal e : s.data()) {
    if (!e.is_finite()) continue;
    lo = std::min(lo, e.value_unchecked());
    hi = std::max(hi, e.value_unchecked());
  }
  const double lift = 1.0 + hi - lo;
  std::vector<double> stacked(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    ExtReal best = s(i, 0);
    for (std::size_t j = 1; j < dim; ++j) {
      if (s(i, j).is_finite()) best = oplus(best, Finite(s(i, j).value_unchecked() - lift));
    }
    stacked[i] = best.value();
  }
  result.trajectory = split_trajectory(stacked, chain.n);
  return result;
}

MakespanResult dense_makespan(const SldiInstance& inst, bool want_trajectory) {
  return dense_makespan(make_chain(inst), want_trajectory);
}

std::vector<Violation> check_trajectory(const SldiInstance& inst,
                                        const std::vector<std::vector<double>>& xs, double tol) {
  validate_instance(inst);
  const std::size_t steps = inst.steps();
  const std::size_t n = inst.n;
  if (xs.size() != steps) {
    throw DimensionError("check_trajectory: expected " + std::to_string(steps) + " vectors, got " +
                         std::to_string(xs.size()));
  }
  for (const auto& x : xs) {
    if (x.size() != n) throw DimensionError("check_trajectory: vector of wrong dimension");
  }

  std::vector<Violation> out;
  auto scan = [&](const MaxPlusMatrix& lower, const MaxPlusMatrix& upper, const std::vector<double>& to,
                  const std::vector<double>& from, std::size_t k, bool between) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double diff = to[i] - from[j];
        if (lower(i, j).is_finite()) {
          const double slack = diff - lower(i, j).value_unchecked();
          if (slack < -tol) out.push_back({k, i, j, between, BoundSide::kLower, lower(i, j).value_unchecked(), slack});
        }
        if (upper(i, j).is_finite()) {
          const double slack = upper(i, j).value_unchecked() - diff;
          if (slack < -tol) out.push_back({k, i, j, between, BoundSide::kUpper, upper(i, j).value_unchecked(), slack});
        }
      }
    }
  };
  for (std::size_t k = 0; k < steps; ++k) {
    const ModeSpec& mode = inst.mode_at(k);
    scan(mode.a0, mode.b0, xs[k], xs[k], k, false);
    if (k + 1 < steps) scan(mode.a1, mode.b1, xs[k + 1], xs[k], k, true);
  }
  return out;
}

}  // namespace tropsched
