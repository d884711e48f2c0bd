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

#include "tropsched/bakery.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tropsched/block_solver.hpp"
#include "tropsched/errors.hpp"
#include "tropsched/oracle.hpp"

namespace tropsched {

namespace {

// 0-based event indices of machine m (0-based).
constexpr std::size_t entry_event(std::size_t m) { return 2 * m; }
constexpr std::size_t exit_event(std::size_t m) { return 2 * m + 1; }

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void check_window(std::vector<ConfigIssue>& out, const Window& w, std::optional<std::size_t> machine,
                  std::optional<std::size_t> type, const char* what) {
  if (!std::isfinite(w.lo) || !std::isfinite(w.hi)) {
    out.push_back({machine, type, std::string(what) + " window must be finite"});
  } else if (w.lo < 0.0) {
    out.push_back({machine, type, std::string(what) + " window min " + fmt(w.lo) + " is negative"});
  } else if (w.lo > w.hi) {
    out.push_back({machine, type,
                   std::string(what) + " window min " + fmt(w.lo) + " > max " + fmt(w.hi)});
  }
}

}  // namespace

std::vector<std::string> default_machine_names() {
  return {"mixing", "dividing", "rounding", "pre-proofing", "rolling", "proofing", "baking"};
}

std::string ConfigIssue::describe(const BakeryConfig& cfg) const {
  std::string out;
  if (machine) {
    out += "machine " + std::to_string(*machine + 1);
    if (*machine < cfg.machine_names.size()) out += " (" + cfg.machine_names[*machine] + ")";
  }
  if (type) {
    if (!out.empty()) out += ", ";
    out += "type " + std::to_string(*type + 1);
    if (*type < cfg.types.size() && !cfg.types[*type].name.empty()) out += " (" + cfg.types[*type].name + ")";
  }
  if (!out.empty()) out += ": ";
  return out + message;
}

std::vector<ConfigIssue> validate_config(const BakeryConfig& cfg) {
  std::vector<ConfigIssue> out;
  const std::size_t machines = cfg.machines();
  if (machines < kMinMachines) {
    out.push_back({std::nullopt, std::nullopt,
                   "at least " + std::to_string(kMinMachines) + " machines are required (mixer, proofer, oven)"});
    return out;
  }
  if (cfg.transport.size() + 1 != machines) {
    out.push_back({std::nullopt, std::nullopt,
                   "expected " + std::to_string(machines - 1) + " transport windows, got " +
                       std::to_string(cfg.transport.size())});
  } else {
    for (std::size_t m = 0; m + 1 < machines; ++m) {
      check_window(out, cfg.transport[m], m, std::nullopt, "transport");
      // The mixer and the no-wait line are rigidly linked; only the links into
      // the proofer and the oven have slack.
      if (m + 3 < machines && (cfg.transport[m].lo != 0.0 || cfg.transport[m].hi != 0.0)) {
        out.push_back({m, std::nullopt, "transport to the next machine must be exactly 0 (rigid link)"});
      }
    }
  }
  if (!std::isfinite(cfg.clean_time) || cfg.clean_time < 0.0) {
    out.push_back({std::nullopt, std::nullopt, "cleaning time must be finite and non-negative"});
  }

  std::set<std::string> names;
  for (std::size_t j = 0; j < cfg.types.size(); ++j) {
    const ProductType& t = cfg.types[j];
    if (t.name.empty()) out.push_back({std::nullopt, j, "type name is empty"});
    if (!t.name.empty() && !names.insert(t.name).second) {
      out.push_back({std::nullopt, j, "duplicate type name '" + t.name + "'"});
    }
    if (t.capacity < 1) out.push_back({std::nullopt, j, "capacity must be at least 1"});
    if (t.processing.size() != machines) {
      out.push_back({std::nullopt, j,
                     "expected " + std::to_string(machines) + " processing windows, got " +
                         std::to_string(t.processing.size())});
      continue;
    }
    for (std::size_t m = 0; m < machines; ++m) {
      const Window& w = t.processing[m];
      check_window(out, w, m, j, "processing");
      const bool no_wait = m >= 1 && m + 2 < machines;
      if (no_wait && w.lo != w.hi) {
        out.push_back({m, j, "no-wait machine needs min == max processing time, got [" + fmt(w.lo) + ", " +
                                 fmt(w.hi) + "]"});
      }
    }
  }
  return out;
}

void require_valid(const BakeryConfig& cfg) {
  const std::vector<ConfigIssue> issues = validate_config(cfg);
  if (issues.empty()) return;
  std::string msg = "invalid shop configuration:";
  for (const ConfigIssue& i : issues) msg += "\n  " + i.describe(cfg);
  throw InvalidInput(msg);
}

std::vector<std::size_t> active_types(const BakeryConfig& cfg) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cfg.types.size(); ++j) {
    if (cfg.types[j].quantity > 0) out.push_back(j);
  }
  return out;
}

void require_schedule(const BakeryConfig& cfg, const Schedule& w) {
  std::vector<std::size_t> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != active_types(cfg)) {
    std::string msg = "schedule must be a permutation of the types with positive demand (";
    for (std::size_t j : active_types(cfg)) msg += " " + std::to_string(j + 1);
    throw InvalidInput(msg + " )");
  }
}

std::size_t batch_count(const ProductType& t) noexcept {
  return t.capacity == 0 ? 0 : (t.quantity + t.capacity - 1) / t.capacity;
}

std::size_t batch_size(const ProductType& t, std::size_t b) noexcept {
  const std::size_t batches = batch_count(t);
  if (b + 1 < batches) return t.capacity;
  if (b + 1 == batches) return t.quantity - (batches - 1) * t.capacity;
  return 0;
}

ProductIndexing index_products(const BakeryConfig& cfg, const Schedule& w) {
  require_schedule(cfg, w);
  ProductIndexing idx;
  for (std::size_t j : w) {
    const ProductType& t = cfg.types[j];
    for (std::size_t q = 0; q < t.quantity; ++q) {
      idx.type_of.push_back(j);
      idx.batch_of.push_back(q / t.capacity);
    }
    idx.total_batches += batch_count(t);
  }
  return idx;
}

std::string mode_label(ModeKind kind, std::size_t type) {
  const char prefix = kind == ModeKind::kSameBatch ? 'a' : kind == ModeKind::kNewBatch ? 'b' : 'c';
  return std::string(1, prefix) + std::to_string(type + 1);
}

std::map<std::string, ModeSpec> build_modes(const BakeryConfig& cfg) {
  require_valid(cfg);
  const std::size_t machines = cfg.machines();
  const std::size_t n = cfg.event_dimension();
  const std::size_t proofer = machines - 2;
  const std::size_t oven = machines - 1;
  const ExtReal zero = Finite(0.0);

  std::map<std::string, ModeSpec> modes;
  for (std::size_t j = 0; j < cfg.types.size(); ++j) {
    const ProductType& t = cfg.types[j];

    MaxPlusMatrix a0 = MaxPlusMatrix::Epsilon(n);
    MaxPlusMatrix b0 = MaxPlusMatrix::Top(n);
    for (std::size_t m = 0; m < machines; ++m) {
      a0(exit_event(m), entry_event(m)) = Finite(t.processing[m].lo);
      b0(exit_event(m), entry_event(m)) = Finite(t.processing[m].hi);
    }
    for (std::size_t m = 0; m + 1 < machines; ++m) {
      a0(entry_event(m + 1), exit_event(m)) = Finite(cfg.transport[m].lo);
      b0(entry_event(m + 1), exit_event(m)) = Finite(cfg.transport[m].hi);
    }

    // Shared by all three modes: unit-capacity succession on the no-wait
    // line and FIFO at the mixer exit.
    MaxPlusMatrix a1 = MaxPlusMatrix::Epsilon(n);
    for (std::size_t m = 1; m + 2 < machines; ++m) a1(entry_event(m), exit_event(m)) = zero;
    a1(exit_event(0), exit_event(0)) = zero;

    // a_j: one mixer load, and batch-mates move through proofer and oven
    // together.
    MaxPlusMatrix a1_same = a1;
    MaxPlusMatrix b1_same = MaxPlusMatrix::Top(n);
    for (std::size_t e : {entry_event(0), entry_event(proofer), exit_event(proofer), entry_event(oven),
                          exit_event(oven)}) {
      a1_same(e, e) = zero;
      b1_same(e, e) = zero;
    }

    // b_j: the next batch enters proofer/oven after the previous one left.
    MaxPlusMatrix a1_new = a1;
    a1_new(entry_event(proofer), exit_event(proofer)) = zero;
    a1_new(entry_event(oven), exit_event(oven)) = zero;

    // c_j: as b_j plus mixer cleaning.
    MaxPlusMatrix a1_change = a1_new;
    a1_change(entry_event(0), exit_event(0)) = Finite(cfg.clean_time);

    const MaxPlusMatrix top = MaxPlusMatrix::Top(n);
    const std::string a = mode_label(ModeKind::kSameBatch, j);
    const std::string b = mode_label(ModeKind::kNewBatch, j);
    const std::string c = mode_label(ModeKind::kTypeChange, j);
    modes.emplace(a, ModeSpec{a, a0, a1_same, b0, b1_same});
    modes.emplace(b, ModeSpec{b, a0, a1_new, b0, top});
    modes.emplace(c, ModeSpec{c, a0, a1_change, b0, top});
  }
  return modes;
}

std::vector<std::string> build_sequence(const ProductIndexing& idx) {
  const std::size_t q = idx.products();
  std::vector<std::string> seq;
  seq.reserve(q);
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t j = idx.type_of[k];
    ModeKind kind = ModeKind::kSameBatch;
    if (k + 1 < q) {
      if (idx.type_of[k + 1] != j) {
        kind = ModeKind::kTypeChange;
      } else if (idx.batch_of[k + 1] != idx.batch_of[k]) {
        kind = ModeKind::kNewBatch;
      }
    }
    seq.push_back(mode_label(kind, j));
  }
  return seq;
}

SldiInstance bakery_instance(const BakeryConfig& cfg, const Schedule& w) {
  const ProductIndexing idx = index_products(cfg, w);
  if (idx.products() == 0) throw InvalidInput("bakery instance: the demand is empty");
  SldiInstance inst;
  inst.n = cfg.event_dimension();
  inst.modes = build_modes(cfg);
  inst.sequence = build_sequence(idx);
  return inst;
}

BlockChain bakery_chain(const BakeryConfig& cfg, const Schedule& w) {
  const ProductIndexing idx = index_products(cfg, w);
  if (idx.products() == 0) throw InvalidInput("bakery chain: the demand is empty");
  std::map<std::string, ReducedMode> reduced;
  for (const auto& [label, mode] : build_modes(cfg)) reduced.emplace(label, reduce_mode(mode));

  const std::vector<std::string> seq = build_sequence(idx);
  BlockChain chain;
  chain.n = cfg.event_dimension();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const ReducedMode& r = reduced.at(seq[k]);
    chain.c.push_back(r.c);
    if (k + 1 < seq.size()) {
      chain.i.push_back(r.i);
      chain.p.push_back(r.p);
    }
  }
  return chain;
}

MakespanResult bakery_makespan(const BakeryConfig& cfg, const Schedule& w, SolverKind method,
                               bool want_trajectory) {
  require_valid(cfg);
  require_schedule(cfg, w);
  if (want_trajectory && method != SolverKind::kDense) {
    throw InvalidInput(std::string("trajectories are only produced by the dense solver, not '") +
                       to_string(method) + "'");
  }
  if (w.empty()) {
    MakespanResult r;
    r.status = MakespanStatus::kEmpty;
    r.makespan = Finite(0.0);
    r.solver = method;
    if (want_trajectory) r.trajectory.emplace();
    return r;
  }
  const BlockChain chain = bakery_chain(cfg, w);
  switch (method) {
    case SolverKind::kDense:
      return dense_makespan(chain, want_trajectory);
    case SolverKind::kBlock:
      return block_makespan(chain);
    case SolverKind::kOracle:
      return oracle_makespan(chain);
    case SolverKind::kFast:
      break;
  }
  throw InvalidInput("bakery_makespan: the fast method needs a SegmentCache");
}

std::vector<std::string> bakery_invariant_violations(const BakeryConfig& cfg, const ProductIndexing& idx,
                                                     const std::vector<std::vector<double>>& xs,
                                                     double tol) {
  std::vector<std::string> out;
  const std::size_t machines = cfg.machines();
  const std::size_t q = idx.products();
  if (xs.size() != q) {
    out.push_back("trajectory has " + std::to_string(xs.size()) + " vectors for " + std::to_string(q) +
                  " products");
    return out;
  }
  auto at = [&](std::size_t k, std::size_t e) { return xs[k][e]; };
  auto report = [&](std::size_t k, const std::string& what) {
    out.push_back("product " + std::to_string(k + 1) + ": " + what);
  };

  for (std::size_t k = 0; k < q; ++k) {
    const ProductType& t = cfg.types[idx.type_of[k]];
    for (std::size_t m = 1; m + 2 < machines; ++m) {
      const double d = at(k, exit_event(m)) - at(k, entry_event(m));
      if (std::fabs(d - t.processing[m].lo) > tol) {
        report(k, "no-wait machine " + std::to_string(m + 1) + " ran " + fmt(d) + " instead of " +
                      fmt(t.processing[m].lo));
      }
    }
    if (k + 1 == q) continue;

    // No overtaking on machines 2..M and at the mixer exit.
    for (std::size_t e = entry_event(1); e < 2 * machines; ++e) {
      if (at(k + 1, e) < at(k, e) - tol) report(k, "overtaken at event " + std::to_string(e + 1));
    }
    if (at(k + 1, exit_event(0)) < at(k, exit_event(0)) - tol) report(k, "mixer exit is not FIFO");

    const bool same_type = idx.type_of[k + 1] == idx.type_of[k];
    const bool same_batch = same_type && idx.batch_of[k + 1] == idx.batch_of[k];
    if (same_batch) {
      for (std::size_t e : {entry_event(0), entry_event(machines - 2), exit_event(machines - 2),
                            entry_event(machines - 1), exit_event(machines - 1)}) {
        if (std::fabs(at(k + 1, e) - at(k, e)) > tol) {
          report(k, "batch-mate differs at event " + std::to_string(e + 1));
        }
      }
    }
    if (!same_type && at(k + 1, entry_event(0)) - at(k, exit_event(0)) < cfg.clean_time - tol) {
      report(k, "cleaning gap shorter than " + fmt(cfg.clean_time));
    }
  }
  return out;
}

}  // namespace tropsched
