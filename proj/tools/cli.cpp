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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gantt.hpp"
#include "json.hpp"
#include "tropsched/block_solver.hpp"
#include "tropsched/errors.hpp"
#include "tropsched/io.hpp"
#include "tropsched/oracle.hpp"
#include "tropsched/search.hpp"
#include "tropsched/synth.hpp"

namespace tropsched::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string minutes(double v) {
  std::ostringstream os;
  os << v << " min (" << std::fixed << std::setprecision(2) << v / 60.0 << " h)";
  return os.str();
}

std::string duration(double s) {
  std::ostringstream os;
  os << std::setprecision(3);
  if (s < 1e-3) {
    os << s * 1e6 << " us";
  } else if (s < 1.0) {
    os << s * 1e3 << " ms";
  } else {
    os << s << " s";
  }
  return os.str();
}

SolverKind parse_method(const std::string& s) {
  if (s == "dense") return SolverKind::kDense;
  if (s == "block") return SolverKind::kBlock;
  if (s == "oracle") return SolverKind::kOracle;
  if (s == "fast") return SolverKind::kFast;
  throw InvalidInput("unknown method '" + s + "' (expected dense, block, fast or oracle)");
}

std::string schedule_names(const BakeryConfig& cfg, const Schedule& w) {
  std::string out;
  for (std::size_t j : w) out += (out.empty() ? "" : ",") + cfg.types[j].name;
  return out.empty() ? "(empty)" : out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << content;
}

struct ShopArgs {
  std::string config;
  std::string demand;

  void attach(CLI::App* cmd) {
    cmd->add_option("config", config, "Shop configuration (JSON)")->required();
    cmd->add_option("--demand", demand, "Daily demand document overriding the quantities");
  }

  BakeryConfig load() const {
    BakeryConfig cfg = load_shop(config);
    if (!demand.empty()) load_demand(cfg, demand);
    return cfg;
  }
};

std::string trajectory_json(const BakeryConfig& cfg, const ProductIndexing& idx,
                            const std::vector<std::vector<double>>& xs) {
  using nlohmann::json;
  json doc;
  doc["unit"] = "min";
  doc["events"] = json::array();
  for (const std::string& m : cfg.machine_names) {
    doc["events"].push_back(m + ".start");
    doc["events"].push_back(m + ".end");
  }
  doc["products"] = json::array();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    doc["products"].push_back({{"product", k + 1},
                               {"type", cfg.types[idx.type_of[k]].name},
                               {"batch", idx.batch_of[k] + 1},
                               {"x", xs[k]}});
  }
  return doc.dump(2) + "\n";
}

int report_result(std::ostream& out, const MakespanResult& r) {
  out << "status: " << to_string(r.status) << "\n";
  switch (r.status) {
    case MakespanStatus::kInfeasible:
      if (r.witness) out << "witness: " << r.witness->describe() << "\n";
      return kInfeasible;
    case MakespanStatus::kEmpty:
      out << "makespan: 0 min (degenerate: empty demand)\n";
      return kOk;
    case MakespanStatus::kDecoupled:
      out << "makespan: -inf (last event unconstrained by the first)\n";
      return kOk;
    case MakespanStatus::kFeasible:
      out << "makespan: " << minutes(r.makespan.value()) << "\n";
      return kOk;
  }
  return kOk;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const ShopArgs& shop, std::ostream& out, std::ostream& err) {
  const BakeryConfig cfg = shop.load();
  const std::vector<ConfigIssue> issues = validate_config(cfg);
  if (!issues.empty()) {
    err << shop.config << ": " << issues.size() << " violation(s)\n";
    for (const ConfigIssue& i : issues) err << "  " << i.describe(cfg) << "\n";
    return kInvalidInput;
  }
  std::size_t q = 0;
  std::size_t b = 0;
  for (const ProductType& t : cfg.types) {
    q += t.quantity;
    b += batch_count(t);
  }
  out << shop.config << ": valid (" << cfg.machines() << " machines, " << cfg.type_count() << " types, Q = " << q
      << " products in B = " << b << " batches)\n";
  return kOk;
}

// ---------------------------------------------------------------- makespan

struct MakespanArgs {
  ShopArgs shop;
  std::string schedule;
  std::string method = "block";
  std::string trajectory;
  std::size_t dense_max = kDefaultDenseMaxDimension;
};

int cmd_makespan(const MakespanArgs& a, std::ostream& out) {
  const BakeryConfig cfg = a.shop.load();
  require_valid(cfg);
  const SolverKind method = parse_method(a.method);
  if (!a.trajectory.empty() && method != SolverKind::kDense) {
    throw InvalidInput("--trajectory is only supported with --method dense (got '" + a.method + "')");
  }
  const Schedule w = a.schedule.empty() ? active_types(cfg) : parse_schedule(cfg, a.schedule);
  require_schedule(cfg, w);

  const Clock::time_point t0 = Clock::now();
  const ScheduleEvaluator eval(cfg, method, a.dense_max);
  const double setup = seconds_since(t0);
  const Clock::time_point t1 = Clock::now();
  const MakespanResult r = eval(w, !a.trajectory.empty());
  const double solve = seconds_since(t1);

  out << "schedule: " << schedule_names(cfg, w) << "\n";
  out << "method: " << to_string(method) << "\n";
  const int code = report_result(out, r);
  out << "time: setup " << duration(setup) << ", solve " << duration(solve) << "\n";
  if (!a.trajectory.empty() && r.trajectory) {
    const ProductIndexing idx = index_products(cfg, w);
    if (!w.empty()) {
      const std::size_t bad = check_trajectory(bakery_instance(cfg, w), *r.trajectory, 1e-6).size() +
                              bakery_invariant_violations(cfg, idx, *r.trajectory).size();
      out << "trajectory: " << r.trajectory->size() << " products, " << bad << " violations\n";
    }
    write_file(a.trajectory, trajectory_json(cfg, idx, *r.trajectory));
    out << "trajectory written to " << a.trajectory << "\n";
  }
  return code;
}

// ---------------------------------------------------------------- optimize

struct OptimizeArgs {
  ShopArgs shop;
  std::string method = "fast";
  double budget_seconds = 0.0;
  std::uint64_t max_permutations = 3628800;
  std::size_t threads = 0;
  std::string table;
  std::size_t dense_max = kDefaultDenseMaxDimension;
};

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  const BakeryConfig cfg = a.shop.load();
  require_valid(cfg);
  SearchOptions opt;
  opt.method = parse_method(a.method);
  opt.budget_seconds = a.budget_seconds;
  opt.max_permutations = a.max_permutations;
  opt.threads = a.threads;
  opt.keep_table = !a.table.empty();
  opt.dense_max_dimension = a.dense_max;
  const SearchResult r = exhaustive_search(cfg, opt);

  out << "method: " << to_string(opt.method) << "\n";
  out << "schedules evaluated: " << r.evaluated << "\n";
  int code = kOk;
  switch (r.status) {
    case MakespanStatus::kEmpty:
      out << "status: empty\nmakespan: 0 min (degenerate: empty demand)\n";
      break;
    case MakespanStatus::kInfeasible:
      out << "status: infeasible (no schedule satisfies the windows)\n";
      code = kInfeasible;
      break;
    default:
      out << "status: feasible\nbest schedule: " << schedule_names(cfg, r.best) << "\n";
      out << "makespan: " << minutes(r.best_makespan.value()) << "\n";
  }
  out << "time: setup " << duration(r.timings.setup_seconds) << ", search " << duration(r.timings.search_seconds)
      << "\n";
  if (!a.table.empty()) {
    std::ostringstream csv;
    csv << "schedule,status,makespan_min\n";
    for (const ScheduleRow& row : r.table) {
      csv << '"' << schedule_names(cfg, row.schedule) << "\"," << to_string(row.status) << ",";
      if (row.status == MakespanStatus::kFeasible) csv << row.makespan.value();
      csv << "\n";
    }
    write_file(a.table, csv.str());
    out << "table written to " << a.table << "\n";
  }
  return code;
}

// ---------------------------------------------------------------- gantt

struct GanttArgs {
  ShopArgs shop;
  std::string schedule;
  std::string out_path;
  std::string format = "json";
  std::size_t dense_max = kDefaultDenseMaxDimension;
};

int cmd_gantt(const GanttArgs& a, std::ostream& out) {
  const BakeryConfig cfg = a.shop.load();
  require_valid(cfg);
  if (a.format != "json" && a.format != "svg") throw InvalidInput("--format must be json or svg");
  const Schedule w = a.schedule.empty() ? active_types(cfg) : parse_schedule(cfg, a.schedule);
  const ScheduleEvaluator eval(cfg, SolverKind::kDense, a.dense_max);
  const MakespanResult r = eval(w, true);
  if (r.status == MakespanStatus::kInfeasible) return report_result(out, r);

  const ProductIndexing idx = index_products(cfg, w);
  std::vector<GanttRecord> records = gantt_records(cfg, idx, *r.trajectory);
  const double makespan = r.makespan.value();
  if (a.format == "svg") records = merge_batches(cfg, records);
  write_file(a.out_path, a.format == "json" ? gantt_json(cfg, w, records, makespan)
                                            : gantt_svg(cfg, records, makespan));
  if (w.empty()) {
    out << "empty demand: empty chart, makespan 0 min (degenerate)\n";
  } else {
    out << "schedule: " << schedule_names(cfg, w) << "\nmakespan: " << minutes(makespan) << "\n";
  }
  out << records.size() << " bars written to " << a.out_path << "\n";
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  ShopArgs shop;
  std::string methods = "fast,block,dense,oracle";
  std::size_t repeats = 3;
  std::size_t schedules = 5;
  std::uint64_t seed = 1;
  double full_search_limit = 60.0;
  std::size_t dense_max = kDefaultDenseMaxDimension;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const BakeryConfig cfg = a.shop.load();
  require_valid(cfg);
  const Schedule active = active_types(cfg);
  if (active.empty()) {
    out << "empty demand: nothing to benchmark (degenerate)\n";
    return kOk;
  }
  std::size_t q = 0;
  for (std::size_t j : active) q += cfg.types[j].quantity;

  std::vector<SolverKind> methods;
  {
    std::stringstream ss(a.methods);
    std::string tok;
    while (std::getline(ss, tok, ',')) methods.push_back(parse_method(tok));
  }
  if (methods.empty()) throw InvalidInput("--methods is empty");

  std::vector<SolverKind> usable;
  for (SolverKind m : methods) {
    if (m == SolverKind::kDense && q * cfg.event_dimension() > a.dense_max) {
      out << "dense: skipped, M_v would be " << q * cfg.event_dimension() << " square (cap " << a.dense_max
          << ", see --dense-max)\n";
      continue;
    }
    usable.push_back(m);
  }
  if (usable.empty()) throw InvalidInput("no method left to benchmark");

  std::mt19937_64 rng(a.seed);
  std::vector<Schedule> sample;
  Schedule w = active;
  for (std::size_t i = 0; i < std::max<std::size_t>(a.schedules, 1); ++i) {
    sample.push_back(w);
    std::shuffle(w.begin(), w.end(), rng);
  }

  std::vector<std::unique_ptr<ScheduleEvaluator>> evals;
  std::vector<double> setup;
  for (SolverKind m : usable) {
    const Clock::time_point t0 = Clock::now();
    evals.push_back(std::make_unique<ScheduleEvaluator>(cfg, m, a.dense_max));
    setup.push_back(seconds_since(t0));
  }

  // Values first: every method must agree on every sampled schedule.
  std::vector<std::vector<double>> times(usable.size());
  for (const Schedule& s : sample) {
    std::vector<MakespanResult> rs;
    for (const auto& e : evals) rs.push_back((*e)(s));
    for (std::size_t i = 1; i < rs.size(); ++i) {
      const bool fa = rs[0].status != MakespanStatus::kInfeasible;
      const bool fb = rs[i].status != MakespanStatus::kInfeasible;
      if (fa != fb || (fa && rs[0].makespan != rs[i].makespan)) {
        err << "methods disagree on schedule " << schedule_names(cfg, s) << ":\n";
        for (std::size_t m = 0; m < rs.size(); ++m) {
          err << "  " << to_string(usable[m]) << ": " << to_string(rs[m].status) << " "
              << to_string(rs[m].makespan) << "\n";
        }
        return kMethodsDisagree;
      }
    }
  }
  out << "all methods agree on " << sample.size() << " schedules\n";

  for (std::size_t r = 0; r < a.repeats; ++r) {
    for (const Schedule& s : sample) {
      for (std::size_t m = 0; m < evals.size(); ++m) {
        const Clock::time_point t0 = Clock::now();
        (void)(*evals[m])(s);
        times[m].push_back(seconds_since(t0));
      }
    }
  }

  const std::uint64_t perms = factorial(active.size());
  out << "Q = " << q << ", J = " << active.size() << ", " << perms << " schedules\n";
  out << std::left << std::setw(8) << "method" << std::setw(12) << "setup" << std::setw(14) << "mean/sched"
      << std::setw(14) << "median/sched" << "full search\n";
  std::optional<double> fast_median;
  std::optional<double> block_median;
  for (std::size_t m = 0; m < usable.size(); ++m) {
    std::vector<double> t = times[m];
    std::sort(t.begin(), t.end());
    const double median = t[t.size() / 2];
    double mean = 0.0;
    for (double v : t) mean += v;
    mean /= double(t.size());
    if (usable[m] == SolverKind::kFast) fast_median = median;
    if (usable[m] == SolverKind::kBlock) block_median = median;

    std::string full;
    const double estimate = median * double(perms);
    if (estimate <= a.full_search_limit) {
      SearchOptions opt;
      opt.method = usable[m];
      opt.dense_max_dimension = a.dense_max;
      opt.max_permutations = perms;
      const SearchResult sr = exhaustive_search(cfg, opt);
      full = duration(sr.timings.setup_seconds + sr.timings.search_seconds) + " (measured)";
    } else {
      full = duration(estimate) + " (estimated)";
    }
    out << std::left << std::setw(8) << to_string(usable[m]) << std::setw(12) << duration(setup[m])
        << std::setw(14) << duration(mean) << std::setw(14) << duration(median) << full << "\n";
  }
  if (fast_median && block_median) {
    out << "fast vs block speedup per schedule: " << std::setprecision(4) << *block_median / *fast_median << "x\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- sldi

struct SldiArgs {
  std::string path;
  std::string method = "block";
  std::string trajectory;
  bool flow_shop = false;
};

int cmd_sldi(const SldiArgs& a, std::ostream& out) {
  const SldiInstance inst = load_sldi(a.path);
  validate_instance(inst, a.flow_shop);
  const SolverKind method = parse_method(a.method);
  if (method == SolverKind::kFast) throw InvalidInput("the fast method only applies to shop schedules");
  if (!a.trajectory.empty() && method != SolverKind::kDense) {
    throw InvalidInput("--trajectory is only supported with --method dense (got '" + a.method + "')");
  }
  const BlockChain chain = make_chain(inst);
  const Clock::time_point t0 = Clock::now();
  MakespanResult r = method == SolverKind::kDense   ? dense_makespan(chain, !a.trajectory.empty())
                     : method == SolverKind::kBlock ? block_makespan(chain)
                                                    : oracle_makespan(chain);
  const double solve = seconds_since(t0);
  out << "n = " << inst.n << ", K = " << inst.steps() << "\nmethod: " << to_string(method) << "\n";
  const int code = report_result(out, r);
  out << "time: " << duration(solve) << "\n";
  if (!a.trajectory.empty() && r.trajectory) {
    nlohmann::json doc;
    doc["x"] = *r.trajectory;
    doc["violations"] = check_trajectory(inst, *r.trajectory, 1e-6).size();
    write_file(a.trajectory, doc.dump(2) + "\n");
    out << "trajectory written to " << a.trajectory << "\n";
  }
  return code;
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  bool scale = false;
  std::size_t types = 3;
  std::size_t quantity = 20;
  std::size_t capacity = 4;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
  BakeryConfig cfg;
  if (a.scale) {
    cfg = scale_shop(a.seed == 1 ? 975 : a.seed);
  } else {
    std::mt19937_64 rng(a.seed);
    RandomShopOptions opt;
    opt.types = a.types;
    opt.max_total_quantity = a.quantity;
    opt.max_capacity = a.capacity;
    cfg = random_shop(rng, opt);
  }
  const std::string doc = shop_to_json(cfg);
  if (a.out_path.empty()) {
    out << doc;
  } else {
    write_file(a.out_path, doc);
    out << "configuration written to " << a.out_path << "\n";
  }
  return kOk;
}

}  // namespace

Schedule parse_schedule(const BakeryConfig& cfg, const std::string& spec) {
  Schedule w;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    auto it = std::find_if(cfg.types.begin(), cfg.types.end(), [&](const ProductType& t) { return t.name == tok; });
    if (it != cfg.types.end()) {
      w.push_back(static_cast<std::size_t>(it - cfg.types.begin()));
      continue;
    }
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0 || v > cfg.types.size()) {
      throw InvalidInput("--schedule: '" + tok + "' is neither a type name nor a type number in 1.." +
                         std::to_string(cfg.types.size()));
    }
    w.push_back(v - 1);
  }
  return w;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max-plus scheduling of permutation flow shops with time windows"};
  app.name("tropsched");
  app.require_subcommand(1);

  ShopArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "Check a shop configuration");
  validate_args.attach(validate);

  MakespanArgs mk;
  CLI::App* makespan = app.add_subcommand("makespan", "Makespan of one schedule");
  mk.shop.attach(makespan);
  makespan->add_option("--schedule", mk.schedule, "Type order, names or 1-based numbers (default: ascending)");
  makespan->add_option("--method", mk.method, "dense | block | fast | oracle")->capture_default_str();
  makespan->add_option("--trajectory", mk.trajectory, "Write the dense trajectory (JSON)");
  makespan->add_option("--dense-max", mk.dense_max, "Largest M_v dimension for dense")->capture_default_str();

  OptimizeArgs opt;
  CLI::App* optimize = app.add_subcommand("optimize", "Exhaustive search over type orders");
  opt.shop.attach(optimize);
  optimize->add_option("--method", opt.method, "dense | block | fast | oracle")->capture_default_str();
  optimize->add_option("--budget-seconds", opt.budget_seconds, "Wall-clock cap (0: none)")->capture_default_str();
  optimize->add_option("--max-permutations", opt.max_permutations, "Cap on J!")->capture_default_str();
  optimize->add_option("--threads", opt.threads, "Worker threads (0: TROPSCHED_THREADS or all cores)");
  optimize->add_option("--table", opt.table, "Write every schedule's makespan (CSV)");
  optimize->add_option("--dense-max", opt.dense_max, "Largest M_v dimension for dense")->capture_default_str();

  GanttArgs gt;
  CLI::App* gantt = app.add_subcommand("gantt", "Gantt chart of the dense trajectory");
  gt.shop.attach(gantt);
  gantt->add_option("--schedule", gt.schedule, "Type order (default: ascending)");
  gantt->add_option("--out", gt.out_path, "Output file")->required();
  gantt->add_option("--format", gt.format, "json | svg")->capture_default_str();
  gantt->add_option("--dense-max", gt.dense_max, "Largest M_v dimension for dense")->capture_default_str();

  BenchArgs bn;
  CLI::App* bench = app.add_subcommand("bench", "Compare the makespan methods");
  bn.shop.attach(bench);
  bench->add_option("--methods", bn.methods, "Comma-separated methods")->capture_default_str();
  bench->add_option("--repeats", bn.repeats, "Timing repeats per schedule")->capture_default_str();
  bench->add_option("--schedules", bn.schedules, "Sampled schedules")->capture_default_str();
  bench->add_option("--seed", bn.seed, "Sampling seed")->capture_default_str();
  bench->add_option("--full-search-limit", bn.full_search_limit,
                    "Run the full search when its estimate is below this many seconds")
      ->capture_default_str();
  bench->add_option("--dense-max", bn.dense_max, "Largest M_v dimension for dense")->capture_default_str();

  SldiArgs sl;
  CLI::App* sldi = app.add_subcommand("sldi", "Solve a general SLDI instance");
  sldi->add_option("instance", sl.path, "SLDI instance (JSON)")->required();
  sldi->add_option("--method", sl.method, "dense | block | oracle")->capture_default_str();
  sldi->add_option("--trajectory", sl.trajectory, "Write the dense trajectory (JSON)");
  sldi->add_flag("--flow-shop", sl.flow_shop, "Also require permutation flow-shop ordering");

  SynthArgs sy;
  CLI::App* synth = app.add_subcommand("synth", "Write a synthetic shop configuration");
  synth->add_flag("--scale", sy.scale, "The Q=975, J=9, B=12 instance");
  synth->add_option("--types", sy.types, "Number of types")->capture_default_str();
  synth->add_option("--quantity", sy.quantity, "Upper bound on total demand")->capture_default_str();
  synth->add_option("--capacity", sy.capacity, "Upper bound on batch capacity")->capture_default_str();
  synth->add_option("--seed", sy.seed, "Random seed")->capture_default_str();
  synth->add_option("--out", sy.out_path, "Output file (default: stdout)");

  std::vector<const char*> argv{"tropsched"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*validate) return cmd_validate(validate_args, out, err);
    if (*makespan) return cmd_makespan(mk, out);
    if (*optimize) return cmd_optimize(opt, out);
    if (*gantt) return cmd_gantt(gt, out);
    if (*bench) return cmd_bench(bn, out, err);
    if (*sldi) return cmd_sldi(sl, out);
    if (*synth) return cmd_synth(sy, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InfeasibleCircuit& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace tropsched::cli
