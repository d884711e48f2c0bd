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

#include "tropsched/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "tropsched/block_solver.hpp"
#include "tropsched/errors.hpp"
#include "tropsched/oracle.hpp"

namespace tropsched {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t mode_slot(ModeKind kind, std::size_t type) { return 3 * type + static_cast<std::size_t>(kind); }

ModeKind kind_after(const ProductIndexing& idx, std::size_t k) {
  if (k + 1 >= idx.products()) return ModeKind::kSameBatch;
  if (idx.type_of[k + 1] != idx.type_of[k]) return ModeKind::kTypeChange;
  if (idx.batch_of[k + 1] != idx.batch_of[k]) return ModeKind::kNewBatch;
  return ModeKind::kSameBatch;
}

std::vector<ReducedMode> reduce_all(const BakeryConfig& cfg) {
  const std::map<std::string, ModeSpec> modes = build_modes(cfg);
  std::vector<ReducedMode> out;
  out.reserve(3 * cfg.type_count());
  for (std::size_t j = 0; j < cfg.type_count(); ++j) {
    for (ModeKind kind : {ModeKind::kSameBatch, ModeKind::kNewBatch, ModeKind::kTypeChange}) {
      out.push_back(reduce_mode(modes.at(mode_label(kind, j))));
    }
  }
  return out;
}

BlockChain chain_from(const std::vector<ReducedMode>& reduced, std::size_t n, const ProductIndexing& idx) {
  BlockChain chain;
  chain.n = n;
  const std::size_t q = idx.products();
  chain.c.reserve(q);
  chain.i.reserve(q);
  chain.p.reserve(q);
  for (std::size_t k = 0; k < q; ++k) {
    const ReducedMode& r = reduced[mode_slot(kind_after(idx, k), idx.type_of[k])];
    chain.c.push_back(r.c);
    if (k + 1 < q) {
      chain.i.push_back(r.i);
      chain.p.push_back(r.p);
    }
  }
  return chain;
}

std::vector<double> raw(const MaxPlusMatrix& a) {
  std::vector<double> out;
  out.reserve(a.data().size());
  for (ExtReal e : a.data()) out.push_back(e.to_double());
  return out;
}

// out = A ⊗ v for a row-major n x n A without +inf.
void matvec(const double* a, const std::vector<double>& v, std::vector<double>& out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double best = kNegInf;
    const double* row = a + i * n;
    for (std::size_t j = 0; j < n; ++j) best = std::max(best, row[j] + v[j]);
    out[i] = best;
  }
}

void check_schedule(const std::vector<bool>& active, const Schedule& w) {
  std::vector<bool> seen(active.size(), false);
  for (std::size_t j : w) {
    if (j >= active.size() || !active[j] || seen[j]) {
      throw InvalidInput("schedule must be a permutation of the types with positive demand");
    }
    seen[j] = true;
  }
  if (seen != active) throw InvalidInput("schedule must be a permutation of the types with positive demand");
}

}  // namespace

SegmentCache SegmentCache::build(const BakeryConfig& cfg) {
  require_valid(cfg);
  SegmentCache cache;
  cache.n_ = cfg.event_dimension();
  cache.types_ = cfg.type_count();
  cache.active_.assign(cache.types_, false);
  const std::vector<ReducedMode> reduced = reduce_all(cfg);
  const MaxPlusMatrix empty = MaxPlusMatrix::Epsilon(cache.n_);

  cache.segments_.assign(cache.types_, empty);
  cache.c_stars_.assign(cache.types_, empty);
  for (std::size_t j = 0; j < cache.types_; ++j) {
    const ProductType& t = cfg.types[j];
    if (t.quantity == 0) continue;
    cache.active_[j] = true;
    ProductIndexing idx;
    for (std::size_t q = 0; q < t.quantity; ++q) {
      idx.type_of.push_back(j);
      idx.batch_of.push_back(q / t.capacity);
    }
    const BlockFeasibility bf = block_feasible(chain_from(reduced, cache.n_, idx));
    if (!bf.feasible()) {
      if (!cache.witness_) {
        cache.witness_ = InfeasibilityWitness{InfeasibilityWitness::Kind::kType, j, bf.witness->index};
      }
      continue;
    }
    cache.segments_[j] = bf.reduced->m;
    cache.c_stars_[j] = bf.reduced->c_star.front();
  }

  cache.boundaries_.assign(cache.types_ * cache.types_, empty);
  for (std::size_t from = 0; from < cache.types_; ++from) {
    for (std::size_t to = 0; to < cache.types_; ++to) {
      if (from == to || !cache.active_[from] || !cache.active_[to]) continue;
      const MaxPlusMatrix& i_change = reduced[mode_slot(ModeKind::kTypeChange, from)].i;
      cache.boundaries_[from * cache.types_ + to] =
          otimes_chain({&cache.c_stars_[to], &i_change, &cache.c_stars_[from]});
    }
  }
  for (const MaxPlusMatrix& s : cache.segments_) cache.seg_raw_.push_back(raw(s));
  for (const MaxPlusMatrix& b : cache.boundaries_) cache.bnd_raw_.push_back(raw(b));
  return cache;
}

const MaxPlusMatrix& SegmentCache::segment(std::size_t j) const { return segments_.at(j); }

const MaxPlusMatrix& SegmentCache::boundary(std::size_t from, std::size_t to) const {
  if (from >= types_ || to >= types_) throw DimensionError("SegmentCache::boundary: type out of range");
  return boundaries_[from * types_ + to];
}

const MaxPlusMatrix& SegmentCache::c_star(std::size_t j) const { return c_stars_.at(j); }

MaxPlusMatrix fast_product(const SegmentCache& cache, const Schedule& w) {
  check_schedule(cache.active(), w);
  if (w.empty()) throw InvalidInput("fast_product: empty schedule");
  if (!cache.feasible()) {
    throw InfeasibleCircuit(cache.witness()->index, "fast_product: " + cache.witness()->describe());
  }
  MaxPlusMatrix m = cache.segment(w.front());
  for (std::size_t t = 1; t < w.size(); ++t) {
    m = otimes(cache.boundary(w[t - 1], w[t]), m);
    m = otimes(cache.segment(w[t]), m);
  }
  return m;
}

MakespanResult fast_makespan(const SegmentCache& cache, const Schedule& w) {
  MakespanResult result;
  result.solver = SolverKind::kFast;
  check_schedule(cache.active(), w);
  if (w.empty()) {
    result.status = MakespanStatus::kEmpty;
    result.makespan = Finite(0.0);
    return result;
  }
  if (!cache.feasible()) {
    result.status = MakespanStatus::kInfeasible;
    result.witness = cache.witness();
    return result;
  }
  const std::size_t n = cache.n();
  std::vector<double> v(n);
  std::vector<double> tmp(n);
  const double* first = cache.segment_data(w.front());
  for (std::size_t i = 0; i < n; ++i) v[i] = first[i * n];
  for (std::size_t t = 1; t < w.size(); ++t) {
    matvec(cache.boundary_data(w[t - 1], w[t]), v, tmp, n);
    matvec(cache.segment_data(w[t]), tmp, v, n);
  }
  result.makespan = ExtReal(v[n - 1]);
  result.status = result.makespan.is_neg_inf() ? MakespanStatus::kDecoupled : MakespanStatus::kFeasible;
  return result;
}

ScheduleEvaluator::ScheduleEvaluator(const BakeryConfig& cfg, SolverKind method,
                                     std::size_t dense_max_dimension)
    : cfg_(cfg), method_(method), dense_max_dimension_(dense_max_dimension) {
  require_valid(cfg_);
  if (method_ == SolverKind::kFast) {
    cache_ = SegmentCache::build(cfg_);
  } else {
    reduced_ = reduce_all(cfg_);
  }
}

BlockChain ScheduleEvaluator::chain(const Schedule& w) const {
  const ProductIndexing idx = index_products(cfg_, w);
  if (idx.products() == 0) throw InvalidInput("ScheduleEvaluator::chain: the demand is empty");
  if (reduced_.empty()) return chain_from(reduce_all(cfg_), cfg_.event_dimension(), idx);
  return chain_from(reduced_, cfg_.event_dimension(), idx);
}

MakespanResult ScheduleEvaluator::operator()(const Schedule& w, bool want_trajectory) const {
  require_schedule(cfg_, w);
  if (want_trajectory && method_ != SolverKind::kDense) {
    throw InvalidInput(std::string("trajectories are only produced by the dense solver, not '") +
                       to_string(method_) + "'");
  }
  if (w.empty()) {
    MakespanResult r;
    r.status = MakespanStatus::kEmpty;
    r.makespan = Finite(0.0);
    r.solver = method_;
    if (want_trajectory) r.trajectory.emplace();
    return r;
  }
  switch (method_) {
    case SolverKind::kFast:
      return fast_makespan(*cache_, w);
    case SolverKind::kBlock:
      return block_makespan(chain(w));
    case SolverKind::kOracle:
      return oracle_makespan(chain(w));
    case SolverKind::kDense: {
      std::size_t q = 0;
      for (std::size_t j : w) q += cfg_.types[j].quantity;
      if (q * cfg_.event_dimension() > dense_max_dimension_) {
        throw InvalidInput("dense solver refused: M_v would be " + std::to_string(q * cfg_.event_dimension()) +
                           " square, above the cap of " + std::to_string(dense_max_dimension_));
      }
      return dense_makespan(chain(w), want_trajectory);
    }
  }
  throw InvalidInput("unknown method");
}

MakespanResult evaluate_schedule(const BakeryConfig& cfg, const Schedule& w, SolverKind method) {
  return ScheduleEvaluator(cfg, method)(w);
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("TROPSCHED_THREADS")) {
    std::size_t v = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc() && ptr == end && v > 0) return v;
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::uint64_t factorial(std::size_t n) noexcept {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
    f *= i;
  }
  return f;
}

namespace {

bool feasible_status(MakespanStatus s) { return s == MakespanStatus::kFeasible || s == MakespanStatus::kDecoupled; }

// Strict "a is better than b" on (makespan, schedule); infeasible rows lose.
bool better(const ScheduleRow& a, const ScheduleRow& b) {
  const bool fa = feasible_status(a.status);
  const bool fb = feasible_status(b.status);
  if (fa != fb) return fa;
  if (!fa) return a.schedule < b.schedule;
  if (a.makespan != b.makespan) return a.makespan < b.makespan;
  return a.schedule < b.schedule;
}

}  // namespace

SearchResult exhaustive_search(const BakeryConfig& cfg, const SearchOptions& opt) {
  const Clock::time_point t0 = Clock::now();
  require_valid(cfg);
  const std::vector<std::size_t> active = active_types(cfg);
  SearchResult result;
  if (active.empty()) {
    result.status = MakespanStatus::kEmpty;
    result.best_makespan = Finite(0.0);
    return result;
  }
  const std::uint64_t total = factorial(active.size());
  if (total > opt.max_permutations) {
    throw BudgetExceeded(std::to_string(active.size()) + "! = " + std::to_string(total) +
                         " schedules exceed the cap of " + std::to_string(opt.max_permutations));
  }
  if (opt.method == SolverKind::kDense) {
    std::size_t q = 0;
    for (std::size_t j : active) q += cfg.types[j].quantity;
    if (q * cfg.event_dimension() > opt.dense_max_dimension) {
      throw InvalidInput("dense solver refused: M_v would be " + std::to_string(q * cfg.event_dimension()) +
                         " square, above the cap of " + std::to_string(opt.dense_max_dimension));
    }
  }

  const ScheduleEvaluator eval(cfg, opt.method, opt.dense_max_dimension);
  result.timings.setup_seconds = seconds_since(t0);
  const Clock::time_point t1 = Clock::now();
  const bool timed = opt.budget_seconds > 0.0;
  const Clock::time_point deadline =
      t1 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timed ? opt.budget_seconds : 0.0));

  // Task t enumerates the schedules starting with active[t], in lexicographic
  // order, so concatenating task tables gives the global lexicographic order.
  const std::size_t tasks = active.size();
  std::vector<std::optional<ScheduleRow>> task_best(tasks);
  std::vector<std::vector<ScheduleRow>> task_table(tasks);
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::uint64_t> evaluated{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_time{false};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    try {
      for (std::size_t t = next_task++; t < tasks && !stop; t = next_task++) {
        Schedule w;
        w.push_back(active[t]);
        for (std::size_t u = 0; u < tasks; ++u) {
          if (u != t) w.push_back(active[u]);
        }
        std::uint64_t local = 0;
        do {
          const MakespanResult r = eval(w);
          ScheduleRow row{w, r.status, r.makespan};
          if (!task_best[t] || better(row, *task_best[t])) task_best[t] = row;
          if (opt.keep_table) task_table[t].push_back(std::move(row));
          ++local;
          if (timed && (local & 255) == 0 && Clock::now() > deadline) {
            out_of_time = true;
            stop = true;
          }
        } while (!stop && std::next_permutation(w.begin() + 1, w.end()));
        evaluated += local;
        if (timed && Clock::now() > deadline) {
          out_of_time = true;
          stop = true;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };

  const std::size_t threads = std::min(tasks, opt.threads > 0 ? opt.threads : default_thread_count());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (out_of_time) {
    throw BudgetExceeded("search stopped after " + std::to_string(evaluated.load()) + " of " +
                         std::to_string(total) + " schedules: wall-clock budget of " +
                         std::to_string(opt.budget_seconds) + " s exhausted");
  }

  std::optional<ScheduleRow> best;
  for (const auto& b : task_best) {
    if (b && (!best || better(*b, *best))) best = b;
  }
  result.evaluated = evaluated.load();
  result.status = feasible_status(best->status) ? MakespanStatus::kFeasible : MakespanStatus::kInfeasible;
  if (result.status == MakespanStatus::kFeasible) {
    result.best = best->schedule;
    result.best_makespan = best->makespan;
  }
  if (opt.keep_table) {
    for (auto& rows : task_table) {
      for (auto& row : rows) result.table.push_back(std::move(row));
    }
  }
  result.timings.search_seconds = seconds_since(t1);
  return result;
}

}  // namespace tropsched
