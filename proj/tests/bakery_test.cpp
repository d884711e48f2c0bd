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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tropsched/bakery.hpp"
#include "tropsched/errors.hpp"
#include "tropsched/star.hpp"
#include "tropsched/synth.hpp"

namespace tropsched {
namespace {

// Seven machines; mixer [10,30], no-wait line 2..5 fixed, proofer [30,40],
// oven [20,25]. Only the links into proofer and oven have slack.
ProductType toy_type(const std::string& name, std::size_t quantity, std::size_t capacity, double scale = 1.0) {
  ProductType t;
  t.name = name;
  t.quantity = quantity;
  t.capacity = capacity;
  t.processing = {{10 * scale, 30 * scale}, {2 * scale, 2 * scale}, {3 * scale, 3 * scale},
                  {4 * scale, 4 * scale},   {5 * scale, 5 * scale}, {30 * scale, 40 * scale},
                  {20 * scale, 25 * scale}};
  return t;
}

BakeryConfig toy_shop() {
  BakeryConfig cfg;
  cfg.machine_names = default_machine_names();
  cfg.transport = {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 30}, {0, 3}};
  cfg.types = {toy_type("wheat", 1, 1), toy_type("rye", 3, 2, 1.5)};
  cfg.clean_time = 7;
  return cfg;
}

bool has_issue(const BakeryConfig& cfg, const std::string& needle) {
  for (const ConfigIssue& i : validate_config(cfg)) {
    if (i.describe(cfg).find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(BakeryConfigTest, ToyShopIsValid) {
  const BakeryConfig cfg = toy_shop();
  EXPECT_TRUE(validate_config(cfg).empty());
  EXPECT_EQ(cfg.event_dimension(), 14u);
  EXPECT_EQ(default_machine_names().size(), 7u);
}

TEST(BakeryConfigTest, IssuesNameMachineAndType) {
  BakeryConfig cfg = toy_shop();
  cfg.types[1].processing[5] = {50, 40};
  EXPECT_TRUE(has_issue(cfg, "machine 6 (proofing), type 2 (rye): processing window min 50 > max 40"));
  EXPECT_THROW(require_valid(cfg), InvalidInput);

  cfg = toy_shop();
  cfg.types[0].processing[2] = {3, 4};
  EXPECT_TRUE(has_issue(cfg, "machine 3 (rounding), type 1 (wheat): no-wait"));

  cfg = toy_shop();
  cfg.transport[1] = {0, 1};
  EXPECT_TRUE(has_issue(cfg, "machine 2 (dividing): transport to the next machine must be exactly 0"));

  cfg = toy_shop();
  cfg.types[1].capacity = 0;
  EXPECT_TRUE(has_issue(cfg, "type 2 (rye): capacity must be at least 1"));

  cfg = toy_shop();
  cfg.types[1].name = "wheat";
  EXPECT_TRUE(has_issue(cfg, "duplicate type name"));

  cfg = toy_shop();
  cfg.clean_time = -1;
  EXPECT_TRUE(has_issue(cfg, "cleaning time"));

  cfg = toy_shop();
  cfg.transport.pop_back();
  EXPECT_TRUE(has_issue(cfg, "transport windows"));

  cfg = toy_shop();
  cfg.types[0].processing[0].lo = -1;
  EXPECT_TRUE(has_issue(cfg, "is negative"));
}

TEST(IndexingTest, TwoTypeExample) {
  BakeryConfig cfg = toy_shop();
  cfg.types[0].quantity = 1;
  cfg.types[0].capacity = 1;
  cfg.types[1].quantity = 3;
  cfg.types[1].capacity = 2;
  const ProductIndexing idx = index_products(cfg, {1, 0});
  EXPECT_EQ(idx.type_of, (std::vector<std::size_t>{1, 1, 1, 0}));
  EXPECT_EQ(idx.batch_of, (std::vector<std::size_t>{0, 0, 1, 0}));
  EXPECT_EQ(idx.total_batches, 3u);
  EXPECT_EQ(build_sequence(idx), (std::vector<std::string>{"a2", "b2", "c2", "a1"}));
}

TEST(IndexingTest, BatchSizes) {
  ProductType t = toy_type("x", 7, 3);
  EXPECT_EQ(batch_count(t), 3u);
  EXPECT_EQ(batch_size(t, 0), 3u);
  EXPECT_EQ(batch_size(t, 2), 1u);
  t.quantity = 6;
  EXPECT_EQ(batch_count(t), 2u);
  EXPECT_EQ(batch_size(t, 1), 3u);  // divisible demand: the last batch is full
  t.quantity = 3;
  EXPECT_EQ(batch_count(t), 1u);
  t.quantity = 0;
  EXPECT_EQ(batch_count(t), 0u);
}

TEST(IndexingTest, BatchesAreContiguousAndSized) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const BakeryConfig cfg = random_shop(rng, {});
    Schedule w = active_types(cfg);
    std::shuffle(w.begin(), w.end(), rng);
    const ProductIndexing idx = index_products(cfg, w);
    std::size_t q = 0, b = 0;
    for (std::size_t j : w) {
      q += cfg.types[j].quantity;
      b += (cfg.types[j].quantity + cfg.types[j].capacity - 1) / cfg.types[j].capacity;
    }
    ASSERT_EQ(idx.products(), q);
    EXPECT_EQ(idx.total_batches, b);
    std::size_t k = 0;
    for (std::size_t j : w) {
      const ProductType& ty = cfg.types[j];
      for (std::size_t p = 0; p < ty.quantity; ++p, ++k) {
        EXPECT_EQ(idx.type_of[k], j);
        EXPECT_EQ(idx.batch_of[k], p / ty.capacity);
      }
    }
  }
}

TEST(SequenceTest, DegenerateShapes) {
  BakeryConfig cfg = toy_shop();
  cfg.types[0].quantity = 0;
  cfg.types[1].quantity = 3;
  cfg.types[1].capacity = 3;
  EXPECT_EQ(build_sequence(index_products(cfg, {1})), (std::vector<std::string>{"a2", "a2", "a2"}));

  cfg.types[0].quantity = 1;
  cfg.types[1].quantity = 1;
  EXPECT_EQ(build_sequence(index_products(cfg, {0, 1})), (std::vector<std::string>{"c1", "a2"}));
}

TEST(ModesTest, Structure) {
  const BakeryConfig cfg = toy_shop();
  const auto modes = build_modes(cfg);
  EXPECT_EQ(modes.size(), 6u);
  const std::size_t n = cfg.event_dimension();
  for (std::size_t j = 0; j < 2; ++j) {
    const ModeSpec& a = modes.at(mode_label(ModeKind::kSameBatch, j));
    const ModeSpec& b = modes.at(mode_label(ModeKind::kNewBatch, j));
    const ModeSpec& c = modes.at(mode_label(ModeKind::kTypeChange, j));
    EXPECT_EQ(c.b1, MaxPlusMatrix::Top(n));
    EXPECT_EQ(b.b1, MaxPlusMatrix::Top(n));
    EXPECT_EQ(a.a0, c.a0);
    EXPECT_EQ(a.b0, c.b0);
    // Processing windows sit on (exit, entry) of each machine.
    for (std::size_t m = 0; m < cfg.machines(); ++m) {
      EXPECT_EQ(a.a0(2 * m + 1, 2 * m), Finite(cfg.types[j].processing[m].lo));
      EXPECT_EQ(a.b0(2 * m + 1, 2 * m), Finite(cfg.types[j].processing[m].hi));
    }
    // c differs from b only in the cleaning entry.
    MaxPlusMatrix diff = c.a1;
    EXPECT_EQ(diff(0, 1), Finite(cfg.clean_time));
    diff(0, 1) = b.a1(0, 1);
    EXPECT_EQ(diff, b.a1);
  }
}

TEST(ModesTest, ZeroCleaningMakesTypeChangeAndNewBatchDifferOnlyAtCleaningEntry) {
  BakeryConfig cfg = toy_shop();
  cfg.clean_time = 0;
  const auto modes = build_modes(cfg);
  const ModeSpec& b = modes.at("b1");
  const ModeSpec& c = modes.at("c1");
  EXPECT_EQ(b.a1(0, 1), ExtReal::NegInf());
  EXPECT_EQ(c.a1(0, 1), Finite(0));
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t j = 0; j < 14; ++j)
      if (i != 0 || j != 1) EXPECT_EQ(b.a1(i, j), c.a1(i, j)) << i << "," << j;
}

// The modes carry no explicit A1(i,i) >= 0 entries; permutation ordering is
// implied. In the star of M_v, event i of product k+1 is at least event i of
// product k for every event from the mixer exit on.
TEST(ModesTest, PermutationOrderingIsImplied) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 20; ++t) {
    RandomShopOptions opt;
    opt.max_total_quantity = 8;
    const BakeryConfig cfg = random_shop(rng, opt);
    const Schedule w = active_types(cfg);
    const SldiInstance inst = bakery_instance(cfg, w);
    const std::size_t n = inst.n;
    for (const auto& [label, mode] : inst.modes) {
      for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_GE(mode.a0(i + 1, i), Finite(0)) << label;
    }
    const MaxPlusMatrix s = star_or_throw(assemble_mv(inst));
    for (std::size_t k = 0; k + 1 < inst.steps(); ++k)
      for (std::size_t e = 1; e < n; ++e) EXPECT_GE(s((k + 1) * n + e, k * n + e), Finite(0)) << k << "," << e;
  }
}

TEST(BakeryMakespanTest, SingleProductIsSumOfLowerBounds) {
  BakeryConfig cfg = toy_shop();
  cfg.types[0].quantity = 1;
  cfg.types[1].quantity = 0;
  // 10+2+3+4+5+30+20 processing, 1 transport into the proofer.
  for (SolverKind m : {SolverKind::kDense, SolverKind::kBlock, SolverKind::kOracle}) {
    EXPECT_EQ(bakery_makespan(cfg, {0}, m).makespan, Finite(75)) << to_string(m);
  }
}

TEST(BakeryMakespanTest, ToyShopMethodsAgreeAndOrderMatters) {
  const BakeryConfig cfg = toy_shop();
  for (const Schedule& w : {Schedule{0, 1}, Schedule{1, 0}}) {
    const MakespanResult d = bakery_makespan(cfg, w, SolverKind::kDense, true);
    ASSERT_EQ(d.status, MakespanStatus::kFeasible);
    EXPECT_EQ(bakery_makespan(cfg, w, SolverKind::kBlock).makespan, d.makespan);
    EXPECT_EQ(bakery_makespan(cfg, w, SolverKind::kOracle).makespan, d.makespan);
    const ProductIndexing idx = index_products(cfg, w);
    EXPECT_TRUE(check_trajectory(bakery_instance(cfg, w), *d.trajectory).empty());
    EXPECT_TRUE(bakery_invariant_violations(cfg, idx, *d.trajectory).empty());
  }
}

TEST(BakeryMakespanTest, DoublingDurationsDoublesMakespan) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const BakeryConfig cfg = random_shop(rng, {});
    BakeryConfig twice = cfg;
    for (Window& w : twice.transport) w = {2 * w.lo, 2 * w.hi};
    for (ProductType& ty : twice.types)
      for (Window& w : ty.processing) w = {2 * w.lo, 2 * w.hi};
    twice.clean_time *= 2;
    const Schedule w = active_types(cfg);
    const ExtReal one = bakery_makespan(cfg, w, SolverKind::kBlock).makespan;
    const ExtReal two = bakery_makespan(twice, w, SolverKind::kBlock).makespan;
    EXPECT_EQ(two, Finite(2 * one.value()));
  }
}

TEST(BakeryMakespanTest, ShopInvariantsHoldOnRandomShops) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 40; ++t) {
    RandomShopOptions opt;
    opt.types = 1 + t % 3;
    opt.max_total_quantity = 10;
    const BakeryConfig cfg = random_shop(rng, opt);
    Schedule w = active_types(cfg);
    std::shuffle(w.begin(), w.end(), rng);
    const MakespanResult d = bakery_makespan(cfg, w, SolverKind::kDense, true);
    ASSERT_EQ(d.status, MakespanStatus::kFeasible);
    EXPECT_EQ(bakery_makespan(cfg, w, SolverKind::kOracle).makespan, d.makespan);
    const auto v = bakery_invariant_violations(cfg, index_products(cfg, w), *d.trajectory);
    EXPECT_TRUE(v.empty()) << v.front();
  }
}

TEST(BakeryMakespanTest, InvariantCheckerCatchesTampering) {
  const BakeryConfig cfg = toy_shop();
  const Schedule w{1, 0};
  auto xs = *bakery_makespan(cfg, w, SolverKind::kDense, true).trajectory;
  const ProductIndexing idx = index_products(cfg, w);
  auto broken = xs;
  broken[1][10] += 1;  // batch-mate leaves the proofer-entry in step
  EXPECT_FALSE(bakery_invariant_violations(cfg, idx, broken).empty());
  broken = xs;
  broken[0][3] += 1;  // no-wait machine 2 runs longer
  EXPECT_FALSE(bakery_invariant_violations(cfg, idx, broken).empty());
}

TEST(BakeryMakespanTest, RejectsBadRequests) {
  const BakeryConfig cfg = toy_shop();
  EXPECT_THROW(bakery_makespan(cfg, {0, 0}, SolverKind::kBlock), InvalidInput);
  EXPECT_THROW(bakery_makespan(cfg, {0}, SolverKind::kBlock), InvalidInput);
  EXPECT_THROW(bakery_makespan(cfg, {0, 1}, SolverKind::kBlock, true), InvalidInput);

  BakeryConfig none = cfg;
  for (ProductType& t : none.types) t.quantity = 0;
  EXPECT_TRUE(active_types(none).empty());
  const MakespanResult r = bakery_makespan(none, {}, SolverKind::kDense);
  EXPECT_EQ(r.status, MakespanStatus::kEmpty);
  EXPECT_EQ(r.makespan, Finite(0));
}

TEST(BakeryMakespanTest, EmptyProcessingWindowIsInfeasibleAtValidation) {
  BakeryConfig cfg = toy_shop();
  cfg.types[0].processing[6] = {25, 20};
  EXPECT_THROW(bakery_makespan(cfg, {0, 1}, SolverKind::kBlock), InvalidInput);
}

TEST(BakeryMakespanTest, TightTransportMakesBatchesInfeasible) {
  // A full batch of 3 needs the mixer to drain 3 products through the no-wait
  // line, but they must reach the proofer together within a 0 window.
  BakeryConfig cfg = toy_shop();
  cfg.types[0].quantity = 3;
  cfg.types[0].capacity = 3;
  cfg.types[1].quantity = 0;
  cfg.transport[4] = {0, 0};
  for (SolverKind m : {SolverKind::kDense, SolverKind::kBlock, SolverKind::kOracle}) {
    EXPECT_EQ(bakery_makespan(cfg, {0}, m).status, MakespanStatus::kInfeasible) << to_string(m);
  }
}

}  // namespace
}  // namespace tropsched
