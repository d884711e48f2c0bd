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

#include "tropsched/synth.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "tropsched/errors.hpp"

namespace tropsched {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Window [d - s1, d + s2] around the observed difference d; either side may
// be left open.
void window(std::mt19937_64& rng, MaxPlusMatrix& lower, MaxPlusMatrix& upper, std::size_t i, std::size_t j,
            int d, int max_slack, bool force_lower) {
  if (force_lower || coin(rng, 0.7)) lower(i, j) = Finite(d - uniform(rng, 0, max_slack));
  if (coin(rng, 0.5)) upper(i, j) = Finite(d + uniform(rng, 0, max_slack));
}

}  // namespace

SldiInstance random_sldi(std::mt19937_64& rng, const RandomSldiOptions& opt) {
  if (opt.n == 0 || opt.steps == 0) throw InvalidInput("random_sldi: n and steps must be positive");
  const std::size_t n = opt.n;
  const std::size_t steps = opt.steps;

  // Hidden trajectory, non-decreasing in i and k.
  std::vector<std::vector<int>> x(steps, std::vector<int>(n));
  int t = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    int s = t;
    for (std::size_t i = 0; i < n; ++i) {
      s += uniform(rng, 0, 6);
      x[k][i] = s;
    }
    t = x[k][0] + uniform(rng, 0, 6);
  }

  SldiInstance inst;
  inst.n = n;
  for (std::size_t k = 0; k < steps; ++k) {
    ModeSpec m;
    m.label = "m" + std::to_string(k + 1);
    m.a0 = MaxPlusMatrix::Epsilon(n);
    m.a1 = MaxPlusMatrix::Epsilon(n);
    m.b0 = MaxPlusMatrix::Top(n);
    m.b1 = MaxPlusMatrix::Top(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool chain = i == j + 1;
        if (i != j && (chain || coin(rng, opt.density))) {
          window(rng, m.a0, m.b0, i, j, x[k][i] - x[k][j], opt.max_slack, chain);
        }
        if (k + 1 < steps && (i == j || coin(rng, opt.density))) {
          window(rng, m.a1, m.b1, i, j, x[k + 1][i] - x[k][j], opt.max_slack, i == j);
        }
      }
    }
    inst.modes.emplace(m.label, std::move(m));
    inst.sequence.push_back("m" + std::to_string(k + 1));
  }

  if (opt.infeasible) {
    // x_i - x_j >= d + g and x_j - x_i >= -d + g' close a circuit of weight
    // g + g' > 0; each window stays non-empty because its upper side is opened.
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, steps - 1)(rng);
    ModeSpec& m = inst.modes.at(inst.sequence[k]);
    if (n >= 2 && (k + 1 == steps || coin(rng, 0.5))) {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
      if (j >= i) ++j;
      const int d = x[k][i] - x[k][j];
      m.a0(i, j) = Finite(d + uniform(rng, 1, 3));
      m.a0(j, i) = Finite(-d + uniform(rng, 0, 3));
      m.b0(i, j) = ExtReal::PosInf();
      m.b0(j, i) = ExtReal::PosInf();
    } else if (n >= 2) {
      // Across steps: x_j(k) -> x_i(k+1) with weight d_ij + g, back to x_j'(k)
      // through the tight upper bound B¹_ij' = d_ij', and x_j'(k) -> x_j(k)
      // through the tight lower bound A⁰_jj'. The circuit weighs g > 0.
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      std::size_t jp = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
      if (jp >= j) ++jp;
      m.a1(i, j) = Finite(x[k + 1][i] - x[k][j] + uniform(rng, 1, 3));
      m.b1(i, j) = ExtReal::PosInf();
      m.b1(i, jp) = Finite(x[k + 1][i] - x[k][jp]);
      m.a0(j, jp) = Finite(x[k][j] - x[k][jp]);
    } else {
      m.a0(0, 0) = Finite(uniform(rng, 1, 3));
      m.b0(0, 0) = ExtReal::PosInf();
    }
  }
  return inst;
}

BakeryConfig random_shop(std::mt19937_64& rng, const RandomShopOptions& opt) {
  if (opt.machines < kMinMachines) throw InvalidInput("random_shop: too few machines");
  if (opt.types == 0 || opt.max_total_quantity < opt.types) {
    throw InvalidInput("random_shop: need 1 <= types <= max_total_quantity");
  }
  const std::size_t machines = opt.machines;
  BakeryConfig cfg;
  cfg.machine_names = machines == 7 ? default_machine_names() : std::vector<std::string>{};
  for (std::size_t m = cfg.machine_names.size(); m < machines; ++m) {
    cfg.machine_names.push_back("m" + std::to_string(m + 1));
  }
  cfg.clean_time = uniform(rng, 0, opt.max_duration);

  // Split Q among the types, at least one product each.
  const std::size_t total =
      std::uniform_int_distribution<std::size_t>(opt.types, opt.max_total_quantity)(rng);
  std::vector<std::size_t> q(opt.types, 1);
  for (std::size_t r = opt.types; r < total; ++r) {
    ++q[std::uniform_int_distribution<std::size_t>(0, opt.types - 1)(rng)];
  }

  int drain = 0;  // max over types of (C_j - 1) * p_j
  for (std::size_t j = 0; j < opt.types; ++j) {
    ProductType t;
    t.name = "type" + std::to_string(j + 1);
    t.quantity = q[j];
    t.capacity = std::uniform_int_distribution<std::size_t>(1, opt.max_capacity)(rng);
    t.processing.resize(machines);
    int p = 0;
    for (std::size_t m = 1; m + 2 < machines; ++m) {
      const int d = uniform(rng, 1, opt.max_duration);
      t.processing[m] = {double(d), double(d)};
      p = std::max(p, d);
    }
    const int spread = static_cast<int>(t.capacity - 1) * p;
    drain = std::max(drain, spread);
    const int mix = uniform(rng, 1, opt.max_duration);
    t.processing[0] = {double(mix), double(mix + spread + uniform(rng, 0, opt.max_duration))};
    for (std::size_t m = machines - 2; m < machines; ++m) {
      const int lo = uniform(rng, 1, opt.max_duration);
      t.processing[m] = {double(lo), double(lo + uniform(rng, 0, opt.max_duration))};
    }
    cfg.types.push_back(std::move(t));
  }

  cfg.transport.assign(machines - 1, Window{0.0, 0.0});
  {
    const int lo = uniform(rng, 0, opt.max_duration);
    cfg.transport[machines - 3] = {double(lo), double(lo + drain + uniform(rng, 0, opt.max_duration))};
  }
  {
    const int lo = uniform(rng, 0, opt.max_duration);
    cfg.transport[machines - 2] = {double(lo), double(lo + uniform(rng, 0, opt.max_duration))};
  }
  require_valid(cfg);
  return cfg;
}

BakeryConfig scale_shop(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr std::size_t kTypes = 9;
  constexpr std::size_t kCapacity = 90;
  // Six single-batch types of 75 and three two-batch types of 175:
  // Q = 450 + 525 = 975 and B = 6 + 6 = 12.
  const std::size_t quantity[kTypes] = {75, 175, 75, 75, 175, 75, 75, 175, 75};

  BakeryConfig cfg;
  cfg.machine_names = default_machine_names();
  const std::size_t machines = cfg.machines();
  cfg.clean_time = 15;

  int drain = 0;
  for (std::size_t j = 0; j < kTypes; ++j) {
    ProductType t;
    t.name = "type" + std::to_string(j + 1);
    t.quantity = quantity[j];
    t.capacity = kCapacity;
    t.processing.resize(machines);
    int p = 0;
    for (std::size_t m = 1; m + 2 < machines; ++m) {
      const int d = uniform(rng, 1, 3);
      t.processing[m] = {double(d), double(d)};
      p = std::max(p, d);
    }
    const int spread = static_cast<int>(kCapacity - 1) * p;
    drain = std::max(drain, spread);
    const int mix = uniform(rng, 10, 20);
    t.processing[0] = {double(mix), double(mix + spread + uniform(rng, 0, 30))};
    const int proof = uniform(rng, 40, 90);
    t.processing[machines - 2] = {double(proof), double(proof + uniform(rng, 10, 30))};
    const int bake = uniform(rng, 15, 45);
    t.processing[machines - 1] = {double(bake), double(bake + uniform(rng, 0, 5))};
    cfg.types.push_back(std::move(t));
  }
  cfg.transport.assign(machines - 1, Window{0.0, 0.0});
  cfg.transport[machines - 3] = {1.0, double(1 + drain + 30)};
  cfg.transport[machines - 2] = {1.0, 5.0};
  require_valid(cfg);
  return cfg;
}

}  // namespace tropsched
