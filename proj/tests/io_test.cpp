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

#include <random>

#include "tropsched/errors.hpp"
#include "tropsched/io.hpp"
#include "tropsched/synth.hpp"

namespace tropsched {
namespace {

constexpr const char* kShop = R"({
  "machines": [
    {"name": "mix",   "processing": {"rye": [10, 30], "wheat": 12}},
    {"name": "line",  "processing": {"rye": 4, "wheat": [5, 5]}},
    {"name": "proof", "processing": {"rye": [30, 40], "wheat": [25, 35]}},
    {"name": "oven",  "processing": {"rye": [20, 25], "wheat": [18, 22]}}
  ],
  "transport": [[0, 0], [1, 9], [0, 4]],
  "types": [{"name": "rye", "capacity": 2, "quantity": 3}, {"name": "wheat", "capacity": 3}],
  "clean_time": 6
})";

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

TEST(ShopIoTest, ParsesTheDocumentedSchema) {
  const BakeryConfig cfg = parse_shop(kShop, "shop.json");
  EXPECT_EQ(cfg.machine_names, (std::vector<std::string>{"mix", "line", "proof", "oven"}));
  ASSERT_EQ(cfg.types.size(), 2u);
  EXPECT_EQ(cfg.types[0].quantity, 3u);
  EXPECT_EQ(cfg.types[1].quantity, 0u);
  EXPECT_EQ(cfg.types[1].capacity, 3u);
  EXPECT_EQ(cfg.types[1].processing[0], (Window{12, 12}));
  EXPECT_EQ(cfg.types[0].processing[2], (Window{30, 40}));
  EXPECT_EQ(cfg.transport[1], (Window{1, 9}));
  EXPECT_DOUBLE_EQ(cfg.clean_time, 6.0);
  EXPECT_TRUE(validate_config(cfg).empty());
}

TEST(ShopIoTest, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 20; ++t) {
    const BakeryConfig cfg = t == 0 ? scale_shop() : random_shop(rng, {});
    const BakeryConfig back = parse_shop(shop_to_json(cfg));
    EXPECT_EQ(back.machine_names, cfg.machine_names);
    EXPECT_EQ(back.transport, cfg.transport);
    EXPECT_DOUBLE_EQ(back.clean_time, cfg.clean_time);
    ASSERT_EQ(back.types.size(), cfg.types.size());
    for (std::size_t j = 0; j < cfg.types.size(); ++j) {
      EXPECT_EQ(back.types[j].name, cfg.types[j].name);
      EXPECT_EQ(back.types[j].quantity, cfg.types[j].quantity);
      EXPECT_EQ(back.types[j].capacity, cfg.types[j].capacity);
      EXPECT_EQ(back.types[j].processing, cfg.types[j].processing);
    }
  }
}

TEST(ShopIoTest, ErrorsCarryThePath) {
  std::string doc = kShop;
  doc.replace(doc.find(R"("capacity": 3)"), 13, R"("cap": 3)");
  EXPECT_EQ(error_of([&] { parse_shop(doc, "shop.json"); }), "shop.json: types[1].capacity: missing field");

  doc = kShop;
  doc.replace(doc.find(R"("wheat": 12)"), 11, R"("wheat": [12])");
  EXPECT_NE(error_of([&] { parse_shop(doc, "s"); }).find("s: machines[0].processing.wheat: expected [min, max]"),
            std::string::npos);

  doc = kShop;
  doc.replace(doc.find(R"(, "wheat": [5, 5])"), 17, "");
  EXPECT_NE(error_of([&] { parse_shop(doc, "s"); }).find("missing window for type 'wheat'"), std::string::npos);

  doc = kShop;
  doc.replace(doc.find(R"("quantity": 3)"), 13, R"("quantity": -3)");
  EXPECT_NE(error_of([&] { parse_shop(doc, "s"); }).find("types[0].quantity: expected a non-negative integer"),
            std::string::npos);

  EXPECT_NE(error_of([] { parse_shop("{ not json", "bad.json"); }).find("bad.json"), std::string::npos);
  EXPECT_THROW(load_shop("/nonexistent/shop.json"), InvalidInput);
}

TEST(DemandIoTest, ReplacesQuantities) {
  BakeryConfig cfg = parse_shop(kShop);
  apply_demand(cfg, R"({"wheat": 5})");
  EXPECT_EQ(cfg.types[0].quantity, 0u);
  EXPECT_EQ(cfg.types[1].quantity, 5u);
  apply_demand(cfg, R"({"demand": {"rye": 2, "wheat": 1}})");
  EXPECT_EQ(cfg.types[0].quantity, 2u);
  EXPECT_EQ(cfg.types[1].quantity, 1u);
  EXPECT_NE(error_of([&] { apply_demand(cfg, R"({"spelt": 1})", "d.json"); }).find("d.json: spelt: unknown product type"),
            std::string::npos);
}

TEST(SldiIoTest, RoundTripAndErrors) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 20; ++t) {
    RandomSldiOptions opt;
    opt.n = 1 + t % 4;
    const SldiInstance inst = random_sldi(rng, opt);
    const SldiInstance back = parse_sldi(sldi_to_json(inst));
    EXPECT_EQ(back.n, inst.n);
    EXPECT_EQ(back.sequence, inst.sequence);
    ASSERT_EQ(back.modes.size(), inst.modes.size());
    for (const auto& [label, m] : inst.modes) {
      const ModeSpec& b = back.modes.at(label);
      EXPECT_EQ(b.a0, m.a0);
      EXPECT_EQ(b.a1, m.a1);
      EXPECT_EQ(b.b0, m.b0);
      EXPECT_EQ(b.b1, m.b1);
    }
  }
  const std::string bad = R"({"n": 1, "modes": {"m": {"a0": "0", "a1": "x", "b0": "0", "b1": "0"}},
                              "sequence": ["m"]})";
  EXPECT_NE(error_of([&] { parse_sldi(bad, "i.json"); }).find("i.json: modes.m.a1"), std::string::npos);
}

}  // namespace
}  // namespace tropsched
