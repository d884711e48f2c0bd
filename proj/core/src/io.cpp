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

#include "tropsched/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tropsched/errors.hpp"

namespace tropsched {

namespace {

using json = nlohmann::json;

// Carries the source name and JSON path for error messages.
class Cursor {
 public:
  Cursor(const json& node, std::string source, std::string path)
      : node_(node), source_(std::move(source)), path_(std::move(path)) {}

  const json& node() const { return node_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput(source_ + ": " + (path_.empty() ? "document" : path_) + ": " + what);
  }

  Cursor field(const std::string& key) const {
    if (!node_.is_object()) fail("expected an object");
    auto it = node_.find(key);
    if (it == node_.end()) Cursor(node_, source_, join(key)).fail("missing field");
    return Cursor(*it, source_, join(key));
  }

  bool has(const std::string& key) const { return node_.is_object() && node_.contains(key); }

  Cursor at(std::size_t i) const { return Cursor(node_.at(i), source_, path_ + "[" + std::to_string(i) + "]"); }

  const json& array() const {
    if (!node_.is_array()) fail("expected an array");
    return node_;
  }

  const json& object() const {
    if (!node_.is_object()) fail("expected an object");
    return node_;
  }

  Cursor child(const std::string& key, const json& value) const { return Cursor(value, source_, join(key)); }

  std::string string() const {
    if (!node_.is_string()) fail("expected a string");
    return node_.get<std::string>();
  }

  double number() const {
    if (!node_.is_number()) fail("expected a number");
    return node_.get<double>();
  }

  std::size_t count() const {
    if (!node_.is_number_integer() || node_.get<long long>() < 0) fail("expected a non-negative integer");
    return node_.get<std::size_t>();
  }

  Window window() const {
    if (node_.is_number()) return {number(), number()};
    if (!node_.is_array() || node_.size() != 2) fail("expected [min, max] or a number");
    return {at(0).number(), at(1).number()};
  }

 private:
  std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json& node_;
  std::string source_;
  std::string path_;
};

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(source + ": " + e.what());
  }
}

json window_json(const Window& w) { return json::array({w.lo, w.hi}); }

void apply_demand_object(BakeryConfig& cfg, const Cursor& demand) {
  std::map<std::string, std::size_t> by_name;
  for (std::size_t j = 0; j < cfg.types.size(); ++j) by_name.emplace(cfg.types[j].name, j);
  for (ProductType& t : cfg.types) t.quantity = 0;
  for (const auto& [name, value] : demand.object().items()) {
    const Cursor q = demand.child(name, value);
    auto it = by_name.find(name);
    if (it == by_name.end()) q.fail("unknown product type");
    cfg.types[it->second].quantity = q.count();
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BakeryConfig parse_shop(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Cursor root(doc, source, "");
  root.object();
  BakeryConfig cfg;

  const Cursor types = root.field("types");
  for (std::size_t j = 0; j < types.array().size(); ++j) {
    const Cursor t = types.at(j);
    ProductType pt;
    pt.name = t.field("name").string();
    pt.capacity = t.field("capacity").count();
    pt.quantity = t.has("quantity") ? t.field("quantity").count() : 0;
    cfg.types.push_back(std::move(pt));
  }

  const Cursor machines = root.field("machines");
  for (std::size_t m = 0; m < machines.array().size(); ++m) {
    const Cursor mc = machines.at(m);
    cfg.machine_names.push_back(mc.field("name").string());
    const Cursor proc = mc.field("processing");
    proc.object();
    for (ProductType& t : cfg.types) {
      if (!proc.has(t.name)) proc.fail("missing window for type '" + t.name + "'");
      t.processing.push_back(proc.field(t.name).window());
    }
    for (const auto& [name, value] : proc.node().items()) {
      bool known = false;
      for (const ProductType& t : cfg.types) known = known || t.name == name;
      if (!known) proc.child(name, value).fail("unknown product type");
    }
  }

  const Cursor transport = root.field("transport");
  for (std::size_t m = 0; m < transport.array().size(); ++m) cfg.transport.push_back(transport.at(m).window());

  cfg.clean_time = root.has("clean_time") ? root.field("clean_time").number() : 0.0;
  if (root.has("demand")) apply_demand_object(cfg, root.field("demand"));
  return cfg;
}

BakeryConfig load_shop(const std::filesystem::path& path) { return parse_shop(read_file(path), path.string()); }

std::string shop_to_json(const BakeryConfig& cfg) {
  json doc;
  doc["machines"] = json::array();
  for (std::size_t m = 0; m < cfg.machines(); ++m) {
    json proc = json::object();
    for (const ProductType& t : cfg.types) {
      if (m < t.processing.size()) proc[t.name] = window_json(t.processing[m]);
    }
    doc["machines"].push_back({{"name", cfg.machine_names[m]}, {"processing", proc}});
  }
  doc["transport"] = json::array();
  for (const Window& w : cfg.transport) doc["transport"].push_back(window_json(w));
  doc["types"] = json::array();
  for (const ProductType& t : cfg.types) {
    doc["types"].push_back({{"name", t.name}, {"capacity", t.capacity}, {"quantity", t.quantity}});
  }
  doc["clean_time"] = cfg.clean_time;
  return doc.dump(2) + "\n";
}

void apply_demand(BakeryConfig& cfg, const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Cursor root(doc, source, "");
  apply_demand_object(cfg, root.has("demand") ? root.field("demand") : root);
}

void load_demand(BakeryConfig& cfg, const std::filesystem::path& path) {
  apply_demand(cfg, read_file(path), path.string());
}

SldiInstance parse_sldi(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  const Cursor root(doc, source, "");
  SldiInstance inst;
  inst.n = root.field("n").count();
  const Cursor modes = root.field("modes");
  for (const auto& [label, value] : modes.object().items()) {
    const Cursor mc = modes.child(label, value);
    ModeSpec m;
    m.label = label;
    auto matrix = [&](const char* key) {
      const Cursor f = mc.field(key);
      try {
        return parse_matrix(f.string());
      } catch (const InvalidInput& e) {
        f.fail(e.what());
      }
    };
    m.a0 = matrix("a0");
    m.a1 = matrix("a1");
    m.b0 = matrix("b0");
    m.b1 = matrix("b1");
    inst.modes.emplace(label, std::move(m));
  }
  const Cursor seq = root.field("sequence");
  for (std::size_t k = 0; k < seq.array().size(); ++k) inst.sequence.push_back(seq.at(k).string());
  return inst;
}

SldiInstance load_sldi(const std::filesystem::path& path) { return parse_sldi(read_file(path), path.string()); }

std::string sldi_to_json(const SldiInstance& inst) {
  json doc;
  doc["n"] = inst.n;
  doc["modes"] = json::object();
  for (const auto& [label, m] : inst.modes) {
    doc["modes"][label] = {{"a0", to_literal(m.a0)},
                           {"a1", to_literal(m.a1)},
                           {"b0", to_literal(m.b0)},
                           {"b1", to_literal(m.b1)}};
  }
  doc["sequence"] = inst.sequence;
  return doc.dump(2) + "\n";
}

}  // namespace tropsched
