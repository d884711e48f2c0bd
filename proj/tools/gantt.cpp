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

#include "gantt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace tropsched::cli {

namespace {

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<GanttRecord> gantt_records(const BakeryConfig& cfg, const ProductIndexing& idx,
                                       const std::vector<std::vector<double>>& xs) {
  std::vector<GanttRecord> out;
  out.reserve(idx.products() * cfg.machines());
  for (std::size_t k = 0; k < idx.products(); ++k) {
    for (std::size_t m = 0; m < cfg.machines(); ++m) {
      out.push_back({k, m, idx.type_of[k], idx.batch_of[k], xs[k][2 * m], xs[k][2 * m + 1]});
    }
  }
  return out;
}

std::vector<GanttRecord> merge_batches(const BakeryConfig& cfg, const std::vector<GanttRecord>& records) {
  const std::size_t batch_from = cfg.machines() - 2;
  std::vector<GanttRecord> out;
  std::vector<const GanttRecord*> last(cfg.machines(), nullptr);
  for (const GanttRecord& r : records) {
    const GanttRecord* prev = last[r.machine];
    if (r.machine >= batch_from && prev && prev->type == r.type && prev->batch == r.batch) continue;
    out.push_back(r);
    last[r.machine] = &r;
  }
  return out;
}

std::string gantt_json(const BakeryConfig& cfg, const Schedule& w, const std::vector<GanttRecord>& records,
                       double makespan) {
  using nlohmann::json;
  json doc;
  doc["unit"] = "min";
  doc["makespan"] = makespan;
  doc["schedule"] = json::array();
  for (std::size_t j : w) doc["schedule"].push_back(cfg.types[j].name);
  doc["records"] = json::array();
  for (const GanttRecord& r : records) {
    doc["records"].push_back({{"product", r.product + 1},
                              {"machine", cfg.machine_names[r.machine]},
                              {"type", cfg.types[r.type].name},
                              {"batch", r.batch + 1},
                              {"start", r.start},
                              {"end", r.end}});
  }
  return doc.dump(2) + "\n";
}

std::string gantt_svg(const BakeryConfig& cfg, const std::vector<GanttRecord>& records, double makespan) {
  constexpr double kLeft = 120, kRight = 30, kTop = 30, kLane = 28, kWidth = 1000;
  const double plot = kWidth - kLeft - kRight;
  const std::size_t lanes = cfg.machines();
  const double height = kTop + kLane * double(lanes) + 70;

  double t0 = 0.0;
  double t1 = 0.0;
  if (!records.empty()) {
    t0 = records.front().start;
    t1 = records.front().end;
    for (const GanttRecord& r : records) {
      t0 = std::min(t0, r.start);
      t1 = std::max(t1, r.end);
    }
  }
  const double span = std::max(t1 - t0, 1.0);
  auto px = [&](double t) { return kLeft + (t - t0) / span * plot; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t m = 0; m < lanes; ++m) {
    const double y = kTop + kLane * double(m);
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + kLane * 0.65 << "\" text-anchor=\"end\">"
       << escape_xml(cfg.machine_names[m]) << "</text>\n";
    os << "<line x1=\"" << kLeft << "\" y1=\"" << y + kLane << "\" x2=\"" << kLeft + plot << "\" y2=\"" << y + kLane
       << "\" stroke=\"#ddd\"/>\n";
  }
  const double axis = kTop + kLane * double(lanes);
  for (double h = 0; h * 60.0 <= span + 1e-9; h += 1.0) {
    const double x = px(t0 + h * 60.0);
    os << "<line x1=\"" << x << "\" y1=\"" << kTop << "\" x2=\"" << x << "\" y2=\"" << axis + 4
       << "\" stroke=\"#eee\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << axis + 16 << "\" text-anchor=\"middle\">" << h << " h</text>\n";
  }
  for (const GanttRecord& r : records) {
    const double y = kTop + kLane * double(r.machine) + 3;
    const double w = std::max(px(r.end) - px(r.start), 0.5);
    os << "<rect x=\"" << px(r.start) << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << kLane - 6
       << "\" fill=\"" << kPalette[r.type % std::size(kPalette)] << "\" stroke=\"black\" stroke-width=\"0.3\">"
       << "<title>" << escape_xml(cfg.types[r.type].name) << " batch " << r.batch + 1 << " product "
       << r.product + 1 << ": " << r.start << "-" << r.end << " min</title></rect>\n";
  }
  if (!records.empty()) {
    // records.front() is product 1 on the mixer: the makespan origin.
    const double x = px(records.front().start + makespan);
    os << "<line x1=\"" << x << "\" y1=\"" << kTop - 10 << "\" x2=\"" << x << "\" y2=\"" << axis
       << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
  }
  os << "<text x=\"" << kLeft << "\" y=\"" << kTop - 12 << "\">makespan " << makespan << " min ("
     << std::round(makespan / 6.0) / 10.0 << " h)</text>\n";
  double lx = kLeft;
  for (std::size_t j = 0; j < cfg.types.size(); ++j) {
    os << "<rect x=\"" << lx << "\" y=\"" << axis + 30 << "\" width=\"12\" height=\"12\" fill=\""
       << kPalette[j % std::size(kPalette)] << "\"/>";
    os << "<text x=\"" << lx + 16 << "\" y=\"" << axis + 40 << "\">" << escape_xml(cfg.types[j].name)
       << "</text>\n";
    lx += 24 + 7.0 * double(cfg.types[j].name.size());
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tropsched::cli
