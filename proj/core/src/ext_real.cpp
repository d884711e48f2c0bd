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

#include "tropsched/ext_real.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tropsched {

ExtReal::ExtReal(double value) {
  if (std::isnan(value)) throw std::invalid_argument("ExtReal: NaN is not an extended real");
  if (std::isinf(value)) {
    kind_ = value > 0 ? Kind::kPosInf : Kind::kNegInf;
    return;
  }
  kind_ = Kind::kFinite;
  value_ = value;
}

double ExtReal::value() const {
  if (!is_finite()) throw std::logic_error("ExtReal::value() on an infinite element");
  return value_;
}

double ExtReal::to_double() const noexcept {
  switch (kind_) {
    case Kind::kNegInf:
      return -std::numeric_limits<double>::infinity();
    case Kind::kPosInf:
      return std::numeric_limits<double>::infinity();
    default:
      return value_;
  }
}

bool approx_equal(ExtReal a, ExtReal b, double tol) noexcept {
  if (a.kind() != b.kind()) return false;
  if (!a.is_finite()) return true;
  return std::fabs(a.value_unchecked() - b.value_unchecked()) <= tol;
}

std::string to_string(ExtReal x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "+inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x.value_unchecked());
  if (ec != std::errc()) return std::to_string(x.value_unchecked());
  return std::string(buf, end);
}

ExtReal parse_ext_real(const std::string& token) {
  std::size_t b = token.find_first_not_of(" \t\r\n");
  std::size_t e = token.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) throw std::invalid_argument("empty extended-real token");
  const std::string t = token.substr(b, e - b + 1);
  if (t == "-inf") return ExtReal::NegInf();
  if (t == "+inf" || t == "inf") return ExtReal::PosInf();
  double v = 0.0;
  const char* first = t.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw std::invalid_argument("invalid extended-real token '" + t + "'");
  }
  return Finite(v);
}

std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << to_string(x); }

}  // namespace tropsched
