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

#ifndef TROPSCHED_EXT_REAL_HPP_
#define TROPSCHED_EXT_REAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tropsched {

// Default tolerance for comparing finite values that did not come from
// integer data.
inline constexpr double kDefaultTolerance = 1e-9;

// An element of R ∪ {-inf, +inf}.
//
// The infinities are explicit tags rather than IEEE infinities: the max-plus
// product maps (-inf) + (+inf) to -inf while the min-plus product maps it to
// +inf, and IEEE arithmetic would produce NaN for both. A finite ExtReal never
// holds NaN.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { kNegInf = 0, kFinite = 1, kPosInf = 2 };

  // Defaults to -inf, the neutral element of max.
  constexpr ExtReal() noexcept = default;

  // Accepts IEEE infinities and maps them onto the tags. Throws
  // std::invalid_argument on NaN.
  ExtReal(double value);  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal NegInf() noexcept { return ExtReal(Kind::kNegInf, 0.0); }
  static constexpr ExtReal PosInf() noexcept { return ExtReal(Kind::kPosInf, 0.0); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::kFinite; }
  constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::kNegInf; }
  constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::kPosInf; }

  // Finite payload. Throws std::logic_error on an infinite value.
  double value() const;
  // Finite payload without the check; meaningless for infinities.
  constexpr double value_unchecked() const noexcept { return value_; }

  // IEEE view: -inf/+inf map to the IEEE infinities.
  double to_double() const noexcept;

  // Total order: -inf < every finite value < +inf.
  constexpr std::strong_ordering operator<=>(const ExtReal& other) const noexcept {
    if (kind_ != other.kind_) return kind_ <=> other.kind_;
    if (kind_ != Kind::kFinite) return std::strong_ordering::equal;
    if (value_ < other.value_) return std::strong_ordering::less;
    if (value_ > other.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  constexpr bool operator==(const ExtReal& other) const noexcept {
    return (*this <=> other) == 0;
  }

  // Arithmetic negation; swaps the infinities.
  constexpr ExtReal operator-() const noexcept {
    switch (kind_) {
      case Kind::kNegInf:
        return PosInf();
      case Kind::kPosInf:
        return NegInf();
      default:
        return ExtReal(Kind::kFinite, -value_);
    }
  }

 private:
  constexpr ExtReal(Kind kind, double value) noexcept : kind_(kind), value_(value) {}

  friend constexpr ExtReal Finite(double v) noexcept;

  Kind kind_ = Kind::kNegInf;
  double value_ = 0.0;
};

// Unchecked finite constructor for hot paths; `v` must be a finite double.
constexpr ExtReal Finite(double v) noexcept { return ExtReal(ExtReal::Kind::kFinite, v); }

// a ⊕ b = max(a, b)
constexpr ExtReal oplus(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }

// a ⊞ b = min(a, b)
constexpr ExtReal dplus(ExtReal a, ExtReal b) noexcept { return b < a ? b : a; }

// a ⊗ b = a + b, with -inf absorbing (so -inf ⊗ +inf = -inf).
constexpr ExtReal otimes(ExtReal a, ExtReal b) noexcept {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::NegInf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::PosInf();
  return Finite(a.value_unchecked() + b.value_unchecked());
}

// a ⊠ b = a + b, with +inf absorbing (so -inf ⊠ +inf = +inf).
constexpr ExtReal dtimes(ExtReal a, ExtReal b) noexcept {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::PosInf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::NegInf();
  return Finite(a.value_unchecked() + b.value_unchecked());
}

// Equality with absolute tolerance on finite values; infinities must match.
bool approx_equal(ExtReal a, ExtReal b, double tol = kDefaultTolerance) noexcept;

// "-inf", "+inf" or the shortest round-tripping decimal of the value.
std::string to_string(ExtReal x);

// Parses "-inf", "+inf", "inf" or a decimal number. Throws
// std::invalid_argument on anything else.
ExtReal parse_ext_real(const std::string& token);

std::ostream& operator<<(std::ostream& os, ExtReal x);

}  // namespace tropsched

#endif  // TROPSCHED_EXT_REAL_HPP_
