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

#ifndef TROPSCHED_MATRIX_HPP_
#define TROPSCHED_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropsched/ext_real.hpp"

namespace tropsched {

// Dense row-major matrix over R ∪ {-inf, +inf}. Indices are 0-based.
//
// Whether a matrix lives in R_max (no +inf) or R_min (no -inf) is a property
// checked by the operations that need it, not a stored tag.
class MaxPlusMatrix {
 public:
  MaxPlusMatrix() = default;
  // rows x cols, every entry set to `fill`.
  MaxPlusMatrix(std::size_t rows, std::size_t cols, ExtReal fill = ExtReal::NegInf());
  // Row-wise literal; all rows must have the same length.
  MaxPlusMatrix(std::initializer_list<std::initializer_list<ExtReal>> rows);

  // The all -inf matrix (neutral for ⊕, absorbing for ⊗).
  static MaxPlusMatrix Epsilon(std::size_t rows, std::size_t cols);
  static MaxPlusMatrix Epsilon(std::size_t n) { return Epsilon(n, n); }
  // The all +inf matrix (neutral for ⊞).
  static MaxPlusMatrix Top(std::size_t rows, std::size_t cols);
  static MaxPlusMatrix Top(std::size_t n) { return Top(n, n); }
  // Max-plus identity: 0 on the diagonal, -inf elsewhere.
  static MaxPlusMatrix Identity(std::size_t n);
  // Column vector.
  static MaxPlusMatrix Column(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  ExtReal operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  ExtReal& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  // Bounds-checked access.
  ExtReal at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, ExtReal v);

  std::span<const ExtReal> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const ExtReal> data() const noexcept { return entries_; }

  // Copies rows [r0, r0+rows) x cols [c0, c0+cols).
  MaxPlusMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  // Writes `src` with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const MaxPlusMatrix& src);

  bool has_pos_inf() const noexcept;
  bool has_neg_inf() const noexcept;

  bool operator==(const MaxPlusMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtReal> entries_;
};

// Throws DomainError if `a` holds +inf (`what` names the matrix).
void require_max_valued(const MaxPlusMatrix& a, const std::string& what);
// Throws DomainError if `a` holds -inf.
void require_min_valued(const MaxPlusMatrix& a, const std::string& what);

// Entrywise max / min. Throw DimensionError on shape mismatch.
MaxPlusMatrix oplus(const MaxPlusMatrix& a, const MaxPlusMatrix& b);
MaxPlusMatrix dplus(const MaxPlusMatrix& a, const MaxPlusMatrix& b);

// (A ⊗ C)_ih = max_k A_ik ⊗ C_kh.
MaxPlusMatrix otimes(const MaxPlusMatrix& a, const MaxPlusMatrix& c);
// (A ⊠ C)_ih = min_k A_ik ⊠ C_kh.
MaxPlusMatrix dtimes(const MaxPlusMatrix& a, const MaxPlusMatrix& c);

// Product of a chain of factors written left to right.
MaxPlusMatrix otimes_chain(std::initializer_list<const MaxPlusMatrix*> factors);

// Max-plus matrix power; a^0 = Identity.
MaxPlusMatrix power(const MaxPlusMatrix& a, std::size_t exponent);

// Conjugate A♯ = -Aᵀ (infinities swap).
MaxPlusMatrix sharp(const MaxPlusMatrix& a);

// A ⪯ B, i.e. entrywise A_ij <= B_ij.
bool precedes(const MaxPlusMatrix& a, const MaxPlusMatrix& b);

// Entrywise approx_equal.
bool approx_equal(const MaxPlusMatrix& a, const MaxPlusMatrix& b, double tol = kDefaultTolerance);

// Parses the literal text format: rows separated by ';', entries by ',',
// infinities spelled -inf / +inf. Example: "0,-inf;3,0".
MaxPlusMatrix parse_matrix(const std::string& literal);
std::string to_literal(const MaxPlusMatrix& a);

std::ostream& operator<<(std::ostream& os, const MaxPlusMatrix& a);

}  // namespace tropsched

#endif  // TROPSCHED_MATRIX_HPP_
