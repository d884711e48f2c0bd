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

#include "tropsched/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "tropsched/errors.hpp"

namespace tropsched {

namespace {

std::string shape(const MaxPlusMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const MaxPlusMatrix& a, const MaxPlusMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

MaxPlusMatrix::MaxPlusMatrix(std::size_t rows, std::size_t cols, ExtReal fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

MaxPlusMatrix::MaxPlusMatrix(std::initializer_list<std::initializer_list<ExtReal>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("MaxPlusMatrix: ragged row literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

MaxPlusMatrix MaxPlusMatrix::Epsilon(std::size_t rows, std::size_t cols) {
  return MaxPlusMatrix(rows, cols, ExtReal::NegInf());
}

MaxPlusMatrix MaxPlusMatrix::Top(std::size_t rows, std::size_t cols) {
  return MaxPlusMatrix(rows, cols, ExtReal::PosInf());
}

MaxPlusMatrix MaxPlusMatrix::Identity(std::size_t n) {
  MaxPlusMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = Finite(0.0);
  return e;
}

MaxPlusMatrix MaxPlusMatrix::Column(std::span<const double> values) {
  MaxPlusMatrix v(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) v(i, 0) = ExtReal(values[i]);
  return v;
}

ExtReal MaxPlusMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("MaxPlusMatrix::at out of range");
  return (*this)(i, j);
}

void MaxPlusMatrix::set(std::size_t i, std::size_t j, ExtReal v) {
  if (i >= rows_ || j >= cols_) throw DimensionError("MaxPlusMatrix::set out of range");
  (*this)(i, j) = v;
}

MaxPlusMatrix MaxPlusMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                                   std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionError("MaxPlusMatrix::block out of range");
  MaxPlusMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0), cols,
                out.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return out;
}

void MaxPlusMatrix::set_block(std::size_t r0, std::size_t c0, const MaxPlusMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) {
    throw DimensionError("MaxPlusMatrix::set_block out of range");
  }
  for (std::size_t i = 0; i < src.rows_; ++i) {
    std::copy_n(src.entries_.begin() + static_cast<std::ptrdiff_t>(i * src.cols_), src.cols_,
                entries_.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0));
  }
}

bool MaxPlusMatrix::has_pos_inf() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](ExtReal x) { return x.is_pos_inf(); });
}

bool MaxPlusMatrix::has_neg_inf() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](ExtReal x) { return x.is_neg_inf(); });
}

void require_max_valued(const MaxPlusMatrix& a, const std::string& what) {
  if (a.has_pos_inf()) throw DomainError(what + ": +inf entry in an R_max matrix");
}

void require_min_valued(const MaxPlusMatrix& a, const std::string& what) {
  if (a.has_neg_inf()) throw DomainError(what + ": -inf entry in an R_min matrix");
}

MaxPlusMatrix oplus(const MaxPlusMatrix& a, const MaxPlusMatrix& b) {
  require_same_shape(a, b, "oplus");
  MaxPlusMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  }
  return out;
}

MaxPlusMatrix dplus(const MaxPlusMatrix& a, const MaxPlusMatrix& b) {
  require_same_shape(a, b, "dplus");
  MaxPlusMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = dplus(a(i, j), b(i, j));
  }
  return out;
}

MaxPlusMatrix otimes(const MaxPlusMatrix& a, const MaxPlusMatrix& c) {
  if (a.cols() != c.rows()) {
    throw DimensionError("otimes: inner dimensions differ " + shape(a) + " * " + shape(c));
  }
  MaxPlusMatrix out(a.rows(), c.cols(), ExtReal::NegInf());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const ExtReal aik = a(i, k);
      if (aik.is_neg_inf()) continue;  // -inf absorbs the whole term
      for (std::size_t h = 0; h < c.cols(); ++h) {
        out(i, h) = oplus(out(i, h), otimes(aik, c(k, h)));
      }
    }
  }
  return out;
}

MaxPlusMatrix dtimes(const MaxPlusMatrix& a, const MaxPlusMatrix& c) {
  if (a.cols() != c.rows()) {
    throw DimensionError("dtimes: inner dimensions differ " + shape(a) + " * " + shape(c));
  }
  MaxPlusMatrix out(a.rows(), c.cols(), ExtReal::PosInf());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const ExtReal aik = a(i, k);
      if (aik.is_pos_inf()) continue;
      for (std::size_t h = 0; h < c.cols(); ++h) {
        out(i, h) = dplus(out(i, h), dtimes(aik, c(k, h)));
      }
    }
  }
  return out;
}

MaxPlusMatrix otimes_chain(std::initializer_list<const MaxPlusMatrix*> factors) {
  if (factors.size() == 0) throw DimensionError("otimes_chain: no factors");
  auto it = factors.begin();
  MaxPlusMatrix acc = **it;
  for (++it; it != factors.end(); ++it) acc = otimes(acc, **it);
  return acc;
}

MaxPlusMatrix power(const MaxPlusMatrix& a, std::size_t exponent) {
  if (!a.is_square()) throw DimensionError("power: matrix is not square");
  MaxPlusMatrix acc = MaxPlusMatrix::Identity(a.rows());
  for (std::size_t r = 0; r < exponent; ++r) acc = otimes(acc, a);
  return acc;
}

MaxPlusMatrix sharp(const MaxPlusMatrix& a) {
  MaxPlusMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = -a(i, j);
  }
  return out;
}

bool precedes(const MaxPlusMatrix& a, const MaxPlusMatrix& b) {
  require_same_shape(a, b, "precedes");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j) < a(i, j)) return false;
    }
  }
  return true;
}

bool approx_equal(const MaxPlusMatrix& a, const MaxPlusMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!approx_equal(a(i, j), b(i, j), tol)) return false;
    }
  }
  return true;
}

MaxPlusMatrix parse_matrix(const std::string& literal) {
  if (blank(literal)) return {};
  std::vector<std::vector<ExtReal>> rows;
  for (const std::string& row : split(literal, ';')) {
    if (blank(row)) throw InvalidInput("matrix literal: empty row in '" + literal + "'");
    std::vector<ExtReal> entries;
    for (const std::string& tok : split(row, ',')) {
      try {
        entries.push_back(parse_ext_real(tok));
      } catch (const std::invalid_argument& e) {
        throw InvalidInput("matrix literal: " + std::string(e.what()));
      }
    }
    if (!rows.empty() && entries.size() != rows.front().size()) {
      throw InvalidInput("matrix literal: ragged rows in '" + literal + "'");
    }
    rows.push_back(std::move(entries));
  }
  MaxPlusMatrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(i, j) = rows[i][j];
  }
  return out;
}

std::string to_literal(const MaxPlusMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i > 0) os << ';';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) os << ',';
      os << to_string(a(i, j));
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MaxPlusMatrix& a) {
  return os << '[' << to_literal(a) << ']';
}

}  // namespace tropsched
