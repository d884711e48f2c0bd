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

#include "tropsched/star.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "tropsched/errors.hpp"

namespace tropsched {

StarResult kleene_star(const MaxPlusMatrix& a) {
  if (!a.is_square()) throw DimensionError("kleene_star: matrix is not square");
  require_max_valued(a, "kleene_star");
  const std::size_t n = a.rows();

  // The sweep runs on IEEE doubles: without +inf entries only max and
  // (-inf) + finite occur, so no NaN can arise.
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> w(n * n);
  for (std::size_t i = 0; i < n * n; ++i) w[i] = a.data()[i].to_double();

  StarResult result;
  for (std::size_t k = 0; k < n; ++k) {
    const double* row_k = w.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      // No skip on w_ik = -inf: the dense method is the structure-blind
      // baseline and keeps its Θ(n³) cost on every input.
      const double w_ik = w[i * n + k];
      double* row_i = w.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) row_i[j] = std::max(row_i[j], w_ik + row_k[j]);
    }
    // After pivot k every circuit whose largest node is k has been closed,
    // so a positive circuit shows up on the diagonal here before any entry
    // can grow without bound.
    if (w[k * n + k] > 0.0) {
      result.witness = k;
      return result;
    }
  }

  MaxPlusMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = i == j ? std::max(w[i * n + j], 0.0) : w[i * n + j];
      s(i, j) = v == kNegInf ? ExtReal::NegInf() : Finite(v);
    }
  }
  result.star = std::move(s);
  return result;
}

MaxPlusMatrix star_or_throw(const MaxPlusMatrix& a) {
  StarResult r = kleene_star(a);
  if (!r.ok()) {
    throw InfeasibleCircuit(r.witness,
                            "positive-weight circuit through node " + std::to_string(r.witness));
  }
  return std::move(*r.star);
}

bool in_gamma(const MaxPlusMatrix& a) { return kleene_star(a).ok(); }

MaxPlusMatrix assemble_blocks(const MaxPlusMatrix& a, const MaxPlusMatrix& b, const MaxPlusMatrix& c,
                              const MaxPlusMatrix& d) {
  if (!a.is_square() || !d.is_square() || b.rows() != a.rows() || b.cols() != d.cols() ||
      c.rows() != d.rows() || c.cols() != a.cols()) {
    throw DimensionError("assemble_blocks: inconsistent block shapes");
  }
  const std::size_t n1 = a.rows();
  const std::size_t n2 = d.rows();
  MaxPlusMatrix m(n1 + n2, n1 + n2);
  m.set_block(0, 0, a);
  m.set_block(0, n1, b);
  m.set_block(n1, 0, c);
  m.set_block(n1, n1, d);
  return m;
}

BlockStar block_star(const MaxPlusMatrix& a, const MaxPlusMatrix& b, const MaxPlusMatrix& c,
                     const MaxPlusMatrix& d) {
  // Shape validation.
  (void)assemble_blocks(a, b, c, d);
  const MaxPlusMatrix as = star_or_throw(a);
  const MaxPlusMatrix ds = star_or_throw(d);
  const MaxPlusMatrix as_b_ds = otimes_chain({&as, &b, &ds});
  const MaxPlusMatrix ds_c_as = otimes_chain({&ds, &c, &as});
  const MaxPlusMatrix top = star_or_throw(otimes(as_b_ds, otimes(c, as)));
  const MaxPlusMatrix bottom = star_or_throw(otimes(ds_c_as, otimes(b, ds)));
  return BlockStar{
      .top_left = otimes_chain({&as, &top, &as}),
      .top_right = otimes(as_b_ds, bottom),
      .bottom_left = otimes(ds_c_as, top),
      .bottom_right = otimes_chain({&ds, &bottom, &ds}),
  };
}

}  // namespace tropsched
