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

#include <cmath>
#include <limits>
#include <random>

#include "test_util.hpp"
#include "tropsched/errors.hpp"
#include "tropsched/ext_real.hpp"
#include "tropsched/matrix.hpp"
#include "tropsched/star.hpp"

namespace tropsched {
namespace {

using testing::brute_star;
using testing::from_dense;
using testing::random_gamma_matrix;
using testing::random_matrix;
using testing::to_dense;

const ExtReal kNeg = ExtReal::NegInf();
const ExtReal kPos = ExtReal::PosInf();

ExtReal random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int p = pick(rng);
  if (p == 0) return kNeg;
  if (p == 1) return kPos;
  return Finite(pick(rng) - 4);
}

// ---------- scalars

TEST(ExtRealTest, ScalarExamples) {
  EXPECT_EQ(otimes(Finite(3), Finite(4)), Finite(7));
  EXPECT_EQ(otimes(kNeg, kPos), kNeg);
  EXPECT_EQ(dtimes(kNeg, kPos), kPos);
  EXPECT_EQ(dplus(Finite(2), Finite(5)), Finite(2));
  EXPECT_EQ(oplus(Finite(2), Finite(5)), Finite(5));
}

TEST(ExtRealTest, IeeeInfinitiesMapOntoTags) {
  EXPECT_TRUE(ExtReal(-std::numeric_limits<double>::infinity()).is_neg_inf());
  EXPECT_TRUE(ExtReal(std::numeric_limits<double>::infinity()).is_pos_inf());
  EXPECT_THROW(ExtReal(std::nan("")), std::invalid_argument);
  EXPECT_THROW((void)kPos.value(), std::logic_error);
}

TEST(ExtRealTest, TotalOrder) {
  EXPECT_LT(kNeg, Finite(-1e300));
  EXPECT_LT(Finite(1e300), kPos);
  EXPECT_EQ(-kNeg, kPos);
  EXPECT_EQ(-Finite(3), Finite(-3));
}

TEST(ExtRealTest, TokenRoundTrip) {
  for (ExtReal x : {kNeg, kPos, Finite(0), Finite(-2.5), Finite(17)}) {
    EXPECT_EQ(parse_ext_real(to_string(x)), x) << to_string(x);
  }
  EXPECT_EQ(parse_ext_real(" -inf "), kNeg);
  EXPECT_EQ(parse_ext_real("+inf"), kPos);
  EXPECT_THROW(parse_ext_real("abc"), std::invalid_argument);
  EXPECT_THROW(parse_ext_real(""), std::invalid_argument);
}

TEST(ExtRealTest, SemiringLawsOnRandomTriples) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 5000; ++t) {
    const ExtReal a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ(oplus(oplus(a, b), c), oplus(a, oplus(b, c)));
    EXPECT_EQ(dplus(dplus(a, b), c), dplus(a, dplus(b, c)));
    EXPECT_EQ(oplus(a, b), oplus(b, a));
    EXPECT_EQ(dplus(a, b), dplus(b, a));
    EXPECT_EQ(oplus(a, a), a);
    EXPECT_EQ(dplus(a, a), a);
    EXPECT_EQ(otimes(otimes(a, b), c), otimes(a, otimes(b, c)));
    EXPECT_EQ(dtimes(dtimes(a, b), c), dtimes(a, dtimes(b, c)));
    EXPECT_EQ(otimes(a, oplus(b, c)), oplus(otimes(a, b), otimes(a, c)));
    EXPECT_EQ(dtimes(a, dplus(b, c)), dplus(dtimes(a, b), dtimes(a, c)));
    EXPECT_EQ(oplus(a, kNeg), a);
    EXPECT_EQ(dplus(a, kPos), a);
    EXPECT_EQ(otimes(a, Finite(0)), a);
    EXPECT_EQ(otimes(a, kNeg), kNeg);
    EXPECT_EQ(dtimes(a, kPos), kPos);
  }
}

// ---------- matrices

TEST(MatrixTest, EntrywiseExamples) {
  const MaxPlusMatrix a{{0, 1}, {2, 3}};
  const MaxPlusMatrix b{{3, 0}, {1, 2}};
  EXPECT_EQ(oplus(a, b), (MaxPlusMatrix{{3, 1}, {2, 3}}));
  EXPECT_EQ(dplus(a, b), (MaxPlusMatrix{{0, 0}, {1, 2}}));
  EXPECT_EQ(oplus(MaxPlusMatrix::Epsilon(2), a), a);
  EXPECT_EQ(dplus(MaxPlusMatrix::Top(2), a), a);
  EXPECT_THROW(oplus(a, MaxPlusMatrix::Epsilon(2, 3)), DimensionError);
}

TEST(MatrixTest, ProductExamples) {
  const MaxPlusMatrix a{{0, kNeg}, {3, 0}};
  const MaxPlusMatrix x{{1}, {0}};
  EXPECT_EQ(otimes(a, x), (MaxPlusMatrix{{1}, {4}}));
  EXPECT_EQ(otimes(MaxPlusMatrix::Identity(2), a), a);
  EXPECT_EQ(otimes(MaxPlusMatrix::Epsilon(2), a), MaxPlusMatrix::Epsilon(2));
  EXPECT_THROW(otimes(x, x), DimensionError);
}

TEST(MatrixTest, SharpExamples) {
  const MaxPlusMatrix a{{1, kPos}, {kNeg, 0}};
  EXPECT_EQ(sharp(a), (MaxPlusMatrix{{-1, kPos}, {kNeg, 0}}));
  EXPECT_EQ(sharp(MaxPlusMatrix::Top(3)), MaxPlusMatrix::Epsilon(3));
  const MaxPlusMatrix r{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(sharp(r), (MaxPlusMatrix{{-1, -4}, {-2, -5}, {-3, -6}}));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const MaxPlusMatrix m = random_matrix(rng, 3, 4, 0.6, -9, 9);
    EXPECT_EQ(sharp(sharp(m)), m);
  }
}

TEST(MatrixTest, OrderMatchesEntrywiseComparison) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const MaxPlusMatrix a = random_matrix(rng, 2, 2, 0.7, 0, 3);
    const MaxPlusMatrix b = random_matrix(rng, 2, 2, 0.7, 0, 3);
    bool entrywise = true;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) entrywise = entrywise && a(i, j) <= b(i, j);
    EXPECT_EQ(precedes(a, b), entrywise);
    EXPECT_EQ(oplus(a, b) == b, entrywise);
  }
}

TEST(MatrixTest, ProductIsAssociativeAndDistributes) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const MaxPlusMatrix a = random_matrix(rng, 3, 2, 0.7, -5, 5);
    const MaxPlusMatrix b = random_matrix(rng, 2, 4, 0.7, -5, 5);
    const MaxPlusMatrix b2 = random_matrix(rng, 2, 4, 0.7, -5, 5);
    const MaxPlusMatrix c = random_matrix(rng, 4, 3, 0.7, -5, 5);
    EXPECT_EQ(otimes(otimes(a, b), c), otimes(a, otimes(b, c)));
    EXPECT_EQ(otimes(a, oplus(b, b2)), oplus(otimes(a, b), otimes(a, b2)));
    EXPECT_EQ(otimes_chain({&a, &b, &c}), otimes(a, otimes(b, c)));
  }
}

TEST(MatrixTest, LiteralRoundTrip) {
  EXPECT_EQ(parse_matrix("0,-inf;3,0"), (MaxPlusMatrix{{0, kNeg}, {3, 0}}));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    MaxPlusMatrix m = random_matrix(rng, 3, 2, 0.6, -9, 9);
    if (t % 2) m(0, 0) = kPos;
    EXPECT_EQ(parse_matrix(to_literal(m)), m);
  }
  EXPECT_THROW(parse_matrix("1,2;3"), InvalidInput);
  EXPECT_THROW(parse_matrix("1,x"), InvalidInput);
}

TEST(MatrixTest, BlockAccess) {
  MaxPlusMatrix m = MaxPlusMatrix::Epsilon(4);
  const MaxPlusMatrix s{{1, 2}, {3, 4}};
  m.set_block(2, 1, s);
  EXPECT_EQ(m.block(2, 1, 2, 2), s);
  EXPECT_EQ(m(0, 0), kNeg);
  EXPECT_THROW(m.set_block(3, 3, s), DimensionError);
  EXPECT_THROW((void)m.at(4, 0), DimensionError);
}

// ---------- star

TEST(StarTest, Examples) {
  const StarResult empty = kleene_star(MaxPlusMatrix::Epsilon(3));
  ASSERT_TRUE(empty.ok());
  EXPECT_EQ(*empty.star, MaxPlusMatrix::Identity(3));

  const StarResult neg = kleene_star({{kNeg, 2}, {-3, kNeg}});
  ASSERT_TRUE(neg.ok());
  EXPECT_EQ(*neg.star, (MaxPlusMatrix{{0, 2}, {-3, 0}}));

  EXPECT_FALSE(kleene_star({{kNeg, 2}, {-1, kNeg}}).ok());
  const StarResult loop = kleene_star({{1}});
  EXPECT_FALSE(loop.ok());
  EXPECT_EQ(loop.witness, 0u);

  EXPECT_TRUE(in_gamma(MaxPlusMatrix::Epsilon(2)));
  EXPECT_TRUE(in_gamma({{kNeg, 2}, {-3, kNeg}}));
  EXPECT_FALSE(in_gamma({{kNeg, 2}, {-1, kNeg}}));
}

TEST(StarTest, RejectsBadInput) {
  EXPECT_THROW(kleene_star(MaxPlusMatrix::Epsilon(2, 3)), DimensionError);
  EXPECT_THROW(kleene_star({{kPos}}), DomainError);
  EXPECT_THROW(star_or_throw({{1}}), InfeasibleCircuit);
}

TEST(StarTest, ZeroWeightCircuitIsFeasible) {
  const StarResult r = kleene_star({{kNeg, 4}, {-4, kNeg}});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(*r.star, (MaxPlusMatrix{{0, 4}, {-4, 0}}));
}

// Path enumeration decides feasibility and values on random small graphs,
// including ones with positive circuits.
TEST(StarTest, AgreesWithPathEnumeration) {
  std::mt19937_64 rng(6);
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 1 + t % 5;
    const MaxPlusMatrix a = random_matrix(rng, n, n, 0.45, -8, 3);
    const auto oracle = brute_star(to_dense(a));
    const StarResult r = kleene_star(a);
    ASSERT_EQ(r.ok(), oracle.has_value()) << a;
    if (!r.ok()) {
      ++infeasible;
      continue;
    }
    ++feasible;
    EXPECT_EQ(*r.star, from_dense(*oracle)) << a;
  }
  EXPECT_GT(feasible, 100);
  EXPECT_GT(infeasible, 100);
}

TEST(StarTest, WitnessLiesOnPositiveCircuit) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 4;
    const MaxPlusMatrix a = random_matrix(rng, n, n, 0.5, -6, 3);
    const StarResult r = kleene_star(a);
    if (r.ok()) continue;
    // Restricted to the witness's strongly connected component, the graph
    // must still hold a positive circuit.
    testing::Dense d = to_dense(a);
    const std::size_t w = r.witness;
    ASSERT_LT(w, n);
    // Reachability by Warshall on booleans.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) reach[j][i] = d[i][j] != testing::kNegInf;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    for (std::size_t v = 0; v < n; ++v) {
      if (reach[w][v] && reach[v][w]) continue;
      for (std::size_t u = 0; u < n; ++u) d[v][u] = d[u][v] = testing::kNegInf;
    }
    EXPECT_FALSE(brute_star(d).has_value()) << a << " witness " << w;
  }
}

TEST(StarTest, FixpointAndIdempotence) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const MaxPlusMatrix a = random_gamma_matrix(rng, 1 + t % 6, 0.5);
    const MaxPlusMatrix s = star_or_throw(a);
    EXPECT_EQ(oplus(otimes(a, s), MaxPlusMatrix::Identity(a.rows())), s);
    EXPECT_EQ(otimes(s, s), s);
    EXPECT_FALSE(s.has_pos_inf());
    for (std::size_t i = 0; i < s.rows(); ++i) EXPECT_GE(s(i, i), Finite(0));
  }
}

TEST(StarTest, EqualsTruncatedPowerSeries) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 5;
    const MaxPlusMatrix a = random_gamma_matrix(rng, n, 0.6);
    MaxPlusMatrix series = MaxPlusMatrix::Identity(n);
    for (std::size_t i = 1; i < n; ++i) series = oplus(series, power(a, i));
    EXPECT_EQ(star_or_throw(a), series);
  }
}

TEST(BlockStarTest, Examples) {
  const MaxPlusMatrix z{{0}};
  const MaxPlusMatrix e = MaxPlusMatrix::Epsilon(1);
  const BlockStar d = block_star(z, e, e, z);
  EXPECT_EQ(d.top_left, z);
  EXPECT_EQ(d.top_right, e);
  EXPECT_EQ(d.bottom_left, e);
  EXPECT_EQ(d.bottom_right, z);

  const BlockStar one = block_star({{kNeg}}, {{5}}, e, {{kNeg}});
  EXPECT_EQ(one.top_left, z);
  EXPECT_EQ(one.top_right, (MaxPlusMatrix{{5}}));
  EXPECT_EQ(one.bottom_left, e);
  EXPECT_EQ(one.bottom_right, z);
}

TEST(BlockStarTest, EqualsStarOfAssembledMatrix) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 5;
    const MaxPlusMatrix full = random_gamma_matrix(rng, n, 0.5);
    const std::size_t n1 = 1 + t % (n - 1);
    const std::size_t n2 = n - n1;
    const BlockStar b = block_star(full.block(0, 0, n1, n1), full.block(0, n1, n1, n2),
                                   full.block(n1, 0, n2, n1), full.block(n1, n1, n2, n2));
    const MaxPlusMatrix s = from_dense(*brute_star(to_dense(full)));
    EXPECT_EQ(b.top_left, s.block(0, 0, n1, n1));
    EXPECT_EQ(b.top_right, s.block(0, n1, n1, n2));
    EXPECT_EQ(b.bottom_left, s.block(n1, 0, n2, n1));
    EXPECT_EQ(b.bottom_right, s.block(n1, n1, n2, n2));
    EXPECT_EQ(assemble_blocks(full.block(0, 0, n1, n1), full.block(0, n1, n1, n2), full.block(n1, 0, n2, n1),
                              full.block(n1, n1, n2, n2)),
              full);
  }
}

// x ⪯ A♯ ⊠ y  ⇔  A ⊗ x ⪯ y.
TEST(ResiduationTest, BothMembershipTestsAgree) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(-6, 6);
  int holds = 0;
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + t % 4;
    const MaxPlusMatrix a = random_matrix(rng, n, n, 0.5, -4, 4);
    MaxPlusMatrix x(n, 1), y(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      x(i, 0) = Finite(val(rng));
      y(i, 0) = Finite(val(rng) + 4);
    }
    const bool lhs = precedes(x, dtimes(sharp(a), y));
    const bool rhs = precedes(otimes(a, x), y);
    EXPECT_EQ(lhs, rhs);
    holds += lhs;
  }
  EXPECT_GT(holds, 200);
}

}  // namespace
}  // namespace tropsched
