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

#include "tropsched/block_solver.hpp"

#include "tropsched/errors.hpp"
#include "tropsched/star.hpp"

namespace tropsched {

BlockFeasibility block_feasible(const BlockChain& chain) {
  validate_chain(chain);
  const std::size_t steps = chain.steps();
  BlockFeasibility out;

  ReducedChain r;
  r.c_star.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    StarResult s = kleene_star(chain.c[k]);
    if (!s.ok()) {
      out.witness = InfeasibilityWitness{InfeasibilityWitness::Kind::kStep, k, s.witness};
      return out;
    }
    r.c_star.push_back(std::move(*s.star));
  }

  const std::size_t links = steps - 1;
  r.pp.resize(links);
  r.ii.resize(links);
  r.cc.resize(links);
  r.cc_star.resize(links);
  for (std::size_t i = 0; i < links; ++i) {
    r.pp[i] = otimes_chain({&r.c_star[i], &chain.p[i], &r.c_star[i + 1]});
    r.ii[i] = otimes_chain({&r.c_star[i + 1], &chain.i[i], &r.c_star[i]});
  }

  // Backward nest: ℂ_i = ℙ_i ℂ_{i+1}* 𝕀_i, where ℂ_{K-1}* is the identity.
  for (std::size_t i = links; i-- > 0;) {
    r.cc[i] = i + 1 < links ? otimes_chain({&r.pp[i], &r.cc_star[i + 1], &r.ii[i]})
                            : otimes(r.pp[i], r.ii[i]);
    StarResult s = kleene_star(r.cc[i]);
    if (!s.ok()) {
      out.witness = InfeasibilityWitness{InfeasibilityWitness::Kind::kReducedStep, i, s.witness};
      return out;
    }
    r.cc_star[i] = std::move(*s.star);
  }

  // 𝕄 right to left, starting from ℂ_0*.
  if (links == 0) {
    r.m = r.c_star[0];
  } else {
    MaxPlusMatrix acc = r.cc_star[0];
    for (std::size_t i = 0; i < links; ++i) {
      acc = otimes(r.ii[i], acc);
      if (i + 1 < links) acc = otimes(r.cc_star[i + 1], acc);
    }
    r.m = std::move(acc);
  }
  out.reduced = std::move(r);
  return out;
}

MakespanResult block_makespan(const BlockChain& chain) {
  BlockFeasibility f = block_feasible(chain);
  MakespanResult result;
  result.solver = SolverKind::kBlock;
  if (!f.feasible()) {
    result.status = MakespanStatus::kInfeasible;
    result.witness = f.witness;
    return result;
  }
  result.makespan = f.reduced->m(chain.n - 1, 0);
  result.status = result.makespan.is_neg_inf() ? MakespanStatus::kDecoupled : MakespanStatus::kFeasible;
  return result;
}

MakespanResult block_makespan(const SldiInstance& inst) { return block_makespan(make_chain(inst)); }

CornerBlocks corner_blocks(const BlockChain& chain) {
  BlockFeasibility f = block_feasible(chain);
  if (!f.feasible()) {
    throw InfeasibleCircuit(f.witness->index, "corner_blocks: " + f.witness->describe());
  }
  const ReducedChain& r = *f.reduced;
  if (chain.steps() == 1) return CornerBlocks{r.c_star[0], r.m};
  return CornerBlocks{otimes_chain({&r.c_star[0], &r.cc_star[0], &r.c_star[0]}), r.m};
}

}  // namespace tropsched
