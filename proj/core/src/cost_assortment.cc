// Copyright 2026 The Authors.
//
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

#include "tsa/cost_assortment.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "tsa/errors.h"
#include "tsa/mnl.h"

namespace tsa {
namespace {

double RevCostMask(const Instance& inst, int j, uint64_t mask,
                   const CostMatrix& gamma) {
  double num = 0.0, denom = 1.0, cost = 0.0;
  for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    num += inst.r(i, j) * inst.w(j, i);
    denom += inst.w(j, i);
    cost += gamma(i, j);
  }
  return num / denom - cost;
}

// (size, lexicographic) order on masks, matching SizeThenLexLess on Subsets.
bool MaskSizeThenLexLess(uint64_t a, uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on sorted index lists: at the first differing index the
  // set that contains the smaller index comes first.
  const uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const uint64_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

void CheckGamma(const Instance& inst, const CostMatrix& gamma) {
  if (gamma.rows() != inst.n || gamma.cols() != inst.m) {
    throw std::invalid_argument("cost matrix must be n x m");
  }
}

}  // namespace

double RevCost(const Instance& inst, int j, const Subset& C,
               const CostMatrix& gamma) {
  CheckGamma(inst, gamma);
  double cost = 0.0;
  for (int i : C) cost += gamma(i, j);
  return ExpectedRevenue(inst, j, C) - cost;
}

SubDualResult SubDualExact(const Instance& inst, int j,
                           const CostMatrix& gamma) {
  CheckSize(inst.n <= 20, "SubDualExact: n > 20");
  CheckGamma(inst, gamma);
  double best = 0.0;
  uint64_t best_mask = 0;
  const uint64_t limit = uint64_t{1} << inst.n;
  for (uint64_t mask = 1; mask < limit; ++mask) {
    const double val = RevCostMask(inst, j, mask, gamma);
    if (val > best || (val == best && MaskSizeThenLexLess(mask, best_mask))) {
      best = val;
      best_mask = mask;
    }
  }
  return {best, Subset::FromMask(best_mask), 0.0};
}

SubDualResult ExactSubDualOracle::Solve(const Instance& inst, int j,
                                        const CostMatrix& gamma) const {
  return SubDualExact(inst, j, gamma);
}

ThresholdSubDualOracle::ThresholdSubDualOracle(double delta) : delta_(delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("ThresholdSubDualOracle: delta not in [0,1]");
  }
}

SubDualResult ThresholdSubDualOracle::Solve(const Instance& inst, int j,
                                            const CostMatrix& gamma) const {
  const SubDualResult exact = SubDualExact(inst, j, gamma);
  const double target = (1.0 - delta_) * exact.value;
  const uint64_t limit = uint64_t{1} << inst.n;
  uint64_t pick = exact.argmax.ToMask();
  for (uint64_t mask = 0; mask < limit; ++mask) {
    if (!MaskSizeThenLexLess(mask, pick)) continue;
    if (RevCostMask(inst, j, mask, gamma) >= target) pick = mask;
  }
  return {RevCostMask(inst, j, pick, gamma), Subset::FromMask(pick), delta_};
}

SubDualResult BestSingletonOracle::Solve(const Instance& inst, int j,
                                         const CostMatrix& gamma) const {
  CheckGamma(inst, gamma);
  SubDualResult best;
  best.delta = 1.0;
  for (int i = 0; i < inst.n; ++i) {
    const double val = RevCost(inst, j, Subset{i}, gamma);
    if (val > best.value) {
      best.value = val;
      best.argmax = Subset{i};
    }
  }
  return best;
}

std::unique_ptr<SubDualOracle> MakeOracle(const OracleConfig& config) {
  switch (config.kind) {
    case OracleConfig::Kind::kExact:
      return std::make_unique<ExactSubDualOracle>();
    case OracleConfig::Kind::kThreshold:
      return std::make_unique<ThresholdSubDualOracle>(config.delta);
    case OracleConfig::Kind::kBestSingleton:
      return std::make_unique<BestSingletonOracle>();
  }
  throw std::invalid_argument("MakeOracle: unknown kind");
}

SubDualResult OracleCall(const SubDualOracle& oracle, const Instance& inst,
                         int j, const CostMatrix& gamma) {
  SubDualResult res = oracle.Solve(inst, j, gamma);
  const double check = RevCost(inst, j, res.argmax, gamma);
  if (!(std::abs(check - res.value) <= 1e-9 * (1.0 + std::abs(check)))) {
    throw SolverError("oracle '" + oracle.name() +
                      "' reported a value inconsistent with its set " +
                      res.argmax.ToString());
  }
  res.value = check;
  res.delta = oracle.delta();
  return res;
}

}  // namespace tsa
