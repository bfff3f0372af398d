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

// Assortment optimization with per-customer fixed costs of either sign:
//
//   RevCost_j(C, gamma) = R_j(C) - sum_{i in C} gamma_ij
//   SubDual_j(gamma)    = max_C RevCost_j(C, gamma)
//
// This is the separation problem for the exponential constraint family of
// the dual LP. Solvers sit behind SubDualOracle, whose contract is: the
// returned set C satisfies RevCost_j(C) >= (1 - delta) * SubDual_j.

#ifndef TSA_COST_ASSORTMENT_H_
#define TSA_COST_ASSORTMENT_H_

#include <memory>
#include <string>

#include <Eigen/Core>

#include "tsa/instance.h"
#include "tsa/subset.h"

namespace tsa {

// gamma_ij, n x m, any sign.
using CostMatrix = Eigen::MatrixXd;

double RevCost(const Instance& inst, int j, const Subset& C,
               const CostMatrix& gamma);

struct SubDualResult {
  double value = 0.0;  // RevCost of `argmax`
  Subset argmax;
  double delta = 0.0;  // approximation guarantee of the producing oracle
};

// Enumerates all 2^n customer subsets (n <= 20). Value is >= 0 since the
// empty set scores 0. Ties go to the smaller, then lexicographically smaller,
// set.
SubDualResult SubDualExact(const Instance& inst, int j,
                           const CostMatrix& gamma);

class SubDualOracle {
 public:
  virtual ~SubDualOracle() = default;
  virtual SubDualResult Solve(const Instance& inst, int j,
                              const CostMatrix& gamma) const = 0;
  // Guarantee: Solve(...).value >= (1 - delta()) * SubDual_j.
  virtual double delta() const = 0;
  virtual std::string name() const = 0;
};

// delta = 0. Delegates to SubDualExact.
class ExactSubDualOracle final : public SubDualOracle {
 public:
  SubDualResult Solve(const Instance& inst, int j,
                      const CostMatrix& gamma) const override;
  double delta() const override { return 0.0; }
  std::string name() const override { return "exact"; }
};

// Returns the smallest (then lexicographically first) set whose value reaches
// (1 - delta) * SubDual_j. A genuine (1 - delta)-approximate oracle that
// degrades in a controlled way; at delta = 0 it matches the exact oracle.
class ThresholdSubDualOracle final : public SubDualOracle {
 public:
  explicit ThresholdSubDualOracle(double delta);
  SubDualResult Solve(const Instance& inst, int j,
                      const CostMatrix& gamma) const override;
  double delta() const override { return delta_; }
  std::string name() const override { return "threshold"; }

 private:
  double delta_;
};

// Best of the empty set and the n singletons. Only guarantees a nonnegative
// value, i.e. delta = 1. Used to exercise the contract in robustness tests.
class BestSingletonOracle final : public SubDualOracle {
 public:
  SubDualResult Solve(const Instance& inst, int j,
                      const CostMatrix& gamma) const override;
  double delta() const override { return 1.0; }
  std::string name() const override { return "best-singleton"; }
};

struct OracleConfig {
  enum class Kind { kExact, kThreshold, kBestSingleton };
  Kind kind = Kind::kExact;
  double delta = 0.0;  // used by kThreshold
};

std::unique_ptr<SubDualOracle> MakeOracle(const OracleConfig& config);

// Runs `oracle` and checks the returned value against the set it names.
// Throws SolverError if the oracle's reported value disagrees with RevCost.
SubDualResult OracleCall(const SubDualOracle& oracle, const Instance& inst,
                         int j, const CostMatrix& gamma);

}  // namespace tsa

#endif  // TSA_COST_ASSORTMENT_H_
