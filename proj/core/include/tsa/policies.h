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

// Customer-side policies and exact benchmarks.
//
// In every variant the platform first offers each customer an assortment of
// suppliers; each customer's MNL choice lands it in that supplier's backlog.
// Afterwards supplier j is shown its best sub-assortment of its backlog and
// the platform earns g_j(backlog_j).
//
//   adaptive   customers processed one at a time, next customer and offer
//              chosen after seeing earlier choices
//   fixed      same, but customers follow a given order
//   static     all offers fixed up front

#ifndef TSA_POLICIES_H_
#define TSA_POLICIES_H_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tsa/instance.h"
#include "tsa/lp.h"
#include "tsa/rounding.h"
#include "tsa/subset.h"

namespace tsa {

struct BacklogAssignment {
  // Per customer: chosen supplier, or kOutside.
  std::vector<int> choice;

  std::vector<Subset> Backlogs(int m) const;
};

struct SupplierOutcome {
  Subset backlog;
  Subset offered;  // best sub-assortment of the backlog
  double value = 0.0;
};

struct PolicyStep {
  int customer = 0;
  Subset offered;
  int choice = -1;  // supplier or kOutside
};

struct PolicyOutcome {
  double revenue = 0.0;
  std::vector<SupplierOutcome> suppliers;
  std::vector<PolicyStep> trace;
};

PolicyOutcome FinalizeSuppliers(const Instance& inst,
                                const BacklogAssignment& assignment);

// Decision recorded for a DP state: which customer to process and the
// supplier assortment (bit mask) to offer.
struct DpDecision {
  int customer = -1;
  uint32_t assortment = 0;
};

struct DpResult {
  double value = 0.0;
  // State code -> decision. A state gives each customer a base-(m+2) digit:
  // 0 unprocessed, 1 outside, 2 + j chose supplier j; customer 0 is the
  // least significant digit.
  std::unordered_map<uint64_t, DpDecision> policy;
};

// Optimal adaptive policy by memoized recursion. n <= 4, m <= 4.
DpResult ExactDpAtar(const Instance& inst);

// Optimal policy when customers are processed in `order`. n <= 4, m <= 4.
double ExactDpFtar(const Instance& inst, const std::vector<int>& order);

// Best static offer profile, with the expectation taken over all customer
// choice profiles. n <= 3, m <= 3.
double ExactStar(const Instance& inst);

// Randomized static policy driven by a marginal LP solution: customer i is
// offered an assortment drawn from MnlDistribution(x_i, u_i).
class RandomizedStaticPolicy {
 public:
  RandomizedStaticPolicy(const Instance& inst, const LpSolution& lp);

  PolicyOutcome Sample(uint64_t seed) const;

  // sum_j sum_C g_j(C) prod_{i in C} x_ij prod_{i not in C} (1 - x_ij).
  // n <= 15.
  double ExactExpectedRevenue() const;

  const AssortmentDistribution& distribution(int i) const {
    return distributions_[i];
  }

 private:
  Instance inst_;
  Eigen::MatrixXd x_;
  std::vector<AssortmentDistribution> distributions_;
};

// Greedy policy for instances where all suppliers rank customers the same
// way. Customers are processed in that order; each is offered the
// assortment maximizing sum_{j in S} g_j(i | C_j) phi_i(j, S).
class SameOrderGreedy {
 public:
  // Without a valid same-order permutation this throws PreconditionError,
  // unless `force` is set; the policy then follows the lexicographic
  // revenue order and is marked heuristic.
  SameOrderGreedy(const Instance& inst,
                  const std::optional<std::vector<int>>& order,
                  bool force = false);

  bool heuristic() const { return heuristic_; }
  const std::vector<int>& order() const { return order_; }

  struct Offer {
    Subset assortment;
    double value = 0.0;
  };
  // Revenue-ordered prefix search over the marginal values; O(m log m)
  // after the marginals are known.
  Offer ChooseAssortment(int i, const std::vector<Subset>& backlogs) const;
  // Enumerates all 2^m assortments (m <= 20). Ties go to the smaller, then
  // lexicographically smaller, assortment.
  Offer ChooseAssortmentBruteForce(int i,
                                   const std::vector<Subset>& backlogs) const;

  PolicyOutcome Sample(uint64_t seed) const;

  struct Evaluation {
    double expected_revenue = 0.0;
    int64_t paths = 0;
    // Max over paths of |sum alpha + sum beta - 2 sum_j g_j(C_j)|, where
    // alpha_i is the chosen supplier's marginal gain and beta_j = g_j(C_j).
    double max_identity_error = 0.0;
    // Max over visited steps of |prefix value - brute-force value|.
    double max_step_gap = 0.0;
  };
  // Walks the full outcome tree ((m+1)^n paths; n <= 4, m <= 4).
  Evaluation EvaluateExact(bool check_steps = true) const;

 private:
  void Recurse(int t, std::vector<Subset>& backlogs, double prob,
               double alpha_sum, bool check_steps, Evaluation& ev) const;

  Instance inst_;
  std::vector<int> order_;
  bool heuristic_ = false;
};

}  // namespace tsa

#endif  // TSA_POLICIES_H_
