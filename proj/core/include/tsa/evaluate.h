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

// Monte Carlo estimation and property checks on the optimal-revenue
// functions g_j. All checks enumerate exactly; randomness only picks the
// cases, and every trial t draws from DeriveSeed(seed, t).

#ifndef TSA_EVALUATE_H_
#define TSA_EVALUATE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsa/instance.h"
#include "tsa/random.h"
#include "tsa/subset.h"

namespace tsa {

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
  int64_t trials = 0;
};

// Realized revenue of one trial given its seed. Must be safe to call
// concurrently when threads > 1.
using Sampler = std::function<double(uint64_t seed)>;

// Trial t uses DeriveSeed(master_seed, t); results are summed in trial
// order, so the output does not depend on `threads`.
MonteCarloResult MonteCarlo(const Sampler& sampler, int64_t trials,
                            uint64_t master_seed, int threads = 1);

struct SubsetDistribution {
  std::vector<std::pair<Subset, double>> support;

  std::vector<double> Marginals(int n) const;

  static SubsetDistribution PointMass(const Subset& A);
  // Full 2^n support with independent inclusion probabilities.
  static SubsetDistribution Product(const std::vector<double>& marginals);
  // 1 to 8 uniformly random support sets with flat-Dirichlet weights.
  static SubsetDistribution RandomCorrelated(int n, Rng& rng);
};

struct CorrelationGap {
  double correlated = 0.0;   // E_D[g_j(A)]
  double independent = 0.0;  // same marginals, independent inclusion
  // correlated / independent; empty when the independent value is 0.
  std::optional<double> ratio;
};

// n <= 10.
CorrelationGap CorrelationGapCheck(const Instance& inst, int j,
                                   const SubsetDistribution& D);

struct CheckReport {
  std::string name;
  int64_t checks = 0;
  int64_t violations = 0;
  double worst = 0.0;  // largest violation amount seen
  std::vector<std::string> witnesses;  // first few violations

  bool passed() const { return violations == 0; }
  void Record(double excess, double tol, const std::function<std::string()>&
                                             describe);
};

// chi_i(A) = [i in A] (g_j(A_{>=i}) - g_j(A_{>i})), with A_{>=i} the members
// of A ranked at or above i by descending r_ij (ties by index).
double CostShare(const Instance& inst, int j, int i, const Subset& A);

// Random A subset of B and customer i: chi_i(A + i) >= chi_i(B + i) and
// sum_i chi_i(X) = g_j(X) for X in {A, B}.
CheckReport CostSharingCheck(const Instance& inst, int j, int64_t trials,
                             uint64_t seed, double tol = 1e-9);

// Random A subset of B and C placed after B in `order`:
// g(C | B) <= g(C | A); plus g(X u Y) <= g(X) + g(Y) for random X, Y.
CheckReport SubmodularOrderCheck(const Instance& inst, int j,
                                 const std::vector<int>& order, int64_t trials,
                                 uint64_t seed, double tol = 1e-9);

// Same inequalities over every admissible (A, B, C). n <= 8.
CheckReport SubmodularOrderCheckExhaustive(const Instance& inst, int j,
                                           const std::vector<int>& order,
                                           double tol = 1e-9);

// g(i | A) >= g(i | B) for every A subset of B, i not in B. n <= 8.
// Fails on non-submodular g; witnesses read "A=... B=... i=...".
CheckReport SubmodularityCheckExhaustive(const Instance& inst, int j,
                                         double tol = 1e-9);

// For a backlog C^n (simulated with the greedy policy on even trials,
// uniform on odd trials) and a uniform target C, with C^{t-1} the part of
// C^n before position t in `order`:
//   g(C u C^n) <= g(C^n) + sum_{i_t in C \ C^n} g(i_t | C^{t-1}).
CheckReport InterleavedPartitionCheck(const Instance& inst, int j,
                                      const std::vector<int>& order,
                                      int64_t trials, uint64_t seed,
                                      double tol = 1e-9);

// One evaluation of the inequality above; returns rhs - lhs.
double InterleavedPartitionSlack(const Instance& inst, int j,
                                 const std::vector<int>& order,
                                 const Subset& backlog, const Subset& target);

}  // namespace tsa

#endif  // TSA_EVALUATE_H_
