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

// Upper-bounding LPs for the adaptive two-sided problem.
//
// Marginal LP (the one the policies round):
//
//   max  sum_j sum_C R_j(C) lambda_{j,C}
//   s.t. sum_C lambda_{j,C} = 1                       for all j
//        sum_{C contains i} lambda_{j,C} = x_ij       for all i, j
//        x_ij / u_ij + sum_l x_il <= 1                for all i, j
//        lambda, x >= 0
//
// Assortment LP (tighter; customer assortment distributions tau):
//
//   max  sum_j sum_C g_j(C) lambda_{j,C}
//   s.t. sum_C lambda_{j,C} = 1,  sum_S tau_{i,S} = 1
//        sum_{C contains i} lambda_{j,C} = sum_{S contains j} tau_{i,S} phi_i(j,S)
//
// The dual of the marginal LP has variables alpha (n x m, >= 0), beta (m),
// gamma (n x m) and constraints
//
//   beta_j >= RevCost_j(C, gamma_.j)                  for all j, C
//   alpha_ij / u_ij + sum_l alpha_il >= gamma_ij      for all i, j
//
// with objective sum beta + sum alpha.

#ifndef TSA_LP_H_
#define TSA_LP_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "tsa/instance.h"
#include "tsa/simplex.h"
#include "tsa/subset.h"

namespace tsa {

struct LpSolution {
  Eigen::MatrixXd x;  // n x m
  // Per supplier, the support of lambda_j.
  std::vector<std::vector<std::pair<Subset, double>>> lambda;
  double objective = 0.0;
};

// Structured-text form: {"objective", "x": rows, "lambda": per supplier a
// list of {"set": [customers], "p": probability}}.
std::string LpSolutionToJson(const LpSolution& sol);
// Throws std::invalid_argument on malformed input.
LpSolution LpSolutionFromJson(std::string_view text);

// Invariant violations of `sol` for `inst` (empty when valid).
std::vector<std::string> CheckLpSolution(const Instance& inst,
                                         const LpSolution& sol,
                                         double tol = 1e-9);

struct DualPoint {
  Eigen::MatrixXd alpha;  // n x m
  Eigen::VectorXd beta;   // m
  Eigen::MatrixXd gamma;  // n x m

  static DualPoint Zero(int n, int m);
  double Objective() const { return beta.sum() + alpha.sum(); }
};

class ViolatedSets {
 public:
  explicit ViolatedSets(int m = 0) : sets_(m) {}

  // Appends C to supplier j's list; returns false if already present.
  bool Add(int j, const Subset& C);
  bool Contains(int j, const Subset& C) const;
  const std::vector<Subset>& of(int j) const { return sets_[j]; }
  int num_suppliers() const { return static_cast<int>(sets_.size()); }
  int Total() const;

 private:
  std::vector<std::vector<Subset>> sets_;
};

// The marginal LP restricted to lambda supported on V_j (with the empty set
// always added). `support[j]` lists the lambda columns for supplier j.
struct AuxPrimal {
  LinearProgram lp;
  std::vector<std::vector<Subset>> support;
  std::vector<std::vector<int>> lambda_var;  // [j][k] -> column
  std::vector<std::vector<int>> x_var;       // [i][j] -> column
};

AuxPrimal BuildAuxPrimal(const Instance& inst, const ViolatedSets& V);

// Solves the restricted LP and packages the result. Throws SolverError if
// the simplex does not report an optimum.
LpSolution SolveAuxPrimal(const Instance& inst, const AuxPrimal& aux);

// Marginal LP with every lambda_{j,C} instantiated (n <= 10, m <= 4).
LpSolution Lp2ExactSmall(const Instance& inst);

// Assortment LP with all lambda and tau instantiated (n <= 4, m <= 4).
double Lp1ExactSmall(const Instance& inst);

struct DualViolation {
  enum class Kind { kCoupling, kNonnegativity, kAssortment };
  Kind kind;
  int i = -1;  // customer, -1 for assortment rows
  int j = -1;
  Subset set;  // witness for assortment rows
  double amount = 0.0;  // > 0
};

struct DualFeasibilityReport {
  std::vector<DualViolation> violations;
  bool assortment_checked = false;  // false when exact mode was off

  bool feasible() const { return violations.empty(); }
};

// Exact comparisons, no tolerance. The assortment family is separated with
// exhaustive enumeration (n <= 20) only when `exact` is set.
DualFeasibilityReport CheckDualFeasibility(const Instance& inst,
                                           const DualPoint& p, bool exact);

// alpha_ij / u_ij + sum_l alpha_il - gamma_ij, the slack of a coupling row.
double CouplingSlack(const Instance& inst, const DualPoint& p, int i, int j);

}  // namespace tsa

#endif  // TSA_LP_H_
