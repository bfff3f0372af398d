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

// Dense two-phase primal simplex for small LPs of the form
//
//   maximize c'x  subject to  a_k'x {<=, >=, =} b_k,  x >= 0.
//
// Uses Bland's rule throughout, so it cannot cycle. Intended for problems
// with at most a few thousand columns and a few hundred rows.

#ifndef TSA_SIMPLEX_H_
#define TSA_SIMPLEX_H_

#include <string>
#include <utility>
#include <vector>

namespace tsa {

class LinearProgram {
 public:
  enum class Sense { kLe, kGe, kEq };

  struct Row {
    std::vector<std::pair<int, double>> terms;  // (variable, coefficient)
    Sense sense = Sense::kLe;
    double rhs = 0.0;
    std::string name;
  };

  // Returns the new variable's index.
  int AddVariable(double objective, std::string name = "");
  void AddRow(std::vector<std::pair<int, double>> terms, Sense sense,
              double rhs, std::string name = "");

  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::vector<double> objective_;
  std::vector<std::string> names_;
  std::vector<Row> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;  // primal values, valid when optimal
  double objective = 0.0;
  int iterations = 0;     // pivots over both phases
};

struct SimplexOptions {
  double feasibility_tol = 1e-8;
  double pivot_tol = 1e-11;
  // 0 picks a limit proportional to the problem size.
  int max_iterations = 0;
};

// Throws SolverError (with pivot and conditioning diagnostics) when the
// iteration limit is hit or the tableau degrades numerically.
LpResult SolveLp(const LinearProgram& lp, const SimplexOptions& options = {});

// Structured-text dump of the program and, when given, its solution.
std::string LpToJson(const LinearProgram& lp, const LpResult* result = nullptr);

}  // namespace tsa

#endif  // TSA_SIMPLEX_H_
