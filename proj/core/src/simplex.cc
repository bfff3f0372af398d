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

#include "tsa/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "tsa/errors.h"

namespace tsa {

int LinearProgram::AddVariable(double objective, std::string name) {
  objective_.push_back(objective);
  names_.push_back(std::move(name));
  return static_cast<int>(objective_.size()) - 1;
}

void LinearProgram::AddRow(std::vector<std::pair<int, double>> terms,
                           Sense sense, double rhs, std::string name) {
  for (const auto& [var, coef] : terms) {
    if (var < 0 || var >= num_variables()) {
      throw std::out_of_range("LinearProgram::AddRow: bad variable index");
    }
    (void)coef;
  }
  rows_.push_back({std::move(terms), sense, rhs, std::move(name)});
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

using Tableau =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class Simplex {
 public:
  Simplex(const LinearProgram& lp, const SimplexOptions& opt)
      : lp_(lp), opt_(opt) {}

  LpResult Run();

 private:
  void Build();
  void Pivot(int row, int col);
  // Returns false when unbounded.
  bool Optimize(const std::vector<bool>& allowed);
  void LoadObjective(const std::vector<double>& cost);
  [[noreturn]] void Fail(const std::string& what) const;

  const LinearProgram& lp_;
  SimplexOptions opt_;
  int n_struct_ = 0;
  int n_cols_ = 0;  // excluding rhs
  int first_art_ = 0;
  Tableau t_;       // constraint rows, last column is rhs
  Eigen::RowVectorXd obj_;  // reduced costs, last entry is objective value
  std::vector<int> basis_;
  std::vector<bool> row_active_;
  int iterations_ = 0;
  int max_iterations_ = 0;
  double min_pivot_ = std::numeric_limits<double>::infinity();
};

void Simplex::Fail(const std::string& what) const {
  std::ostringstream msg;
  msg << "simplex: " << what << " (rows=" << t_.rows()
      << ", cols=" << n_cols_ << ", iterations=" << iterations_
      << ", smallest pivot=" << min_pivot_
      << ", largest entry=" << (t_.size() ? t_.cwiseAbs().maxCoeff() : 0.0)
      << ")";
  throw SolverError(msg.str());
}

void Simplex::Build() {
  const int rows = lp_.num_rows();
  n_struct_ = lp_.num_variables();
  int n_slack = 0, n_art = 0;
  for (const auto& row : lp_.rows()) {
    const bool flip = row.rhs < 0.0;
    auto sense = row.sense;
    if (flip && sense != LinearProgram::Sense::kEq) {
      sense = sense == LinearProgram::Sense::kLe ? LinearProgram::Sense::kGe
                                                 : LinearProgram::Sense::kLe;
    }
    if (sense != LinearProgram::Sense::kEq) ++n_slack;
    if (sense != LinearProgram::Sense::kLe) ++n_art;
  }
  first_art_ = n_struct_ + n_slack;
  n_cols_ = first_art_ + n_art;
  t_ = Tableau::Zero(rows, n_cols_ + 1);
  basis_.assign(rows, -1);
  row_active_.assign(rows, true);

  int slack = n_struct_, art = first_art_;
  for (int k = 0; k < rows; ++k) {
    const auto& row = lp_.rows()[k];
    const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
    for (const auto& [var, coef] : row.terms) t_(k, var) += sign * coef;
    t_(k, n_cols_) = sign * row.rhs;
    auto sense = row.sense;
    if (sign < 0.0 && sense != LinearProgram::Sense::kEq) {
      sense = sense == LinearProgram::Sense::kLe ? LinearProgram::Sense::kGe
                                                 : LinearProgram::Sense::kLe;
    }
    switch (sense) {
      case LinearProgram::Sense::kLe:
        t_(k, slack) = 1.0;
        basis_[k] = slack++;
        break;
      case LinearProgram::Sense::kGe:
        t_(k, slack++) = -1.0;
        t_(k, art) = 1.0;
        basis_[k] = art++;
        break;
      case LinearProgram::Sense::kEq:
        t_(k, art) = 1.0;
        basis_[k] = art++;
        break;
    }
  }
  max_iterations_ = opt_.max_iterations > 0
                        ? opt_.max_iterations
                        : 50 * (rows + n_cols_) + 1000;
}

void Simplex::Pivot(int row, int col) {
  const double p = t_(row, col);
  min_pivot_ = std::min(min_pivot_, std::abs(p));
  t_.row(row) /= p;
  t_(row, col) = 1.0;
  for (int k = 0; k < t_.rows(); ++k) {
    if (k == row || !row_active_[k]) continue;
    const double f = t_(k, col);
    if (f != 0.0) {
      t_.row(k) -= f * t_.row(row);
      t_(k, col) = 0.0;
    }
  }
  const double f = obj_(col);
  if (f != 0.0) {
    obj_ -= f * t_.row(row);
    obj_(col) = 0.0;
  }
  basis_[row] = col;
  ++iterations_;
}

void Simplex::LoadObjective(const std::vector<double>& cost) {
  // obj_ holds c_B B^-1 A - c and, in the last slot, c_B B^-1 b.
  obj_ = Eigen::RowVectorXd::Zero(n_cols_ + 1);
  for (int c = 0; c < n_cols_; ++c) obj_(c) = -cost[c];
  for (int k = 0; k < t_.rows(); ++k) {
    if (!row_active_[k]) continue;
    const double f = obj_(basis_[k]);
    if (f != 0.0) obj_ -= f * t_.row(k);
  }
}

bool Simplex::Optimize(const std::vector<bool>& allowed) {
  const double tol = opt_.feasibility_tol;
  while (true) {
    int enter = -1;
    for (int c = 0; c < n_cols_; ++c) {
      if (allowed[c] && obj_(c) < -tol) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    double best_ratio = 0.0;
    for (int k = 0; k < t_.rows(); ++k) {
      if (!row_active_[k]) continue;
      const double a = t_(k, enter);
      if (a <= opt_.pivot_tol) continue;
      const double ratio = std::max(t_(k, n_cols_), 0.0) / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[k] < basis_[leave])) {
        leave = k;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return false;
    if (iterations_ >= max_iterations_) Fail("iteration limit reached");
    Pivot(leave, enter);
    if (!std::isfinite(obj_(n_cols_))) Fail("non-finite objective");
  }
}

LpResult Simplex::Run() {
  Build();
  LpResult result;
  const double tol = opt_.feasibility_tol;

  // Phase 1: maximize -sum(artificials).
  if (first_art_ < n_cols_) {
    std::vector<double> cost(n_cols_, 0.0);
    for (int c = first_art_; c < n_cols_; ++c) cost[c] = -1.0;
    LoadObjective(cost);
    std::vector<bool> allowed(n_cols_, true);
    Optimize(allowed);  // bounded by 0
    if (obj_(n_cols_) < -tol * (1.0 + t_.col(n_cols_).cwiseAbs().maxCoeff())) {
      result.status = LpStatus::kInfeasible;
      result.iterations = iterations_;
      return result;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int k = 0; k < t_.rows(); ++k) {
      if (basis_[k] < first_art_) continue;
      int col = -1;
      for (int c = 0; c < first_art_; ++c) {
        if (std::abs(t_(k, c)) > tol) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        Pivot(k, col);
      } else {
        row_active_[k] = false;
      }
    }
  }

  // Phase 2.
  std::vector<double> cost(n_cols_, 0.0);
  for (int c = 0; c < n_struct_; ++c) cost[c] = lp_.objective()[c];
  LoadObjective(cost);
  std::vector<bool> allowed(n_cols_, false);
  for (int c = 0; c < first_art_; ++c) allowed[c] = true;
  const bool bounded = Optimize(allowed);
  result.iterations = iterations_;
  if (!bounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.x.assign(n_struct_, 0.0);
  for (int k = 0; k < t_.rows(); ++k) {
    if (row_active_[k] && basis_[k] < n_struct_) {
      result.x[basis_[k]] = std::max(t_(k, n_cols_), 0.0);
    }
  }
  result.objective = 0.0;
  for (int c = 0; c < n_struct_; ++c) {
    result.objective += lp_.objective()[c] * result.x[c];
  }

  // Residual check against the original rows.
  double scale = 1.0;
  for (const auto& row : lp_.rows()) scale = std::max(scale, std::abs(row.rhs));
  for (const auto& row : lp_.rows()) {
    double lhs = 0.0;
    for (const auto& [var, coef] : row.terms) lhs += coef * result.x[var];
    const double slack = lhs - row.rhs;
    const double limit = 1e-6 * scale;
    const bool bad =
        (row.sense == LinearProgram::Sense::kLe && slack > limit) ||
        (row.sense == LinearProgram::Sense::kGe && slack < -limit) ||
        (row.sense == LinearProgram::Sense::kEq && std::abs(slack) > limit);
    if (bad) {
      Fail("solution violates row '" + row.name + "' by " +
           std::to_string(slack));
    }
  }
  return result;
}

const char* SenseName(LinearProgram::Sense sense) {
  switch (sense) {
    case LinearProgram::Sense::kLe:
      return "<=";
    case LinearProgram::Sense::kGe:
      return ">=";
    case LinearProgram::Sense::kEq:
      return "=";
  }
  return "?";
}

}  // namespace

LpResult SolveLp(const LinearProgram& lp, const SimplexOptions& options) {
  Simplex simplex(lp, options);
  return simplex.Run();
}

std::string LpToJson(const LinearProgram& lp, const LpResult* result) {
  nlohmann::ordered_json doc;
  doc["sense"] = "maximize";
  auto vars = nlohmann::ordered_json::array();
  for (int v = 0; v < lp.num_variables(); ++v) {
    nlohmann::ordered_json var;
    var["name"] = lp.names()[v].empty() ? "v" + std::to_string(v)
                                        : lp.names()[v];
    var["objective"] = lp.objective()[v];
    if (result != nullptr && result->status == LpStatus::kOptimal) {
      var["value"] = result->x[v];
    }
    vars.push_back(std::move(var));
  }
  doc["variables"] = std::move(vars);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : lp.rows()) {
    nlohmann::ordered_json rec;
    rec["name"] = row.name;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [var, coef] : row.terms) terms.push_back({var, coef});
    rec["terms"] = std::move(terms);
    rec["sense"] = SenseName(row.sense);
    rec["rhs"] = row.rhs;
    rows.push_back(std::move(rec));
  }
  doc["rows"] = std::move(rows);
  if (result != nullptr) {
    doc["status"] = LpStatusName(result->status);
    doc["objective"] = result->objective;
    doc["iterations"] = result->iterations;
  }
  return doc.dump(2) + "\n";
}

}  // namespace tsa
