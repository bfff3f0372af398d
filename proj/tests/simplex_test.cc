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

#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "tsa/errors.h"
#include "tsa/random.h"
#include "tsa/simplex.h"

namespace tsa {
namespace {

using Sense = LinearProgram::Sense;

// Brute-force optimum of a bounded LP: the best feasible basic solution over
// every choice of active constraints. Returns nullopt when infeasible.
std::optional<double> VertexOptimum(const LinearProgram& lp) {
  const int n = lp.num_variables();
  struct Con {
    Eigen::VectorXd a;
    double b;
    Sense sense;
  };
  std::vector<Con> cons;
  for (const auto& row : lp.rows()) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    for (const auto& [v, c] : row.terms) a[v] += c;
    if (a.isZero()) {
      // An empty row cannot join a basis; it is either vacuous or infeasible.
      const bool ok = row.sense == Sense::kLe   ? row.rhs >= 0.0
                      : row.sense == Sense::kGe ? row.rhs <= 0.0
                                                : row.rhs == 0.0;
      if (!ok) return std::nullopt;
      continue;
    }
    cons.push_back({a, row.rhs, row.sense});
  }
  for (int v = 0; v < n; ++v) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    a[v] = 1.0;
    cons.push_back({a, 0.0, Sense::kGe});
  }
  const int k = static_cast<int>(cons.size());
  std::optional<double> best;
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) != n) continue;
    bool eq_ok = true;
    for (int c = 0; c < k; ++c) {
      if (cons[c].sense == Sense::kEq && !(mask >> c & 1)) eq_ok = false;
    }
    if (!eq_ok) continue;
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd b(n);
    int r = 0;
    for (int c = 0; c < k; ++c) {
      if (mask >> c & 1) {
        A.row(r) = cons[c].a.transpose();
        b[r++] = cons[c].b;
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.rank() < n) continue;
    const Eigen::VectorXd x = lu.solve(b);
    bool feasible = true;
    for (const auto& con : cons) {
      const double lhs = con.a.dot(x);
      if (con.sense == Sense::kLe && lhs > con.b + 1e-9) feasible = false;
      if (con.sense == Sense::kGe && lhs < con.b - 1e-9) feasible = false;
      if (con.sense == Sense::kEq && std::abs(lhs - con.b) > 1e-9) {
        feasible = false;
      }
    }
    if (!feasible) continue;
    double obj = 0.0;
    for (int v = 0; v < n; ++v) obj += lp.objective()[v] * x[v];
    if (!best || obj > *best) best = obj;
  }
  return best;
}

void ExpectFeasible(const LinearProgram& lp, const LpResult& res) {
  ASSERT_EQ(res.x.size(), static_cast<size_t>(lp.num_variables()));
  for (double v : res.x) EXPECT_GE(v, -1e-9);
  for (const auto& row : lp.rows()) {
    double lhs = 0.0;
    for (const auto& [v, c] : row.terms) lhs += c * res.x[v];
    if (row.sense != Sense::kGe) {
      EXPECT_LE(lhs, row.rhs + 1e-8) << row.name;
    }
    if (row.sense != Sense::kLe) {
      EXPECT_GE(lhs, row.rhs - 1e-8) << row.name;
    }
  }
}

TEST(SimplexTest, TextbookMaximization) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18: optimum 36 at (2, 6).
  LinearProgram lp;
  const int x = lp.AddVariable(3.0, "x");
  const int y = lp.AddVariable(5.0, "y");
  lp.AddRow({{x, 1.0}}, Sense::kLe, 4.0);
  lp.AddRow({{y, 2.0}}, Sense::kLe, 12.0);
  lp.AddRow({{x, 3.0}, {y, 2.0}}, Sense::kLe, 18.0);
  const LpResult res = SolveLp(lp);
  ASSERT_EQ(res.status, LpStatus::kOptimal);
  EXPECT_NEAR(res.objective, 36.0, 1e-12);
  EXPECT_NEAR(res.x[x], 2.0, 1e-12);
  EXPECT_NEAR(res.x[y], 6.0, 1e-12);
}

TEST(SimplexTest, EqualityAndGreaterRowsNeedPhaseOne) {
  // max -x - y, x + y >= 2, x - y = 1: optimum -2 at (1.5, 0.5).
  LinearProgram lp;
  const int x = lp.AddVariable(-1.0);
  const int y = lp.AddVariable(-1.0);
  lp.AddRow({{x, 1.0}, {y, 1.0}}, Sense::kGe, 2.0);
  lp.AddRow({{x, 1.0}, {y, -1.0}}, Sense::kEq, 1.0);
  const LpResult res = SolveLp(lp);
  ASSERT_EQ(res.status, LpStatus::kOptimal);
  EXPECT_NEAR(res.objective, -2.0, 1e-12);
  EXPECT_NEAR(res.x[x], 1.5, 1e-12);
}

TEST(SimplexTest, DetectsInfeasibleAndUnbounded) {
  LinearProgram infeasible;
  const int a = infeasible.AddVariable(1.0);
  infeasible.AddRow({{a, 1.0}}, Sense::kLe, 1.0);
  infeasible.AddRow({{a, 1.0}}, Sense::kGe, 2.0);
  EXPECT_EQ(SolveLp(infeasible).status, LpStatus::kInfeasible);

  LinearProgram unbounded;
  const int b = unbounded.AddVariable(1.0);
  const int c = unbounded.AddVariable(0.0);
  unbounded.AddRow({{b, 1.0}, {c, -1.0}}, Sense::kLe, 1.0);
  EXPECT_EQ(SolveLp(unbounded).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, NegativeRightHandSidesAndRedundantRows) {
  // -x <= -1 is x >= 1; the duplicated equality is redundant.
  LinearProgram lp;
  const int x = lp.AddVariable(-2.0);
  const int y = lp.AddVariable(1.0);
  lp.AddRow({{x, -1.0}}, Sense::kLe, -1.0);
  lp.AddRow({{x, 1.0}, {y, 1.0}}, Sense::kEq, 3.0);
  lp.AddRow({{x, 2.0}, {y, 2.0}}, Sense::kEq, 6.0);
  const LpResult res = SolveLp(lp);
  ASSERT_EQ(res.status, LpStatus::kOptimal);
  EXPECT_NEAR(res.objective, 0.0, 1e-12);
  EXPECT_NEAR(res.x[x], 1.0, 1e-12);
  EXPECT_NEAR(res.x[y], 2.0, 1e-12);
}

TEST(SimplexTest, DegenerateCyclingExampleTerminates) {
  // Beale's example cycles under the textbook largest-coefficient rule.
  LinearProgram lp;
  const int x1 = lp.AddVariable(0.75);
  const int x2 = lp.AddVariable(-150.0);
  const int x3 = lp.AddVariable(0.02);
  const int x4 = lp.AddVariable(-6.0);
  lp.AddRow({{x1, 0.25}, {x2, -60.0}, {x3, -0.04}, {x4, 9.0}}, Sense::kLe, 0.0);
  lp.AddRow({{x1, 0.5}, {x2, -90.0}, {x3, -0.02}, {x4, 3.0}}, Sense::kLe, 0.0);
  lp.AddRow({{x3, 1.0}}, Sense::kLe, 1.0);
  const LpResult res = SolveLp(lp);
  ASSERT_EQ(res.status, LpStatus::kOptimal);
  EXPECT_NEAR(res.objective, 0.05, 1e-12);
}

TEST(SimplexTest, MatchesVertexEnumerationOnRandomPrograms) {
  Rng rng(2024);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LinearProgram lp;
    const int n = rng.UniformInt(1, 4);
    const int rows = rng.UniformInt(1, 4);
    std::vector<std::pair<int, double>> box;
    for (int v = 0; v < n; ++v) {
      lp.AddVariable(rng.Uniform(-2.0, 2.0));
      box.push_back({v, 1.0});
    }
    for (int r = 0; r < rows; ++r) {
      std::vector<std::pair<int, double>> terms;
      for (int v = 0; v < n; ++v) {
        if (rng.Bernoulli(0.7)) {
          // Integer coefficients make degenerate vertices common.
          terms.push_back({v, static_cast<double>(rng.UniformInt(-3, 3))});
        }
      }
      const int s = rng.UniformInt(0, 2);
      const Sense sense = s == 0 ? Sense::kLe : s == 1 ? Sense::kGe : Sense::kEq;
      lp.AddRow(std::move(terms), sense, rng.UniformInt(-2, 4));
    }
    lp.AddRow(box, Sense::kLe, 10.0, "box");
    const auto want = VertexOptimum(lp);
    const LpResult res = SolveLp(lp);
    if (!want) {
      EXPECT_EQ(res.status, LpStatus::kInfeasible) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(res.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(res.objective, *want, 1e-9) << "trial " << trial;
    ExpectFeasible(lp, res);
    ++optimal;
  }
  EXPECT_GT(optimal, 100);
  EXPECT_GT(infeasible, 10);
}

TEST(SimplexTest, IterationLimitRaisesSolverError) {
  LinearProgram lp;
  const int x = lp.AddVariable(3.0);
  const int y = lp.AddVariable(5.0);
  lp.AddRow({{x, 1.0}}, Sense::kLe, 4.0);
  lp.AddRow({{y, 2.0}}, Sense::kLe, 12.0);
  lp.AddRow({{x, 3.0}, {y, 2.0}}, Sense::kLe, 18.0);
  SimplexOptions opts;
  opts.max_iterations = 1;
  EXPECT_THROW(SolveLp(lp, opts), SolverError);
}

TEST(SimplexTest, JsonDumpListsVariablesRowsAndStatus) {
  LinearProgram lp;
  const int x = lp.AddVariable(1.0, "x");
  lp.AddRow({{x, 1.0}}, Sense::kLe, 2.0, "cap");
  const LpResult res = SolveLp(lp);
  const auto doc = nlohmann::json::parse(LpToJson(lp, &res));
  EXPECT_EQ(doc["sense"], "maximize");
  EXPECT_EQ(doc["variables"][0]["name"], "x");
  EXPECT_DOUBLE_EQ(doc["variables"][0]["value"].get<double>(), 2.0);
  EXPECT_EQ(doc["rows"][0]["name"], "cap");
  EXPECT_EQ(doc["status"], "optimal");
}

}  // namespace
}  // namespace tsa
