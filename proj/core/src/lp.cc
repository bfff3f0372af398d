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

#include "tsa/lp.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_util.h"
#include "tsa/cost_assortment.h"
#include "tsa/errors.h"
#include "tsa/mnl.h"

namespace tsa {

std::string LpSolutionToJson(const LpSolution& sol) {
  nlohmann::ordered_json doc;
  doc["objective"] = sol.objective;
  doc["x"] = internal::MatrixToJson(sol.x);
  auto lambda = nlohmann::ordered_json::array();
  for (const auto& support : sol.lambda) {
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [C, p] : support) {
      nlohmann::ordered_json e;
      e["set"] = C.items();
      e["p"] = p;
      entries.push_back(std::move(e));
    }
    lambda.push_back(std::move(entries));
  }
  doc["lambda"] = std::move(lambda);
  return doc.dump(2) + "\n";
}

LpSolution LpSolutionFromJson(std::string_view text) {
  LpSolution sol;
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto& x = doc.at("x");
    const int n = static_cast<int>(x.size());
    const int m = n > 0 ? static_cast<int>(x.at(0).size()) : 0;
    sol.x = internal::MatrixFromJson(x, n, m, "x");
    sol.objective = doc.at("objective").get<double>();
    for (const auto& support : doc.at("lambda")) {
      auto& out = sol.lambda.emplace_back();
      for (const auto& e : support) {
        out.emplace_back(Subset(e.at("set").get<std::vector<int>>()),
                         e.at("p").get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("solution parse error: ") +
                                e.what());
  }
  return sol;
}

std::vector<std::string> CheckLpSolution(const Instance& inst,
                                         const LpSolution& sol, double tol) {
  std::vector<std::string> errors;
  auto fail = [&](const std::string& what) { errors.push_back(what); };
  if (sol.x.rows() != inst.n || sol.x.cols() != inst.m ||
      static_cast<int>(sol.lambda.size()) != inst.m) {
    fail("dimension mismatch");
    return errors;
  }
  for (int j = 0; j < inst.m; ++j) {
    double total = 0.0;
    Eigen::VectorXd through = Eigen::VectorXd::Zero(inst.n);
    for (const auto& [C, p] : sol.lambda[j]) {
      if (p < 0.0) fail("negative lambda for supplier " + std::to_string(j));
      total += p;
      for (int i : C) {
        if (i >= inst.n) {
          fail("lambda support out of range for supplier " +
               std::to_string(j));
          continue;
        }
        through(i) += p;
      }
    }
    if (std::abs(total - 1.0) > tol) {
      fail("lambda of supplier " + std::to_string(j) + " sums to " +
           std::to_string(total));
    }
    for (int i = 0; i < inst.n; ++i) {
      if (std::abs(through(i) - sol.x(i, j)) > tol) {
        fail("marginal mismatch at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
      }
    }
  }
  for (int i = 0; i < inst.n; ++i) {
    const double row = sol.x.row(i).sum();
    for (int j = 0; j < inst.m; ++j) {
      if (sol.x(i, j) < -tol || sol.x(i, j) > 1.0 + tol) {
        fail("x out of [0,1] at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
      }
      if (sol.x(i, j) / inst.u(i, j) + row > 1.0 + tol) {
        fail("capacity row violated at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
      }
    }
  }
  return errors;
}

DualPoint DualPoint::Zero(int n, int m) {
  return {Eigen::MatrixXd::Zero(n, m), Eigen::VectorXd::Zero(m),
          Eigen::MatrixXd::Zero(n, m)};
}

bool ViolatedSets::Add(int j, const Subset& C) {
  if (Contains(j, C)) return false;
  sets_[j].push_back(C);
  return true;
}

bool ViolatedSets::Contains(int j, const Subset& C) const {
  return std::find(sets_[j].begin(), sets_[j].end(), C) != sets_[j].end();
}

int ViolatedSets::Total() const {
  int total = 0;
  for (const auto& s : sets_) total += static_cast<int>(s.size());
  return total;
}

AuxPrimal BuildAuxPrimal(const Instance& inst, const ViolatedSets& V) {
  AuxPrimal aux;
  aux.support.resize(inst.m);
  aux.lambda_var.resize(inst.m);
  aux.x_var.assign(inst.n, std::vector<int>(inst.m, -1));
  LinearProgram& lp = aux.lp;

  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      aux.x_var[i][j] = lp.AddVariable(
          0.0, "x[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  for (int j = 0; j < inst.m; ++j) {
    auto& support = aux.support[j];
    support.push_back(Subset());
    if (j < V.num_suppliers()) {
      for (const Subset& C : V.of(j)) {
        if (!C.empty()) support.push_back(C);
      }
    }
    for (const Subset& C : support) {
      aux.lambda_var[j].push_back(lp.AddVariable(
          ExpectedRevenue(inst, j, C),
          "lambda[" + std::to_string(j) + "," + C.ToString() + "]"));
    }
  }

  for (int j = 0; j < inst.m; ++j) {
    std::vector<std::pair<int, double>> terms;
    for (int v : aux.lambda_var[j]) terms.emplace_back(v, 1.0);
    lp.AddRow(std::move(terms), LinearProgram::Sense::kEq, 1.0,
              "dist[" + std::to_string(j) + "]");
  }
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      std::vector<std::pair<int, double>> terms;
      for (size_t k = 0; k < aux.support[j].size(); ++k) {
        if (aux.support[j][k].Contains(i)) {
          terms.emplace_back(aux.lambda_var[j][k], 1.0);
        }
      }
      terms.emplace_back(aux.x_var[i][j], -1.0);
      lp.AddRow(std::move(terms), LinearProgram::Sense::kEq, 0.0,
                "link[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      std::vector<std::pair<int, double>> terms;
      for (int l = 0; l < inst.m; ++l) {
        double coef = 1.0;
        if (l == j) coef += 1.0 / inst.u(i, j);
        terms.emplace_back(aux.x_var[i][l], coef);
      }
      lp.AddRow(std::move(terms), LinearProgram::Sense::kLe, 1.0,
                "cap[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  return aux;
}

LpSolution SolveAuxPrimal(const Instance& inst, const AuxPrimal& aux) {
  const LpResult res = SolveLp(aux.lp);
  if (res.status != LpStatus::kOptimal) {
    throw SolverError(std::string("restricted LP not optimal: ") +
                      LpStatusName(res.status));
  }
  LpSolution sol;
  sol.x.resize(inst.n, inst.m);
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) sol.x(i, j) = res.x[aux.x_var[i][j]];
  }
  sol.lambda.resize(inst.m);
  for (int j = 0; j < inst.m; ++j) {
    for (size_t k = 0; k < aux.support[j].size(); ++k) {
      const double p = res.x[aux.lambda_var[j][k]];
      if (p > 0.0) sol.lambda[j].emplace_back(aux.support[j][k], p);
    }
  }
  sol.objective = res.objective;
  return sol;
}

LpSolution Lp2ExactSmall(const Instance& inst) {
  CheckSize(inst.n <= 10 && inst.m <= 4, "Lp2ExactSmall: needs n <= 10, m <= 4");
  ViolatedSets all(inst.m);
  const uint64_t limit = uint64_t{1} << inst.n;
  for (int j = 0; j < inst.m; ++j) {
    for (uint64_t mask = 1; mask < limit; ++mask) {
      all.Add(j, Subset::FromMask(mask));
    }
  }
  return SolveAuxPrimal(inst, BuildAuxPrimal(inst, all));
}

double Lp1ExactSmall(const Instance& inst) {
  CheckSize(inst.n <= 4 && inst.m <= 4, "Lp1ExactSmall: needs n <= 4, m <= 4");
  const OptimalRevenueTable g(inst);
  const uint64_t customer_sets = uint64_t{1} << inst.n;
  const uint64_t supplier_sets = uint64_t{1} << inst.m;
  LinearProgram lp;
  std::vector<std::vector<int>> lambda(inst.m), tau(inst.n);
  for (int j = 0; j < inst.m; ++j) {
    for (uint64_t C = 0; C < customer_sets; ++C) {
      lambda[j].push_back(lp.AddVariable(g(j, C)));
    }
  }
  for (int i = 0; i < inst.n; ++i) {
    for (uint64_t S = 0; S < supplier_sets; ++S) {
      tau[i].push_back(lp.AddVariable(0.0));
    }
  }
  for (int j = 0; j < inst.m; ++j) {
    std::vector<std::pair<int, double>> terms;
    for (int v : lambda[j]) terms.emplace_back(v, 1.0);
    lp.AddRow(std::move(terms), LinearProgram::Sense::kEq, 1.0);
  }
  for (int i = 0; i < inst.n; ++i) {
    std::vector<std::pair<int, double>> terms;
    for (int v : tau[i]) terms.emplace_back(v, 1.0);
    lp.AddRow(std::move(terms), LinearProgram::Sense::kEq, 1.0);
  }
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      std::vector<std::pair<int, double>> terms;
      for (uint64_t C = 0; C < customer_sets; ++C) {
        if (C >> i & 1) terms.emplace_back(lambda[j][C], 1.0);
      }
      for (uint64_t S = 0; S < supplier_sets; ++S) {
        if (S >> j & 1) {
          const double phi =
              CustomerChoiceProbability(inst, i, Subset::FromMask(S), j);
          terms.emplace_back(tau[i][S], -phi);
        }
      }
      lp.AddRow(std::move(terms), LinearProgram::Sense::kEq, 0.0);
    }
  }
  const LpResult res = SolveLp(lp);
  if (res.status != LpStatus::kOptimal) {
    throw SolverError(std::string("assortment LP not optimal: ") +
                      LpStatusName(res.status));
  }
  return res.objective;
}

double CouplingSlack(const Instance& inst, const DualPoint& p, int i, int j) {
  return p.alpha(i, j) / inst.u(i, j) + p.alpha.row(i).sum() - p.gamma(i, j);
}

DualFeasibilityReport CheckDualFeasibility(const Instance& inst,
                                           const DualPoint& p, bool exact) {
  DualFeasibilityReport report;
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      const double slack = CouplingSlack(inst, p, i, j);
      if (slack < 0.0) {
        report.violations.push_back(
            {DualViolation::Kind::kCoupling, i, j, Subset(), -slack});
      }
    }
  }
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      if (p.alpha(i, j) < 0.0) {
        report.violations.push_back({DualViolation::Kind::kNonnegativity, i,
                                     j, Subset(), -p.alpha(i, j)});
      }
    }
  }
  if (exact) {
    report.assortment_checked = true;
    for (int j = 0; j < inst.m; ++j) {
      const SubDualResult best = SubDualExact(inst, j, p.gamma);
      if (best.value > p.beta(j)) {
        report.violations.push_back({DualViolation::Kind::kAssortment, -1, j,
                                     best.argmax, best.value - p.beta(j)});
      }
    }
  }
  return report;
}

}  // namespace tsa
