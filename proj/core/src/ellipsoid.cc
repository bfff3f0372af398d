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

#include "tsa/ellipsoid.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include <Eigen/Core>

#include "tsa/errors.h"
#include "tsa/mnl.h"

namespace tsa {

const char* CutKindName(CutKind kind) {
  switch (kind) {
    case CutKind::kObjective:
      return "objective";
    case CutKind::kCoupling:
      return "coupling";
    case CutKind::kSign:
      return "sign";
    case CutKind::kAssortment:
      return "assortment";
  }
  return "unknown";
}

double InitialRadius(const Instance& inst) {
  const double inv_u = inst.u.cwiseInverse().maxCoeff();
  return 10.0 * (inst.m + inst.n * inst.m) * std::max(1.0, inv_u);
}

int64_t DefaultTMax(const Instance& inst) {
  const double N = 2.0 * inst.n * inst.m + inst.m;
  const double rho = InitialRadius(inst);
  return static_cast<int64_t>(std::ceil(50.0 * N * N * std::log(10.0 * N * rho)));
}

namespace {

using SparseCut = std::vector<std::pair<int, double>>;

// Index layout of the center vector.
struct Layout {
  int n, m;
  int Alpha(int i, int j) const { return i * m + j; }
  int Beta(int j) const { return n * m + j; }
  int Gamma(int i, int j) const { return n * m + m + i * m + j; }
  int Dim() const { return 2 * n * m + m; }
};

DualPoint Unpack(const Layout& L, const Eigen::VectorXd& s) {
  DualPoint p = DualPoint::Zero(L.n, L.m);
  for (int i = 0; i < L.n; ++i) {
    for (int j = 0; j < L.m; ++j) {
      p.alpha(i, j) = s(L.Alpha(i, j));
      p.gamma(i, j) = s(L.Gamma(i, j));
    }
  }
  for (int j = 0; j < L.m; ++j) p.beta(j) = s(L.Beta(j));
  return p;
}

// Holds the ellipsoid {s' : (s'-s)' D^-1 (s'-s) <= 1} in one of two forms.
class Ellipsoid {
 public:
  Ellipsoid(int dim, double rho, EllipsoidConfig::Update update)
      : dim_(dim), update_(update), s_(Eigen::VectorXd::Zero(dim)) {
    if (update_ == EllipsoidConfig::Update::kFactored) {
      b_ = rho * Eigen::MatrixXd::Identity(dim, dim);
    } else {
      d_ = rho * rho * Eigen::MatrixXd::Identity(dim, dim);
    }
  }

  const Eigen::VectorXd& center() const { return s_; }

  double Trace() const {
    return update_ == EllipsoidConfig::Update::kFactored ? b_.squaredNorm()
                                                         : d_.trace();
  }

  // Central cut keeping {s' : a'(s' - s) >= 0}. Returns false, leaving the
  // ellipsoid untouched, when a'Da is not a positive finite number; `why`
  // then holds diagnostics.
  bool Cut(const SparseCut& a, int64_t t, std::string* why) {
    const double N = dim_;
    if (update_ == EllipsoidConfig::Update::kFactored) {
      // p = B' a, D a / sqrt(a'Da) = B p / |p|.
      Eigen::VectorXd p = Eigen::VectorXd::Zero(dim_);
      for (const auto& [k, v] : a) p.noalias() += v * b_.row(k).transpose();
      // stableNorm avoids squaring tiny entries into underflow.
      const double norm = p.stableNorm();
      if (!Healthy(norm, t, why)) return false;
      const Eigen::VectorXd xi = p / norm;
      const Eigen::VectorXd bxi = b_ * xi;
      s_ += bxi / (N + 1.0);
      const double k = 1.0 - std::sqrt((N - 1.0) / (N + 1.0));
      b_.noalias() -= k * bxi * xi.transpose();
      b_ *= N / std::sqrt(N * N - 1.0);
    } else {
      Eigen::VectorXd da = Eigen::VectorXd::Zero(dim_);
      for (const auto& [k, v] : a) da.noalias() += v * d_.col(k);
      double ada = 0.0;
      for (const auto& [k, v] : a) ada += v * da(k);
      if (!Healthy(ada, t, why)) return false;
      s_ += da / ((N + 1.0) * std::sqrt(ada));
      d_ = (N * N / (N * N - 1.0)) *
           (d_ - (2.0 / (N + 1.0)) * (da * da.transpose()) / ada);
    }
    return true;
  }

 private:
  bool Healthy(double q, int64_t t, std::string* why) const {
    if (q > 0.0 && std::isfinite(q)) return true;
    std::ostringstream msg;
    msg << "ellipsoid degenerated at iteration " << t << ": "
        << (update_ == EllipsoidConfig::Update::kFactored ? "|B'a| = "
                                                          : "a'Da = ")
        << q << ", trace(D) = " << Trace();
    *why = msg.str();
    return false;
  }

  int dim_;
  EllipsoidConfig::Update update_;
  Eigen::VectorXd s_;
  Eigen::MatrixXd b_;  // factored form
  Eigen::MatrixXd d_;  // shape-matrix form
};

}  // namespace

EllipsoidResult RunEllipsoid(const Instance& inst, const SubDualOracle& oracle,
                             const EllipsoidConfig& config) {
  ValidateOrThrow(inst);
  if (inst.r.maxCoeff() > 1.0) {
    throw PreconditionError("RunEllipsoid: revenues must be normalized");
  }
  const Layout L{inst.n, inst.m};
  const int dim = L.Dim();
  const int64_t t_max = config.t_max > 0 ? config.t_max : DefaultTMax(inst);

  EllipsoidResult res;
  res.t_max = t_max;
  res.violated = ViolatedSets(inst.m);
  res.best = DualPoint::Zero(inst.n, inst.m);
  res.best.beta.setOnes();
  res.obj = res.best.Objective();

  Ellipsoid ell(dim, InitialRadius(inst), config.update);
  SparseCut objective_cut;
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) objective_cut.emplace_back(L.Alpha(i, j), -1.0);
  }
  for (int j = 0; j < inst.m; ++j) objective_cut.emplace_back(L.Beta(j), -1.0);

  bool just_updated = false;
  SparseCut a;
  AssortmentCut pending;
  while (res.iterations < t_max) {
    const DualPoint p = Unpack(L, ell.center());
    CutKind kind;
    int index = 0;
    a.clear();

    if (p.Objective() >= res.obj) {
      kind = CutKind::kObjective;
      a = objective_cut;
    } else {
      bool found = false;
      for (int i = 0; i < inst.n && !found; ++i) {
        for (int j = 0; j < inst.m && !found; ++j) {
          if (CouplingSlack(inst, p, i, j) < 0.0) {
            kind = CutKind::kCoupling;
            index = L.Alpha(i, j);
            for (int l = 0; l < inst.m; ++l) {
              double coef = 1.0;
              if (l == j) coef += 1.0 / inst.u(i, j);
              a.emplace_back(L.Alpha(i, l), coef);
            }
            a.emplace_back(L.Gamma(i, j), -1.0);
            found = true;
          }
        }
      }
      for (int i = 0; i < inst.n && !found; ++i) {
        for (int j = 0; j < inst.m && !found; ++j) {
          if (p.alpha(i, j) < 0.0) {
            kind = CutKind::kSign;
            index = L.Alpha(i, j);
            a.emplace_back(L.Alpha(i, j), 1.0);
            found = true;
          }
        }
      }
      for (int j = 0; j < inst.m && !found; ++j) {
        const SubDualResult sd = OracleCall(oracle, inst, j, p.gamma);
        if (sd.value > p.beta(j)) {
          kind = CutKind::kAssortment;
          index = j;
          a.emplace_back(L.Beta(j), 1.0);
          for (int i : sd.argmax) a.emplace_back(L.Gamma(i, j), 1.0);
          // Recorded once the cut has been applied.
          pending = {res.iterations, j, sd.argmax, sd.value, p.beta(j)};
          found = true;
        }
      }
      if (!found) {
        // Feasible center with a better objective: new incumbent.
        res.best = p;
        res.obj = p.Objective();
        res.obj_history.push_back(res.obj);
        if (config.record_trace) res.incumbents.push_back(p);
        just_updated = true;
        continue;
      }
    }

    std::string why;
    if (!ell.Cut(a, res.iterations, &why)) {
      if (config.on_breakdown == EllipsoidConfig::OnBreakdown::kAbort) {
        throw SolverError(why);
      }
      res.broke_down = true;
      res.breakdown = std::move(why);
      break;
    }
    if (kind == CutKind::kAssortment) {
      res.violated.Add(pending.j, pending.set);
      if (config.record_assortment_cuts) res.assortment_cuts.push_back(pending);
    }
    ++res.cuts[static_cast<int>(kind)];
    if (config.record_trace) {
      res.trace.push_back({res.iterations, kind, index, res.obj, just_updated});
    }
    just_updated = false;
    ++res.iterations;
    if (config.early_exit && ell.Trace() < config.early_exit_trace) {
      res.exited_early = true;
      break;
    }
  }
  return res;
}

Lp2ApproxResult SolveLp2Approx(const Instance& inst,
                               const SubDualOracle& oracle,
                               const EllipsoidConfig& config) {
  ValidateOrThrow(inst);
  const Instance normalized = NormalizeRevenues(inst);
  Lp2ApproxResult out;
  out.ellipsoid = RunEllipsoid(normalized, oracle, config);
  out.solution =
      SolveAuxPrimal(normalized, BuildAuxPrimal(normalized, out.ellipsoid.violated));
  // Report the objective in the caller's revenue units.
  double objective = 0.0;
  for (int j = 0; j < inst.m; ++j) {
    for (const auto& [C, prob] : out.solution.lambda[j]) {
      objective += prob * ExpectedRevenue(inst, j, C);
    }
  }
  out.solution.objective = objective;
  return out;
}

}  // namespace tsa
