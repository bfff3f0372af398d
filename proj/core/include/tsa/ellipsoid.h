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

// Central-cut ellipsoid method on the dual of the marginal LP, with the
// assortment constraint family separated by a SubDualOracle.
//
// The center s has dimension N = 2nm + m, laid out as (alpha, beta, gamma)
// with alpha and gamma row-major in (i, j). Every iteration looks for a
// violated constraint in this order:
//
//   1. objective:    sum beta + sum alpha >= obj        cut a = -(1,..,1,0..)
//   2. coupling:     alpha_ij/u_ij + sum_l alpha_il - gamma_ij < 0
//   3. sign:         alpha_ij < 0
//   4. assortment:   oracle finds C with RevCost_j(C, gamma) > beta_j; C is
//                    recorded in V_j
//
// If nothing is violated the center becomes the incumbent and the loop
// re-enters without counting an iteration. Each cut keeps {s' : a's' >= a's}.
// The sets V_j then define a restricted primal whose optimum is a
// (1 - delta)-approximate solution of the marginal LP.

#ifndef TSA_ELLIPSOID_H_
#define TSA_ELLIPSOID_H_

#include <cstdint>
#include <string>
#include <vector>

#include "tsa/cost_assortment.h"
#include "tsa/instance.h"
#include "tsa/lp.h"

namespace tsa {

enum class CutKind { kObjective, kCoupling, kSign, kAssortment };

const char* CutKindName(CutKind kind);

struct EllipsoidConfig {
  // 0 selects DefaultTMax(inst).
  int64_t t_max = 0;
  // Stop once trace(D) < early_exit_trace. Off by default so the full budget
  // is spent.
  bool early_exit = false;
  double early_exit_trace = 1e-24;
  enum class Update {
    kFactored,     // D = B B', rank-one update of B
    kShapeMatrix,  // D updated directly
  };
  Update update = Update::kFactored;
  // What to do when a cut finds a'Da <= 0 or non-finite. In double precision
  // a thin axis underflows long before the size-based budget runs out;
  // kStop ends the run there and keeps everything gathered so far, kAbort
  // throws SolverError with diagnostics.
  enum class OnBreakdown { kStop, kAbort };
  OnBreakdown on_breakdown = OnBreakdown::kStop;
  bool record_trace = false;
  bool record_assortment_cuts = false;
};

struct TraceRecord {
  int64_t t = 0;
  CutKind cut = CutKind::kObjective;
  int index = 0;  // flattened (i, j), or supplier j for assortment cuts
  double obj = 0.0;
  bool incumbent_updated = false;  // set on the cut that follows an update
};

struct AssortmentCut {
  int64_t t = 0;
  int j = 0;
  Subset set;
  double value = 0.0;  // RevCost_j at the cut
  double beta = 0.0;   // beta_j at the cut
};

struct EllipsoidResult {
  ViolatedSets violated;
  DualPoint best;
  double obj = 0.0;
  int64_t iterations = 0;
  int64_t t_max = 0;
  int64_t cuts[4] = {0, 0, 0, 0};  // indexed by CutKind
  // Incumbent objective after every update, in order.
  std::vector<double> obj_history;
  std::vector<DualPoint> incumbents;  // filled when record_trace is set
  std::vector<TraceRecord> trace;
  std::vector<AssortmentCut> assortment_cuts;
  bool exited_early = false;
  // Set when the run ended on numerical breakdown under kStop.
  bool broke_down = false;
  std::string breakdown;  // diagnostics, empty unless broke_down
};

// rho = 10 (m + nm) max(1, max_ij 1/u_ij).
double InitialRadius(const Instance& inst);
// ceil(50 N^2 ln(10 N rho)), N = 2nm + m.
int64_t DefaultTMax(const Instance& inst);

// Requires max r <= 1 (normalized revenues). On numerical breakdown either
// stops or throws SolverError, per config.on_breakdown.
EllipsoidResult RunEllipsoid(const Instance& inst, const SubDualOracle& oracle,
                             const EllipsoidConfig& config = {});

struct Lp2ApproxResult {
  LpSolution solution;  // objective in the instance's revenue units
  EllipsoidResult ellipsoid;  // on the normalized instance
};

// Normalizes revenues, runs the ellipsoid method, and solves the restricted
// primal on the recorded sets.
Lp2ApproxResult SolveLp2Approx(const Instance& inst,
                               const SubDualOracle& oracle,
                               const EllipsoidConfig& config = {});

}  // namespace tsa

#endif  // TSA_ELLIPSOID_H_
