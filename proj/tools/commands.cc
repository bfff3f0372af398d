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

#include "commands.h"

#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

#include "report.h"
#include "tsa/cost_assortment.h"
#include "tsa/ellipsoid.h"
#include "tsa/errors.h"
#include "tsa/evaluate.h"
#include "tsa/instance.h"
#include "tsa/lp.h"
#include "tsa/policies.h"

namespace tsa::cli {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::unique_ptr<SubDualOracle> OracleFor(double delta) {
  OracleConfig config;
  if (delta > 0.0) {
    config.kind = OracleConfig::Kind::kThreshold;
    config.delta = delta;
  }
  return MakeOracle(config);
}

// Exact marginal LP is cheap enough to report alongside for tiny inputs.
bool ExactLpAffordable(const Instance& inst) {
  return inst.n <= 8 && inst.m <= 4;
}

bool DpAffordable(const Instance& inst) { return inst.n <= 4 && inst.m <= 4; }

nlohmann::ordered_json OrNull(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json();
}

std::string JoinInts(const std::vector<int>& v, char sep) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

// "budget" when the full iteration budget was spent.
std::string Termination(const EllipsoidResult& e) {
  if (e.broke_down) return "breakdown";
  if (e.exited_early) return "early-exit";
  return "budget";
}

}  // namespace

int CmdGen(const GenOptions& opt) {
  const Instance inst = Generate(ParseInstanceKind(opt.kind), opt.n, opt.m,
                                 opt.seed);
  Emit(opt.out, InstanceToJson(inst));
  return kExitOk;
}

int CmdSolve(const SolveOptions& opt) {
  const Format format = ParseFormat(opt.format);
  const Instance inst = ReadInstanceFile(opt.instance);
  if (!(opt.delta >= 0.0 && opt.delta < 1.0)) {
    throw std::invalid_argument("--delta must lie in [0, 1)");
  }
  const auto oracle = OracleFor(opt.delta);
  EllipsoidConfig config;
  config.t_max = opt.t_max;
  config.early_exit = opt.early_exit;
  config.record_trace = !opt.trace.empty();
  const Lp2ApproxResult res = SolveLp2Approx(inst, *oracle, config);
  const Instance normalized = NormalizeRevenues(inst);
  const double scale = normalized.revenue_scale / inst.revenue_scale;

  const auto problems = CheckLpSolution(inst, res.solution);
  if (!problems.empty()) {
    throw SolverError("restricted LP solution fails validation: " +
                      problems.front());
  }
  if (!opt.solution.empty()) Emit(opt.solution, LpSolutionToJson(res.solution));
  if (!opt.dump_lp.empty()) {
    const AuxPrimal aux = BuildAuxPrimal(normalized, res.ellipsoid.violated);
    const LpResult lp_res = SolveLp(aux.lp);
    Emit(opt.dump_lp, LpToJson(aux.lp, &lp_res));
  }
  if (!opt.trace.empty()) {
    std::string text = "t,cut,index,obj,incumbent_updated\n";
    for (const auto& rec : res.ellipsoid.trace) {
      text += std::to_string(rec.t) + "," + CutKindName(rec.cut) + "," +
              std::to_string(rec.index) + "," +
              nlohmann::json(rec.obj * scale).dump() + "," +
              (rec.incumbent_updated ? "1" : "0") + "\n";
    }
    Emit(opt.trace, text);
  }

  std::optional<double> exact, ratio;
  if (ExactLpAffordable(inst)) {
    exact = Lp2ExactSmall(inst).objective;
    if (*exact > 0.0) ratio = res.solution.objective / *exact;
  }
  std::vector<int> per_supplier;
  for (int j = 0; j < inst.m; ++j) {
    per_supplier.push_back(static_cast<int>(res.ellipsoid.violated.of(j).size()));
  }

  Report report("solve");
  report.Config("instance", opt.instance);
  report.Config("n", inst.n);
  report.Config("m", inst.m);
  report.Config("delta", opt.delta);
  report.Config("oracle", oracle->name());
  report.Config("t_max", res.ellipsoid.t_max);
  report.Config("early_exit", opt.early_exit);
  report.Config("guarantee", 1.0 - opt.delta);
  report.Columns({"lp_objective", "dual_objective", "iterations",
                  "violated_total", "violated_per_supplier", "cuts_objective",
                  "cuts_coupling", "cuts_sign", "cuts_assortment",
                  "termination", "exact_objective", "ratio"});
  report.Row({res.solution.objective, res.ellipsoid.obj * scale,
              res.ellipsoid.iterations, res.ellipsoid.violated.Total(),
              JoinInts(per_supplier, ';'), res.ellipsoid.cuts[0],
              res.ellipsoid.cuts[1], res.ellipsoid.cuts[2],
              res.ellipsoid.cuts[3], Termination(res.ellipsoid), OrNull(exact),
              OrNull(ratio)});
  Emit(opt.out, report.Render(format));
  return kExitOk;
}

int CmdRun(const RunOptions& opt) {
  const Format format = ParseFormat(opt.format);
  const Instance inst = ReadInstanceFile(opt.instance);
  if (opt.trials < 1) throw std::invalid_argument("--trials must be >= 1");

  Report report("run");
  report.Config("instance", opt.instance);
  report.Config("n", inst.n);
  report.Config("m", inst.m);
  report.Config("policy", opt.policy);
  report.Config("seed", opt.seed);

  std::optional<double> expected, mc_mean, mc_stderr, lp_objective, dp_opt;
  std::optional<int64_t> trials;
  std::string method = "exact";
  bool heuristic = false;
  std::string order;

  auto monte_carlo = [&](const Sampler& sampler) {
    const MonteCarloResult mc =
        MonteCarlo(sampler, opt.trials, opt.seed, opt.threads);
    mc_mean = mc.mean;
    mc_stderr = mc.std_error;
    trials = opt.trials;
  };

  if (opt.policy == "rand-static") {
    LpSolution lp;
    if (!opt.solution.empty()) {
      lp = LpSolutionFromJson(ReadFile(opt.solution));
      const auto problems = CheckLpSolution(inst, lp);
      if (!problems.empty()) {
        throw PreconditionError("solution is not feasible for the instance: " +
                                problems.front());
      }
      report.Config("solution", opt.solution);
    } else {
      const auto oracle = OracleFor(opt.delta);
      EllipsoidConfig config;
      config.t_max = opt.t_max;
      lp = SolveLp2Approx(inst, *oracle, config).solution;
      report.Config("delta", opt.delta);
      report.Config("t_max", opt.t_max > 0 ? opt.t_max : DefaultTMax(inst));
      // Constant revenue columns tighten the correlation gap to e/(e-1).
      bool columns_constant = true;
      for (int j = 0; j < inst.m; ++j) {
        for (int i = 1; i < inst.n; ++i) {
          if (inst.r(i, j) != inst.r(0, j)) columns_constant = false;
        }
      }
      const double factor =
          columns_constant ? 1.0 - 1.0 / std::numbers::e : 0.5;
      report.Config("guarantee", (1.0 - opt.delta) * factor);
    }
    lp_objective = lp.objective;
    const RandomizedStaticPolicy policy(inst, lp);
    if (inst.n <= 15) {
      expected = policy.ExactExpectedRevenue();
    } else {
      method = "monte-carlo";
    }
    monte_carlo([&](uint64_t seed) { return policy.Sample(seed).revenue; });
    if (!expected) expected = mc_mean;
  } else if (opt.policy == "greedy") {
    const SameOrderGreedy policy(inst, DetectSameOrder(inst), opt.force_order);
    heuristic = policy.heuristic();
    order = JoinInts(policy.order(), ';');
    if (inst.n <= 4 && inst.m <= 4) {
      expected = policy.EvaluateExact(false).expected_revenue;
    } else {
      method = "monte-carlo";
    }
    monte_carlo([&](uint64_t seed) { return policy.Sample(seed).revenue; });
    if (!expected) expected = mc_mean;
  } else if (opt.policy == "dp") {
    expected = ExactDpAtar(inst).value;
  } else if (opt.policy == "ftar") {
    std::vector<int> identity(inst.n);
    for (int i = 0; i < inst.n; ++i) identity[i] = i;
    order = JoinInts(identity, ';');
    expected = ExactDpFtar(inst, identity);
  } else if (opt.policy == "star") {
    expected = ExactStar(inst);
  } else {
    throw std::invalid_argument("unknown policy '" + opt.policy + "'");
  }

  std::optional<double> ratio;
  if (DpAffordable(inst)) {
    dp_opt = opt.policy == "dp" ? *expected : ExactDpAtar(inst).value;
    if (*dp_opt > 0.0) ratio = *expected / *dp_opt;
  }
  report.Config("trials", opt.trials);
  report.Config("force_order", opt.force_order);
  report.Columns({"policy", "expected_revenue", "method", "mc_mean",
                  "mc_stderr", "trials", "dp_opt", "ratio_vs_dp",
                  "lp_objective", "heuristic", "order"});
  report.Row({opt.policy, OrNull(expected), method, OrNull(mc_mean),
              OrNull(mc_stderr),
              trials ? nlohmann::ordered_json(*trials) : nlohmann::ordered_json(),
              OrNull(dp_opt), OrNull(ratio), OrNull(lp_objective), heuristic,
              order});
  Emit(opt.out, report.Render(format));
  return kExitOk;
}

}  // namespace tsa::cli
