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

// Property suites behind `tsa verify`.

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "commands.h"
#include "report.h"
#include "tsa/evaluate.h"
#include "tsa/instance.h"
#include "tsa/lp.h"
#include "tsa/mnl.h"
#include "tsa/policies.h"
#include "tsa/random.h"

namespace tsa::cli {
namespace {

struct Outcome {
  std::string check;
  int64_t cases = 0;
  int64_t violations = 0;
  double worst = 0.0;
  std::string detail;
};

using Suite = std::function<std::vector<Outcome>(uint64_t seed, int64_t trials)>;

Outcome FromReport(const std::string& check, const CheckReport& r) {
  return {check, r.checks, r.violations, r.worst,
          r.witnesses.empty() ? "" : r.witnesses.front()};
}

Outcome Near(const std::string& check, double got, double want, double tol) {
  const double err = std::abs(got - want);
  std::ostringstream s;
  s.precision(17);
  s << "got " << got << " want " << want;
  return {check, 1, err > tol ? 1 : 0, err, s.str()};
}

// A check that must find a violation; passes when the report has one.
Outcome ExpectViolation(const std::string& check, const CheckReport& r) {
  return {check, r.checks, r.passed() ? 1 : 0, 0.0,
          r.witnesses.empty() ? "no witness found" : r.witnesses.front()};
}

Subset S(std::initializer_list<int> items) { return Subset(items); }

std::vector<Outcome> RevenueWitness(uint64_t, int64_t) {
  const Instance inst = NonSubmodularExample();
  auto g = [&](const Subset& C) { return OptimalRevenue(inst, 0, C).value; };
  std::vector<Outcome> out;
  out.push_back(Near("g({3})", g(S({2})), 1.5, 1e-9));
  out.push_back(Near("g({1,3})", g(S({0, 2})), 2.0, 1e-9));
  out.push_back(Near("g({2,3})", g(S({1, 2})), 1.8, 1e-9));
  out.push_back(Near("g({1,2,3})", g(S({0, 1, 2})), 7.0 / 3.0, 1e-9));
  const double small = MarginalRevenue(inst, 0, 0, S({2}));
  const double large = MarginalRevenue(inst, 0, 0, S({1, 2}));
  out.push_back(Near("g(1|{3})", small, 0.5, 1e-9));
  out.push_back(Near("g(1|{2,3})", large, 8.0 / 15.0, 1e-9));
  out.push_back({"g(1|{3}) < g(1|{2,3})", 1, small < large ? 0 : 1,
                 0.0, ""});
  out.push_back(ExpectViolation("plain submodularity fails",
                                SubmodularityCheckExhaustive(inst, 0)));
  out.push_back(FromReport("submodular order (1,2,3)",
                           SubmodularOrderCheckExhaustive(inst, 0, {0, 1, 2})));
  double shares = 0.0;
  for (int i = 0; i < 3; ++i) shares += CostShare(inst, 0, i, S({0, 1, 2}));
  out.push_back(Near("sum of cost shares on {1,2,3}", shares, 7.0 / 3.0, 1e-9));
  return out;
}

std::vector<Outcome> Gap(uint64_t seed, int64_t trials) {
  const double e_ratio = std::numbers::e / (std::numbers::e - 1.0);
  std::vector<Outcome> out;
  for (auto kind : {InstanceKind::kUniformRandom, InstanceKind::kSupplierUniform}) {
    const bool uniform = kind == InstanceKind::kSupplierUniform;
    const double bound = uniform ? e_ratio : 2.0;
    Outcome gap, exact;
    gap.check = std::string("ratio <= ") + (uniform ? "e/(e-1)" : "2") + " (" +
                std::string(KindName(kind)) + ")";
    exact.check = std::string("point mass and product ratio = 1 (") +
                  std::string(KindName(kind)) + ")";
    double max_ratio = 0.0;
    for (int64_t t = 0; t < trials; ++t) {
      Rng rng(DeriveSeed(seed + (uniform ? 1 : 0), t));
      const int n = rng.UniformInt(2, 6);
      const Instance inst = Generate(kind, n, 1, rng.Next());
      const auto D = SubsetDistribution::RandomCorrelated(n, rng);
      const CorrelationGap cg = CorrelationGapCheck(inst, 0, D);
      if (cg.ratio) {
        ++gap.cases;
        max_ratio = std::max(max_ratio, *cg.ratio);
        if (*cg.ratio > bound + 1e-9) {
          ++gap.violations;
          gap.worst = std::max(gap.worst, *cg.ratio - bound);
        }
      }
      // Degenerate distributions must reproduce the independent value.
      const Subset A = D.support.front().first;
      for (const auto& dist :
           {SubsetDistribution::PointMass(A),
            SubsetDistribution::Product(D.Marginals(n))}) {
        const CorrelationGap one = CorrelationGapCheck(inst, 0, dist);
        if (!one.ratio) continue;
        ++exact.cases;
        const double err = std::abs(*one.ratio - 1.0);
        exact.worst = std::max(exact.worst, err);
        if (err > 1e-12) ++exact.violations;
      }
    }
    std::ostringstream s;
    s.precision(12);
    s << "max ratio " << max_ratio;
    gap.detail = s.str();
    out.push_back(gap);
    out.push_back(exact);
  }
  return out;
}

std::vector<Outcome> Sharing(uint64_t seed, int64_t trials) {
  CheckReport total;
  const int64_t instances = 10;
  for (int64_t k = 0; k < instances; ++k) {
    const Instance inst =
        Generate(InstanceKind::kUniformRandom, 8, 1, DeriveSeed(seed, k));
    const int64_t share = trials / instances + (k < trials % instances);
    const CheckReport r =
        CostSharingCheck(inst, 0, share, DeriveSeed(seed + 1, k));
    total.checks += r.checks;
    total.violations += r.violations;
    total.worst = std::max(total.worst, r.worst);
    if (total.witnesses.empty() && !r.witnesses.empty()) {
      total.witnesses = r.witnesses;
    }
  }
  return {FromReport("cross-monotonicity and budget balance (n=8)", total),
          ExpectViolation("plain submodularity fails on the 3-customer fixture",
                          SubmodularityCheckExhaustive(NonSubmodularExample(), 0))};
}

std::vector<Outcome> Order(uint64_t seed, int64_t trials) {
  const Instance fixture = NonSubmodularExample();
  std::vector<Outcome> out;
  out.push_back(FromReport("fixture, descending revenue order",
                           SubmodularOrderCheckExhaustive(fixture, 0, {0, 1, 2})));
  out.push_back(ExpectViolation(
      "fixture, reversed order has a witness",
      SubmodularOrderCheckExhaustive(fixture, 0, {2, 1, 0})));

  CheckReport order_total, interleaved_total;
  auto merge = [](CheckReport& into, const CheckReport& r) {
    into.checks += r.checks;
    into.violations += r.violations;
    into.worst = std::max(into.worst, r.worst);
    if (into.witnesses.empty() && !r.witnesses.empty()) into.witnesses = r.witnesses;
  };
  const int64_t instances = 10;
  for (int64_t k = 0; k < instances; ++k) {
    const auto kind = k % 2 == 0 ? InstanceKind::kSameOrderAdditive
                                 : InstanceKind::kSameOrderMultiplicative;
    const Instance inst = Generate(kind, 6, 2, DeriveSeed(seed, k));
    const std::vector<int> order = *DetectSameOrder(inst);
    const int64_t share = trials / instances + (k < trials % instances);
    for (int j = 0; j < inst.m; ++j) {
      merge(order_total,
            SubmodularOrderCheck(inst, j, order, share, DeriveSeed(seed + 1, k)));
      merge(interleaved_total,
            InterleavedPartitionCheck(inst, j, order, share,
                                      DeriveSeed(seed + 2, k)));
    }
  }
  out.push_back(FromReport("submodular order, same-order n=6", order_total));
  out.push_back(FromReport("interleaved partition, same-order n=6",
                           interleaved_total));
  return out;
}

std::vector<Outcome> Chain(uint64_t seed, int64_t trials) {
  const int64_t instances = std::max<int64_t>(1, trials / 5);
  const char* names[] = {"static <= fixed-order", "fixed-order <= adaptive",
                         "adaptive <= assortment LP",
                         "assortment LP <= marginal LP"};
  std::vector<Outcome> out(4);
  for (int k = 0; k < 4; ++k) out[k].check = names[k];
  for (int64_t t = 0; t < instances; ++t) {
    const Instance inst =
        Generate(InstanceKind::kUniformRandom, 3, 2, DeriveSeed(seed, t));
    const double values[] = {ExactStar(inst), ExactDpFtar(inst, {0, 1, 2}),
                             ExactDpAtar(inst).value, Lp1ExactSmall(inst),
                             Lp2ExactSmall(inst).objective};
    for (int k = 0; k < 4; ++k) {
      ++out[k].cases;
      const double excess = values[k] - values[k + 1];
      if (excess > 1e-7) {
        ++out[k].violations;
        out[k].worst = std::max(out[k].worst, excess);
        if (out[k].detail.empty()) out[k].detail = "instance " + std::to_string(t);
      }
    }
  }
  return out;
}

}  // namespace

int CmdVerify(const VerifyOptions& opt) {
  const Format format = ParseFormat(opt.format);
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"appendix-a", RevenueWitness}, {"gap", Gap},     {"sharing", Sharing},
      {"order", Order},          {"chain", Chain},
  };
  bool known = opt.suite == "all";
  for (const auto& [name, fn] : suites) known = known || name == opt.suite;
  if (!known) throw std::invalid_argument("unknown suite '" + opt.suite + "'");
  if (opt.trials < 1) throw std::invalid_argument("--trials must be >= 1");

  Report report("verify");
  report.Config("suite", opt.suite);
  report.Config("seed", opt.seed);
  report.Config("trials", opt.trials);
  report.Columns({"suite", "check", "cases", "violations", "worst", "status",
                  "detail"});
  bool all_pass = true;
  for (const auto& [name, fn] : suites) {
    if (opt.suite != "all" && opt.suite != name) continue;
    for (const Outcome& o : fn(opt.seed, opt.trials)) {
      const bool pass = o.violations == 0;
      all_pass = all_pass && pass;
      report.Row({name, o.check, o.cases, o.violations, o.worst,
                  pass ? "pass" : "FAIL", o.detail});
    }
  }
  Emit(opt.out, report.Render(format));
  return all_pass ? kExitOk : kExitVerify;
}

}  // namespace tsa::cli
