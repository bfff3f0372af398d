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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Runtime budgets are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "tsa/cost_assortment.h"
#include "tsa/ellipsoid.h"
#include "tsa/evaluate.h"
#include "tsa/instance.h"
#include "tsa/lp.h"
#include "tsa/mnl.h"
#include "tsa/policies.h"
#include "tsa/random.h"
#include "tsa/rounding.h"

namespace tsa {
namespace {

namespace fs = std::filesystem;

constexpr uint64_t kSeed = 20260101;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Accumulates failures with the first few witnesses.
class Tally {
 public:
  void Check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (witnesses_.size() < 3) witnesses_.push_back(what());
  }
  void Note(const std::string& s) { notes_.push_back(s); }
  Verdict Result() const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failures";
    for (const auto& n : notes_) s << "; " << n;
    for (const auto& w : witnesses_) s << "; " << w;
    return {failures_ == 0, s.str()};
  }

 private:
  int64_t checks_ = 0;
  int64_t failures_ = 0;
  std::vector<std::string> witnesses_;
  std::vector<std::string> notes_;
};

std::string Num(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

std::vector<int> Identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Verdict FixtureRegression() {
  Tally t;
  const Instance inst = NonSubmodularExample();
  auto g = [&](std::initializer_list<int> c) {
    return OptimalRevenue(inst, 0, Subset(c)).value;
  };
  const struct {
    const char* name;
    double got, want;
  } values[] = {{"g({3})", g({2}), 1.5},
                {"g({1,3})", g({0, 2}), 2.0},
                {"g({2,3})", g({1, 2}), 1.8},
                {"g({1,2,3})", g({0, 1, 2}), 7.0 / 3.0}};
  for (const auto& v : values) {
    t.Check(std::abs(v.got - v.want) <= 1e-9,
            [&] { return std::string(v.name) + "=" + Num(v.got); });
  }
  const double small = MarginalRevenue(inst, 0, 0, Subset({2}));
  const double large = MarginalRevenue(inst, 0, 0, Subset({1, 2}));
  t.Check(std::abs(small - 0.5) <= 1e-9, [&] { return "g(1|{3})=" + Num(small); });
  t.Check(std::abs(large - 8.0 / 15.0) <= 1e-9,
          [&] { return "g(1|{2,3})=" + Num(large); });
  t.Check(small < large, [] { return "marginal gain does not increase"; });
  return t.Result();
}

Verdict RevenueOrderedVsBruteForce() {
  Tally t;
  Rng rng(DeriveSeed(kSeed, 2));
  for (int k = 0; k < 1000; ++k) {
    const int n = rng.UniformInt(1, 10);
    const Instance inst =
        Generate(InstanceKind::kUniformRandom, n, rng.UniformInt(1, 3), rng.Next());
    std::vector<int> items;
    for (int i = 0; i < n; ++i) {
      if (rng.Bernoulli(0.7)) items.push_back(i);
    }
    const Subset C(items);
    for (int j = 0; j < inst.m; ++j) {
      const double fast = OptimalRevenue(inst, j, C).value;
      const double slow = OptimalRevenueBruteForce(inst, j, C).value;
      t.Check(std::abs(fast - slow) <= 1e-9, [&] {
        return "instance " + std::to_string(k) + " C=" + C.ToString();
      });
    }
  }
  return t.Result();
}

Verdict RoundingDistribution() {
  Tally t;
  Rng rng(DeriveSeed(kSeed, 3));
  const int kRows = 1000;
  const int kDrawsPerRow = 100;  // 10^5 draws in total
  const int kLevels = 9;         // prefix sizes 0..8
  std::vector<double> expected(kLevels, 0.0), variance(kLevels, 0.0),
      observed(kLevels, 0.0);
  double choice_expected = 0.0, choice_variance = 0.0, choice_observed = 0.0;
  for (int k = 0; k < kRows; ++k) {
    const int m = rng.UniformInt(1, 8);
    std::vector<double> u(m), x(m, 0.0);
    for (double& v : u) v = rng.LogUniform(0.1, 10.0);
    // Any mixture of assortments induces a feasible marginal row; half the
    // rows use a single assortment so the capacity rows are tight.
    const int parts = k % 2 == 0 ? 1 : rng.UniformInt(2, 4);
    double left = 1.0;
    for (int p = 0; p < parts; ++p) {
      const double q = p + 1 == parts ? left : left * rng.Uniform();
      left -= q;
      std::vector<int> items;
      for (int j = 0; j < m; ++j) {
        if (rng.Bernoulli(0.6)) items.push_back(j);
      }
      const Subset S(items);
      for (int j : S) x[j] += q * ChoiceProbability(u, S, j);
    }
    const AssortmentDistribution d = MnlDistribution(x, u);
    double total = 0.0;
    bool nonnegative = true;
    for (const auto& [S, p] : d.support) {
      nonnegative = nonnegative && p >= 0.0;
      total += p;
    }
    t.Check(nonnegative, [&] { return "negative probability, row " + std::to_string(k); });
    t.Check(std::abs(total - 1.0) <= 1e-9,
            [&] { return "row " + std::to_string(k) + " sums to " + Num(total); });
    const double err = ValidateMarginals(d, u, x);
    t.Check(err <= 1e-9,
            [&] { return "row " + std::to_string(k) + " marginal error " + Num(err); });

    double x_total = 0.0;
    for (double v : x) x_total += v;
    choice_expected += kDrawsPerRow * x_total;
    choice_variance += kDrawsPerRow * x_total * (1.0 - x_total);
    for (size_t l = 0; l < d.support.size(); ++l) {
      const double p = d.support[l].second;
      expected[l] += kDrawsPerRow * p;
      variance[l] += kDrawsPerRow * p * (1.0 - p);
    }
    Rng draws(DeriveSeed(kSeed + 3, k));
    for (int s = 0; s < kDrawsPerRow; ++s) {
      const Subset S = d.Sample(draws);
      observed[S.size()] += 1.0;
      std::vector<double> w = {1.0};
      for (int j : S) w.push_back(u[j]);
      if (draws.Categorical(w) != 0) choice_observed += 1.0;
    }
  }
  double worst_z = 0.0;
  for (int l = 0; l < kLevels; ++l) {
    if (variance[l] == 0.0) continue;
    const double z = std::abs(observed[l] - expected[l]) / std::sqrt(variance[l]);
    worst_z = std::max(worst_z, z);
    t.Check(z <= 3.0, [&] {
      return "prefix size " + std::to_string(l) + " off by " + Num(z) + " SE";
    });
  }
  const double choice_z =
      std::abs(choice_observed - choice_expected) / std::sqrt(choice_variance);
  t.Check(choice_z <= 3.0,
          [&] { return "choice rate off by " + Num(choice_z) + " SE"; });
  t.Note("sampling worst |z| " + Num(std::max(worst_z, choice_z)));
  return t.Result();
}

Verdict RelaxationChain() {
  Tally t;
  for (int k = 0; k < 200; ++k) {
    const Instance inst =
        Generate(InstanceKind::kUniformRandom, 3, 2, DeriveSeed(kSeed + 4, k));
    const double v[] = {ExactStar(inst), ExactDpFtar(inst, Identity(3)),
                        ExactDpAtar(inst).value, Lp1ExactSmall(inst),
                        Lp2ExactSmall(inst).objective};
    for (int s = 0; s < 4; ++s) {
      t.Check(v[s] <= v[s + 1] + 1e-7, [&] {
        return "instance " + std::to_string(k) + " link " + std::to_string(s) +
               ": " + Num(v[s]) + " > " + Num(v[s + 1]);
      });
    }
  }
  return t.Result();
}

Verdict RandomizedStaticGuarantee() {
  Tally t;
  const ExactSubDualOracle oracle;
  double worst_general = 1e300, worst_uniform = 1e300;
  for (const bool uniform : {false, true}) {
    const double factor = uniform ? 1.0 - 1.0 / std::numbers::e : 0.5;
    for (int k = 0; k < 100; ++k) {
      const Instance inst =
          Generate(uniform ? InstanceKind::kSupplierUniform
                           : InstanceKind::kUniformRandom,
                   3, 3, DeriveSeed(kSeed + (uniform ? 51 : 50), k));
      const LpSolution lp = SolveLp2Approx(inst, oracle).solution;
      const double value = RandomizedStaticPolicy(inst, lp).ExactExpectedRevenue();
      const double opt = ExactDpAtar(inst).value;
      const double ratio = lp.objective > 0 ? value / lp.objective : 1.0;
      (uniform ? worst_uniform : worst_general) =
          std::min(uniform ? worst_uniform : worst_general, ratio);
      t.Check(value >= factor * lp.objective - 1e-9, [&] {
        return std::string(uniform ? "supplier-uniform" : "general") +
               " instance " + std::to_string(k) + ": " + Num(value) +
               " vs LP " + Num(lp.objective);
      });
      t.Check(value >= factor * opt - 1e-6, [&] {
        return "instance " + std::to_string(k) + ": " + Num(value) +
               " vs OPT " + Num(opt);
      });
    }
  }
  t.Note("min value/LP general " + Num(worst_general) + ", supplier-uniform " +
         Num(worst_uniform));
  return t.Result();
}

Verdict GreedyGuarantee() {
  Tally t;
  double worst_ratio = 1e300, worst_identity = 0.0;
  int64_t paths = 0;
  for (int k = 0; k < 100; ++k) {
    const auto kind = k % 2 == 0 ? InstanceKind::kSameOrderAdditive
                                 : InstanceKind::kSameOrderMultiplicative;
    const Instance inst = Generate(kind, 3, 3, DeriveSeed(kSeed + 6, k));
    const SameOrderGreedy greedy(inst, DetectSameOrder(inst));
    const SameOrderGreedy::Evaluation ev = greedy.EvaluateExact(true);
    const double opt = ExactDpAtar(inst).value;
    if (opt > 0) worst_ratio = std::min(worst_ratio, ev.expected_revenue / opt);
    worst_identity = std::max(worst_identity, ev.max_identity_error);
    paths += ev.paths;
    t.Check(ev.expected_revenue >= 0.5 * opt - 1e-9, [&] {
      return "instance " + std::to_string(k) + ": " + Num(ev.expected_revenue) +
             " vs OPT " + Num(opt);
    });
    t.Check(ev.max_identity_error <= 1e-12, [&] {
      return "instance " + std::to_string(k) + " identity error " +
             Num(ev.max_identity_error);
    });
    t.Check(ev.max_step_gap <= 1e-12, [&] {
      return "instance " + std::to_string(k) + " step gap " + Num(ev.max_step_gap);
    });
  }
  t.Note(std::to_string(paths) + " paths, min value/OPT " + Num(worst_ratio) +
         ", max identity error " + Num(worst_identity));
  return t.Result();
}

Verdict EllipsoidFidelity() {
  Tally t;
  Rng rng(DeriveSeed(kSeed, 7));
  const ExactSubDualOracle oracle;
  double worst_gap = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Instance inst = Generate(InstanceKind::kUniformRandom,
                                   rng.UniformInt(1, 4), rng.UniformInt(1, 2),
                                   rng.Next());
    EllipsoidConfig config;
    config.record_trace = true;
    const Lp2ApproxResult res = SolveLp2Approx(inst, oracle, config);
    const double exact = Lp2ExactSmall(inst).objective;
    const double got = res.solution.objective;
    worst_gap = std::max(worst_gap, exact - got);
    const std::string id = "instance " + std::to_string(k);
    t.Check(got >= exact - 1e-4 && got <= exact + 1e-9, [&] {
      return id + ": " + Num(got) + " vs exact " + Num(exact);
    });
    const EllipsoidResult& e = res.ellipsoid;
    t.Check(e.violated.Total() <= e.iterations,
            [&] { return id + " has more violated sets than iterations"; });
    const Instance norm = NormalizeRevenues(inst);
    DualPoint start = DualPoint::Zero(inst.n, inst.m);
    start.beta.setOnes();
    t.Check(CheckDualFeasibility(norm, start, true).feasible(),
            [&] { return id + " initial incumbent infeasible"; });
    double previous = start.Objective();
    for (size_t s = 0; s < e.incumbents.size(); ++s) {
      const double obj = e.incumbents[s].Objective();
      t.Check(obj <= previous,
              [&] { return id + " incumbent objective increased"; });
      t.Check(obj == e.obj_history[s],
              [&] { return id + " history disagrees with incumbent"; });
      previous = obj;
      t.Check(CheckDualFeasibility(norm, e.incumbents[s], true).feasible(),
              [&] { return id + " incumbent " + std::to_string(s) + " infeasible"; });
    }
  }
  t.Note("worst shortfall " + Num(worst_gap));
  return t.Result();
}

Verdict CorrelationGapBounds() {
  Tally t;
  const double e_ratio = std::numbers::e / (std::numbers::e - 1.0);
  double worst[2] = {0.0, 0.0};
  for (const bool uniform : {false, true}) {
    const double bound = uniform ? e_ratio : 2.0;
    for (int k = 0; k < 1000; ++k) {
      Rng rng(DeriveSeed(kSeed + (uniform ? 81 : 80), k));
      const int n = rng.UniformInt(1, 6);
      const Instance inst = Generate(uniform ? InstanceKind::kSupplierUniform
                                             : InstanceKind::kUniformRandom,
                                     n, 1, rng.Next());
      const SubsetDistribution D = SubsetDistribution::RandomCorrelated(n, rng);
      const CorrelationGap gap = CorrelationGapCheck(inst, 0, D);
      if (gap.ratio) {
        worst[uniform] = std::max(worst[uniform], *gap.ratio);
        t.Check(*gap.ratio <= bound + 1e-9, [&] {
          return "distribution " + std::to_string(k) + " ratio " + Num(*gap.ratio);
        });
      }
      for (const auto& degenerate :
           {SubsetDistribution::PointMass(D.support.front().first),
            SubsetDistribution::Product(D.Marginals(n))}) {
        const CorrelationGap one = CorrelationGapCheck(inst, 0, degenerate);
        if (!one.ratio) continue;
        t.Check(std::abs(*one.ratio - 1.0) <= 1e-12, [&] {
          return "degenerate ratio " + Num(*one.ratio);
        });
      }
    }
  }
  t.Note("max ratio general " + Num(worst[0]) + ", supplier-uniform " +
         Num(worst[1]));
  return t.Result();
}

Verdict CostSharing() {
  Tally t;
  int64_t triples = 0;
  for (int k = 0; k < 10; ++k) {
    const Instance inst =
        Generate(InstanceKind::kUniformRandom, 8, 1, DeriveSeed(kSeed + 9, k));
    const CheckReport r = CostSharingCheck(inst, 0, 100, DeriveSeed(kSeed + 90, k));
    triples += 100;
    t.Check(r.passed(), [&] { return r.witnesses.front(); });
  }
  const CheckReport control = SubmodularityCheckExhaustive(NonSubmodularExample(), 0);
  t.Check(!control.passed(),
          [] { return "plain submodularity unexpectedly holds on the fixture"; });
  t.Note(std::to_string(triples) + " triples; negative control: " +
         (control.witnesses.empty() ? "none" : control.witnesses.front()));
  return t.Result();
}

Verdict InterleavedPartition() {
  Tally t;
  int64_t pairs = 0;
  for (int k = 0; k < 10; ++k) {
    const auto kind = k % 2 == 0 ? InstanceKind::kSameOrderAdditive
                                 : InstanceKind::kSameOrderMultiplicative;
    const Instance inst = Generate(kind, 6, 2, DeriveSeed(kSeed + 10, k));
    const std::vector<int> order = *DetectSameOrder(inst);
    for (int j = 0; j < inst.m; ++j) {
      const CheckReport r = InterleavedPartitionCheck(
          inst, j, order, 50, DeriveSeed(kSeed + 100 + j, k));
      pairs += r.checks;
      t.Check(r.passed(), [&] { return r.witnesses.front(); });
    }
  }
  t.Note(std::to_string(pairs) + " pairs");
  return t.Result();
}

int RunCommand(const std::string& args) {
  const std::string cmd =
      std::string(TSA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict CliDeterminism() {
  Tally t;
  const fs::path dir = fs::temp_directory_path() / "tsa_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const std::string& name) { return (dir / name).string(); };

  // Inputs shared by both repetitions.
  t.Check(RunCommand("gen uniform-random 3 2 --seed 5 --out " + p("u.json")) == 0,
          [] { return "gen failed"; });
  t.Check(RunCommand("gen same-order-additive 4 2 --seed 6 --out " + p("s.json")) == 0,
          [] { return "gen failed"; });

  struct Case {
    std::string args;  // {o} expands to the output prefix
    std::vector<std::string> outputs;
  };
  const std::vector<Case> cases = {
      {"gen supplier-uniform 5 3 --seed 11 --out {o}inst.json", {"inst.json"}},
      {"solve " + p("u.json") + " --out {o}solve.csv --solution {o}sol.json "
       "--dump-lp {o}lp.json --trace {o}trace.csv",
       {"solve.csv", "sol.json", "lp.json", "trace.csv"}},
      {"solve " + p("u.json") + " --delta 0.25 --t-max 30000 --format summary "
       "--out {o}solve.json",
       {"solve.json"}},
      {"run " + p("u.json") + " --policy rand-static --trials 20000 --seed 3 "
       "--threads 4 --out {o}rand.csv",
       {"rand.csv"}},
      {"run " + p("s.json") + " --policy greedy --trials 20000 --seed 3 "
       "--threads 3 --format summary --out {o}greedy.json",
       {"greedy.json"}},
      {"run " + p("u.json") + " --policy dp --out {o}dp.csv", {"dp.csv"}},
      {"run " + p("u.json") + " --policy ftar --out {o}ftar.csv", {"ftar.csv"}},
      {"run " + p("u.json") + " --policy star --out {o}star.csv", {"star.csv"}},
      {"verify --suite all --seed 4 --trials 200 --out {o}verify.csv",
       {"verify.csv"}},
  };
  for (const Case& c : cases) {
    for (const char* rep : {"a_", "b_"}) {
      std::string args = c.args;
      for (size_t at; (at = args.find("{o}")) != std::string::npos;) {
        args.replace(at, 3, p(rep));
      }
      t.Check(RunCommand(args) == 0, [&] { return "command failed: " + args; });
    }
    for (const std::string& out : c.outputs) {
      const std::string a = Slurp(p("a_" + out)), b = Slurp(p("b_" + out));
      t.Check(!a.empty() && a == b, [&] { return out + " differs between runs"; });
    }
  }
  fs::remove_all(dir);
  return t.Result();
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no runtime budget
  Verdict (*run)();
};

}  // namespace
}  // namespace tsa

int main() {
  using tsa::Criterion;
  const Criterion criteria[] = {
      {1, "fixture revenue values and marginal-gain witness", 1.0,
       tsa::FixtureRegression},
      {2, "revenue-ordered optimum equals brute force", 30.0,
       tsa::RevenueOrderedVsBruteForce},
      {3, "marginal rounding distribution", 60.0, tsa::RoundingDistribution},
      {4, "static <= fixed-order <= adaptive <= assortment LP <= marginal LP",
       300.0, tsa::RelaxationChain},
      {5, "randomized static policy guarantee", 600.0,
       tsa::RandomizedStaticGuarantee},
      {6, "same-order greedy guarantee and dual identity", 600.0,
       tsa::GreedyGuarantee},
      {7, "ellipsoid fidelity", 600.0, tsa::EllipsoidFidelity},
      {8, "correlation gap bounds", 120.0, tsa::CorrelationGapBounds},
      {9, "cost-sharing scheme", 30.0, tsa::CostSharing},
      {10, "interleaved-partition inequality", 60.0, tsa::InterleavedPartition},
      {11, "CLI determinism", 0.0, tsa::CliDeterminism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    tsa::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool pass = v.pass;
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      pass = false;
      v.detail += "; over runtime budget of " + tsa::Num(c.budget_seconds) + "s";
    }
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s (%s; %.2fs)\n", pass ? "PASS" : "FAIL",
                c.id, c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of 11 criteria passed\n", 11 - failed);
  return failed == 0 ? 0 : 1;
}
