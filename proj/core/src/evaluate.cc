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

#include "tsa/evaluate.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tsa/errors.h"
#include "tsa/mnl.h"
#include "tsa/policies.h"

namespace tsa {

MonteCarloResult MonteCarlo(const Sampler& sampler, int64_t trials,
                            uint64_t master_seed, int threads) {
  if (trials < 1) throw std::invalid_argument("MonteCarlo: trials < 1");
  std::vector<double> values(trials);
  auto work = [&](int64_t begin, int64_t end) {
    for (int64_t t = begin; t < end; ++t) {
      values[t] = sampler(DeriveSeed(master_seed, static_cast<uint64_t>(t)));
    }
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(trials)));
  if (threads == 1) {
    work(0, trials);
  } else {
    std::vector<std::thread> pool;
    const int64_t chunk = (trials + threads - 1) / threads;
    for (int k = 0; k < threads; ++k) {
      const int64_t begin = k * chunk;
      const int64_t end = std::min(trials, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  MonteCarloResult res;
  res.trials = trials;
  double sum = 0.0;
  for (double v : values) sum += v;
  res.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - res.mean) * (v - res.mean);
    res.std_error =
        std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
  }
  return res;
}

std::vector<double> SubsetDistribution::Marginals(int n) const {
  std::vector<double> q(n, 0.0);
  for (const auto& [A, p] : support) {
    for (int i : A) q[i] += p;
  }
  return q;
}

SubsetDistribution SubsetDistribution::PointMass(const Subset& A) {
  return {{{A, 1.0}}};
}

SubsetDistribution SubsetDistribution::Product(
    const std::vector<double>& marginals) {
  const int n = static_cast<int>(marginals.size());
  CheckSize(n <= 20, "SubsetDistribution::Product: n > 20");
  SubsetDistribution D;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) {
      p *= (mask >> i & 1) ? marginals[i] : 1.0 - marginals[i];
    }
    D.support.emplace_back(Subset::FromMask(mask), p);
  }
  return D;
}

SubsetDistribution SubsetDistribution::RandomCorrelated(int n, Rng& rng) {
  const int k = rng.UniformInt(1, 8);
  SubsetDistribution D;
  double total = 0.0;
  for (int s = 0; s < k; ++s) {
    std::vector<int> items;
    for (int i = 0; i < n; ++i) {
      if (rng.Bernoulli(0.5)) items.push_back(i);
    }
    // Flat Dirichlet weights from normalized unit exponentials.
    const double w = -std::log(1.0 - rng.Uniform());
    total += w;
    D.support.emplace_back(Subset(std::move(items)), w);
  }
  if (!(total > 0.0)) {
    for (auto& entry : D.support) entry.second = 1.0;
    total = k;
  }
  for (auto& entry : D.support) entry.second /= total;
  return D;
}

CorrelationGap CorrelationGapCheck(const Instance& inst, int j,
                                   const SubsetDistribution& D) {
  CheckSize(inst.n <= 10, "CorrelationGapCheck: n > 10");
  CorrelationGap out;
  for (const auto& [A, p] : D.support) {
    out.correlated += p * OptimalRevenue(inst, j, A).value;
  }
  const std::vector<double> q = D.Marginals(inst.n);
  for (uint64_t mask = 1; mask < (uint64_t{1} << inst.n); ++mask) {
    double p = 1.0;
    for (int i = 0; i < inst.n; ++i) {
      p *= (mask >> i & 1) ? q[i] : 1.0 - q[i];
    }
    if (p == 0.0) continue;
    out.independent += p * OptimalRevenue(inst, j, Subset::FromMask(mask)).value;
  }
  if (out.independent > 0.0) out.ratio = out.correlated / out.independent;
  return out;
}

void CheckReport::Record(double excess, double tol,
                         const std::function<std::string()>& describe) {
  ++checks;
  if (excess > tol) {
    ++violations;
    worst = std::max(worst, excess);
    if (witnesses.size() < 5) witnesses.push_back(describe());
  }
}

namespace {

double G(const Instance& inst, int j, const Subset& C) {
  return OptimalRevenue(inst, j, C).value;
}

Subset RandomSubset(Rng& rng, const std::vector<int>& pool) {
  std::vector<int> items;
  for (int i : pool) {
    if (rng.Bernoulli(0.5)) items.push_back(i);
  }
  return Subset(std::move(items));
}

std::vector<int> Iota(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Rank positions of customers by descending r_ij, ties by index.
std::vector<int> RevenueRank(const Instance& inst, int j) {
  std::vector<int> order = Iota(inst.n);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inst.r(a, j) > inst.r(b, j); });
  std::vector<int> rank(inst.n);
  for (int k = 0; k < inst.n; ++k) rank[order[k]] = k;
  return rank;
}

double BudgetGap(const Instance& inst, int j, const Subset& X) {
  double total = 0.0;
  for (int i : X) total += CostShare(inst, j, i, X);
  return std::abs(total - G(inst, j, X));
}

}  // namespace

double CostShare(const Instance& inst, int j, int i, const Subset& A) {
  if (!A.Contains(i)) return 0.0;
  const std::vector<int> rank = RevenueRank(inst, j);
  std::vector<int> above;
  for (int k : A) {
    if (rank[k] < rank[i]) above.push_back(k);
  }
  const Subset strict(std::move(above));
  return G(inst, j, strict.With(i)) - G(inst, j, strict);
}

CheckReport CostSharingCheck(const Instance& inst, int j, int64_t trials,
                             uint64_t seed, double tol) {
  CheckReport report;
  report.name = "cost-sharing";
  const std::vector<int> all = Iota(inst.n);
  for (int64_t t = 0; t < trials; ++t) {
    Rng rng(DeriveSeed(seed, t));
    const Subset B = RandomSubset(rng, all);
    const Subset A = RandomSubset(rng, B.items());
    const int i = rng.UniformInt(0, inst.n - 1);
    const double small = CostShare(inst, j, i, A.With(i));
    const double large = CostShare(inst, j, i, B.With(i));
    report.Record(large - small, tol, [&] {
      std::ostringstream s;
      s << "cross-monotonicity A=" << A.ToString() << " B=" << B.ToString()
        << " i=" << i << " chi_A=" << small << " chi_B=" << large;
      return s.str();
    });
    for (const Subset* X : {&A, &B}) {
      const double gap = BudgetGap(inst, j, *X);
      report.Record(gap, tol, [&] {
        return "budget balance X=" + X->ToString() + " gap=" +
               std::to_string(gap);
      });
    }
  }
  return report;
}

namespace {

void CheckOrderTriple(const Instance& inst, int j, const Subset& A,
                      const Subset& B, const Subset& C, double tol,
                      CheckReport& report) {
  const double at_b = G(inst, j, B.Union(C)) - G(inst, j, B);
  const double at_a = G(inst, j, A.Union(C)) - G(inst, j, A);
  report.Record(at_b - at_a, tol, [&] {
    std::ostringstream s;
    s << "order A=" << A.ToString() << " B=" << B.ToString()
      << " C=" << C.ToString() << " g(C|B)=" << at_b << " g(C|A)=" << at_a;
    return s.str();
  });
}

void CheckSubadditive(const Instance& inst, int j, const Subset& X,
                      const Subset& Y, double tol, CheckReport& report) {
  const double excess =
      G(inst, j, X.Union(Y)) - G(inst, j, X) - G(inst, j, Y);
  report.Record(excess, tol, [&] {
    return "sub-additivity X=" + X.ToString() + " Y=" + Y.ToString();
  });
}

void CheckOrder(const std::vector<int>& order, int n) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Iota(n)) {
    throw PreconditionError("order is not a permutation of the customers");
  }
}

}  // namespace

CheckReport SubmodularOrderCheck(const Instance& inst, int j,
                                 const std::vector<int>& order, int64_t trials,
                                 uint64_t seed, double tol) {
  CheckOrder(order, inst.n);
  CheckReport report;
  report.name = "submodular-order";
  const std::vector<int> all = Iota(inst.n);
  for (int64_t t = 0; t < trials; ++t) {
    Rng rng(DeriveSeed(seed, t));
    const int cut = rng.UniformInt(0, inst.n);
    const std::vector<int> head(order.begin(), order.begin() + cut);
    const std::vector<int> tail(order.begin() + cut, order.end());
    const Subset B = RandomSubset(rng, head);
    const Subset A = RandomSubset(rng, B.items());
    const Subset C = RandomSubset(rng, tail);
    CheckOrderTriple(inst, j, A, B, C, tol, report);
    CheckSubadditive(inst, j, RandomSubset(rng, all), RandomSubset(rng, all),
                     tol, report);
  }
  return report;
}

CheckReport SubmodularOrderCheckExhaustive(const Instance& inst, int j,
                                           const std::vector<int>& order,
                                           double tol) {
  CheckSize(inst.n <= 8, "SubmodularOrderCheckExhaustive: n > 8");
  CheckOrder(order, inst.n);
  CheckReport report;
  report.name = "submodular-order";
  const uint64_t sets = uint64_t{1} << inst.n;
  std::vector<int> pos(inst.n);
  for (int k = 0; k < inst.n; ++k) pos[order[k]] = k;
  for (uint64_t b = 0; b < sets; ++b) {
    const Subset B = Subset::FromMask(b);
    int last = -1;
    for (int i : B) last = std::max(last, pos[i]);
    uint64_t after = 0;
    for (int k = last + 1; k < inst.n; ++k) after |= uint64_t{1} << order[k];
    // A ranges over subsets of B, C over subsets of the positions after B.
    for (uint64_t a = b;; a = (a - 1) & b) {
      const Subset A = Subset::FromMask(a);
      for (uint64_t c = after;; c = (c - 1) & after) {
        CheckOrderTriple(inst, j, A, B, Subset::FromMask(c), tol, report);
        if (c == 0) break;
      }
      if (a == 0) break;
    }
  }
  for (uint64_t x = 0; x < sets; ++x) {
    for (uint64_t y = 0; y < sets; ++y) {
      CheckSubadditive(inst, j, Subset::FromMask(x), Subset::FromMask(y), tol,
                       report);
    }
  }
  return report;
}

CheckReport SubmodularityCheckExhaustive(const Instance& inst, int j,
                                         double tol) {
  CheckSize(inst.n <= 8, "SubmodularityCheckExhaustive: n > 8");
  CheckReport report;
  report.name = "submodularity";
  const uint64_t sets = uint64_t{1} << inst.n;
  for (uint64_t b = 0; b < sets; ++b) {
    const Subset B = Subset::FromMask(b);
    for (uint64_t a = b;; a = (a - 1) & b) {
      const Subset A = Subset::FromMask(a);
      for (int i = 0; i < inst.n; ++i) {
        if (b >> i & 1) continue;
        const double at_a = MarginalRevenue(inst, j, i, A);
        const double at_b = MarginalRevenue(inst, j, i, B);
        report.Record(at_b - at_a, tol, [&] {
          std::ostringstream s;
          s << "A=" << A.ToString() << " B=" << B.ToString() << " i=" << i
            << " g(i|A)=" << at_a << " g(i|B)=" << at_b;
          return s.str();
        });
      }
      if (a == 0) break;
    }
  }
  return report;
}

double InterleavedPartitionSlack(const Instance& inst, int j,
                                 const std::vector<int>& order,
                                 const Subset& backlog, const Subset& target) {
  double rhs = G(inst, j, backlog);
  std::vector<int> before;  // C^{t-1}
  for (int i : order) {
    if (target.Contains(i) && !backlog.Contains(i)) {
      rhs += MarginalRevenue(inst, j, i, Subset(before));
    }
    if (backlog.Contains(i)) before.push_back(i);
  }
  return rhs - G(inst, j, target.Union(backlog));
}

CheckReport InterleavedPartitionCheck(const Instance& inst, int j,
                                      const std::vector<int>& order,
                                      int64_t trials, uint64_t seed,
                                      double tol) {
  CheckOrder(order, inst.n);
  const SameOrderGreedy greedy(inst, order);
  CheckReport report;
  report.name = "interleaved-partition";
  const std::vector<int> all = Iota(inst.n);
  for (int64_t t = 0; t < trials; ++t) {
    Rng rng(DeriveSeed(seed, t));
    Subset backlog;
    if (t % 2 == 0) {
      backlog = greedy.Sample(rng.Next()).suppliers[j].backlog;
    } else {
      backlog = RandomSubset(rng, all);
    }
    const Subset target = RandomSubset(rng, all);
    const double slack =
        InterleavedPartitionSlack(inst, j, order, backlog, target);
    report.Record(-slack, tol, [&] {
      return "backlog=" + backlog.ToString() + " target=" +
             target.ToString() + " slack=" + std::to_string(slack);
    });
  }
  return report;
}

}  // namespace tsa
