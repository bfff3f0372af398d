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

#include "tsa/policies.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tsa/errors.h"
#include "tsa/mnl.h"
#include "tsa/random.h"

namespace tsa {

std::vector<Subset> BacklogAssignment::Backlogs(int m) const {
  std::vector<std::vector<int>> members(m);
  for (int i = 0; i < static_cast<int>(choice.size()); ++i) {
    if (choice[i] == kOutside) continue;
    if (choice[i] < 0 || choice[i] >= m) {
      throw std::out_of_range("BacklogAssignment: supplier out of range");
    }
    members[choice[i]].push_back(i);
  }
  std::vector<Subset> out;
  out.reserve(m);
  for (auto& v : members) out.emplace_back(std::move(v));
  return out;
}

PolicyOutcome FinalizeSuppliers(const Instance& inst,
                                const BacklogAssignment& assignment) {
  PolicyOutcome out;
  for (Subset& backlog : assignment.Backlogs(inst.m)) {
    const int j = static_cast<int>(out.suppliers.size());
    const RevenueResult best = OptimalRevenue(inst, j, backlog);
    out.revenue += best.value;
    out.suppliers.push_back({std::move(backlog), best.argmax, best.value});
  }
  return out;
}

namespace {

// phi[i][S][k]: probability that customer i offered mask S picks supplier k,
// with k == m meaning the outside option.
std::vector<std::vector<std::vector<double>>> ChoiceTable(
    const Instance& inst) {
  const uint32_t sets = 1u << inst.m;
  std::vector<std::vector<std::vector<double>>> phi(
      inst.n, std::vector<std::vector<double>>(sets));
  for (int i = 0; i < inst.n; ++i) {
    for (uint32_t S = 0; S < sets; ++S) {
      double denom = 1.0;
      for (int k = 0; k < inst.m; ++k) {
        if (S >> k & 1) denom += inst.u(i, k);
      }
      auto& row = phi[i][S];
      row.assign(inst.m + 1, 0.0);
      for (int k = 0; k < inst.m; ++k) {
        if (S >> k & 1) row[k] = inst.u(i, k) / denom;
      }
      row[inst.m] = 1.0 / denom;
    }
  }
  return phi;
}

// Memoized recursion shared by the adaptive and fixed-order programs.
class ProcessingDp {
 public:
  ProcessingDp(const Instance& inst, const std::vector<int>* order)
      : inst_(inst), g_(inst), phi_(ChoiceTable(inst)), order_(order) {
    base_ = inst.m + 2;
    pow_.assign(inst.n + 1, 1);
    for (int i = 1; i <= inst.n; ++i) pow_[i] = pow_[i - 1] * base_;
    memo_.assign(pow_[inst.n], -1.0);
  }

  double Value(uint64_t state, int processed) {
    double& slot = memo_[state];
    if (slot >= 0.0) return slot;
    if (processed == inst_.n) return slot = Terminal(state);

    double best = -1.0;
    DpDecision decision;
    for (int i = 0; i < inst_.n; ++i) {
      if (order_ != nullptr && i != (*order_)[processed]) continue;
      if (Digit(state, i) != 0) continue;
      for (uint32_t S = 0; S < (1u << inst_.m); ++S) {
        const auto& p = phi_[i][S];
        double val = p[inst_.m] * Value(state + pow_[i], processed + 1);
        for (int k = 0; k < inst_.m; ++k) {
          if (S >> k & 1) {
            val += p[k] * Value(state + (2 + k) * pow_[i], processed + 1);
          }
        }
        if (val > best) {
          best = val;
          decision = {i, S};
        }
      }
    }
    policy_[state] = decision;
    return slot = best;
  }

  std::unordered_map<uint64_t, DpDecision> TakePolicy() {
    return std::move(policy_);
  }

 private:
  int Digit(uint64_t state, int i) const {
    return static_cast<int>(state / pow_[i] % base_);
  }

  double Terminal(uint64_t state) const {
    std::vector<uint64_t> masks(inst_.m, 0);
    for (int i = 0; i < inst_.n; ++i) {
      const int d = Digit(state, i);
      if (d >= 2) masks[d - 2] |= uint64_t{1} << i;
    }
    double total = 0.0;
    for (int j = 0; j < inst_.m; ++j) total += g_(j, masks[j]);
    return total;
  }

  const Instance& inst_;
  OptimalRevenueTable g_;
  std::vector<std::vector<std::vector<double>>> phi_;
  const std::vector<int>* order_;
  uint64_t base_;
  std::vector<uint64_t> pow_;
  std::vector<double> memo_;
  std::unordered_map<uint64_t, DpDecision> policy_;
};

void CheckPermutation(const std::vector<int>& order, int n) {
  std::vector<bool> seen(n, false);
  bool ok = static_cast<int>(order.size()) == n;
  for (int i : order) {
    if (!ok) break;
    if (i < 0 || i >= n || seen[i]) ok = false;
    else seen[i] = true;
  }
  if (!ok) throw std::invalid_argument("order is not a permutation");
}

}  // namespace

DpResult ExactDpAtar(const Instance& inst) {
  CheckSize(inst.n <= 4 && inst.m <= 4, "ExactDpAtar: needs n <= 4, m <= 4");
  ProcessingDp dp(inst, nullptr);
  DpResult out;
  out.value = dp.Value(0, 0);
  out.policy = dp.TakePolicy();
  return out;
}

double ExactDpFtar(const Instance& inst, const std::vector<int>& order) {
  CheckSize(inst.n <= 4 && inst.m <= 4, "ExactDpFtar: needs n <= 4, m <= 4");
  CheckPermutation(order, inst.n);
  ProcessingDp dp(inst, &order);
  return dp.Value(0, 0);
}

double ExactStar(const Instance& inst) {
  CheckSize(inst.n <= 3 && inst.m <= 3, "ExactStar: needs n <= 3, m <= 3");
  const OptimalRevenueTable g(inst);
  const auto phi = ChoiceTable(inst);
  const uint32_t sets = 1u << inst.m;
  uint64_t profiles = 1, outcomes = 1;
  for (int i = 0; i < inst.n; ++i) {
    profiles *= sets;
    outcomes *= inst.m + 1;
  }
  std::vector<uint32_t> offer(inst.n);
  std::vector<int> pick(inst.n);
  std::vector<uint64_t> masks(inst.m);
  double best = 0.0;
  for (uint64_t prof = 0; prof < profiles; ++prof) {
    uint64_t code = prof;
    for (int i = 0; i < inst.n; ++i) {
      offer[i] = static_cast<uint32_t>(code % sets);
      code /= sets;
    }
    double expected = 0.0;
    for (uint64_t out = 0; out < outcomes; ++out) {
      uint64_t c = out;
      double prob = 1.0;
      std::fill(masks.begin(), masks.end(), 0);
      for (int i = 0; i < inst.n && prob > 0.0; ++i) {
        const int k = static_cast<int>(c % (inst.m + 1));  // m = outside
        c /= inst.m + 1;
        prob *= phi[i][offer[i]][k];
        if (k < inst.m) masks[k] |= uint64_t{1} << i;
      }
      if (prob == 0.0) continue;
      double value = 0.0;
      for (int j = 0; j < inst.m; ++j) value += g(j, masks[j]);
      expected += prob * value;
    }
    best = std::max(best, expected);
  }
  return best;
}

RandomizedStaticPolicy::RandomizedStaticPolicy(const Instance& inst,
                                               const LpSolution& lp)
    : inst_(inst), x_(lp.x) {
  if (x_.rows() != inst.n || x_.cols() != inst.m) {
    throw PreconditionError("RandomizedStaticPolicy: x must be n x m");
  }
  distributions_.reserve(inst.n);
  std::vector<double> x_row(inst.m), u_row(inst.m);
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      x_row[j] = x_(i, j);
      u_row[j] = inst.u(i, j);
    }
    distributions_.push_back(MnlDistribution(x_row, u_row));
  }
}

PolicyOutcome RandomizedStaticPolicy::Sample(uint64_t seed) const {
  Rng rng(seed);
  BacklogAssignment assignment;
  assignment.choice.assign(inst_.n, kOutside);
  std::vector<PolicyStep> trace;
  std::vector<double> weights;
  for (int i = 0; i < inst_.n; ++i) {
    const Subset S = distributions_[i].Sample(rng);
    weights.assign(1, 1.0);  // outside option first
    for (int j : S) weights.push_back(inst_.u(i, j));
    const int k = rng.Categorical(weights);
    assignment.choice[i] = k == 0 ? kOutside : S[k - 1];
    trace.push_back({i, S, assignment.choice[i]});
  }
  PolicyOutcome out = FinalizeSuppliers(inst_, assignment);
  out.trace = std::move(trace);
  return out;
}

double RandomizedStaticPolicy::ExactExpectedRevenue() const {
  CheckSize(inst_.n <= 15, "ExactExpectedRevenue: n > 15");
  const OptimalRevenueTable g(inst_);
  const uint64_t sets = uint64_t{1} << inst_.n;
  double total = 0.0;
  for (int j = 0; j < inst_.m; ++j) {
    for (uint64_t C = 1; C < sets; ++C) {
      const double value = g(j, C);
      if (value == 0.0) continue;
      double prob = 1.0;
      for (int i = 0; i < inst_.n; ++i) {
        prob *= (C >> i & 1) ? x_(i, j) : 1.0 - x_(i, j);
      }
      total += value * prob;
    }
  }
  return total;
}

SameOrderGreedy::SameOrderGreedy(const Instance& inst,
                                 const std::optional<std::vector<int>>& order,
                                 bool force)
    : inst_(inst) {
  if (order.has_value() && IsSameOrder(inst, *order)) {
    order_ = *order;
    return;
  }
  if (!force) {
    throw PreconditionError(
        "same-order greedy needs a same-order certificate; none is valid "
        "for this instance");
  }
  // Lexicographic revenue order, without the guarantee.
  order_.resize(inst.n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
    for (int j = 0; j < inst.m; ++j) {
      if (inst.r(a, j) != inst.r(b, j)) return inst.r(a, j) > inst.r(b, j);
    }
    return false;
  });
  heuristic_ = true;
}

SameOrderGreedy::Offer SameOrderGreedy::ChooseAssortment(
    int i, const std::vector<Subset>& backlogs) const {
  std::vector<double> marginal(inst_.m), weight(inst_.m);
  std::vector<int> items(inst_.m);
  for (int j = 0; j < inst_.m; ++j) {
    marginal[j] = MarginalRevenue(inst_, j, i, backlogs[j]);
    weight[j] = inst_.u(i, j);
    items[j] = j;
  }
  const RevenueResult best = RevenueOrderedOptimum(marginal, weight, items);
  return {best.argmax, best.value};
}

SameOrderGreedy::Offer SameOrderGreedy::ChooseAssortmentBruteForce(
    int i, const std::vector<Subset>& backlogs) const {
  CheckSize(inst_.m <= 20, "ChooseAssortmentBruteForce: m > 20");
  std::vector<double> marginal(inst_.m);
  for (int j = 0; j < inst_.m; ++j) {
    marginal[j] = MarginalRevenue(inst_, j, i, backlogs[j]);
  }
  Offer best;
  for (uint64_t mask = 1; mask < (uint64_t{1} << inst_.m); ++mask) {
    double num = 0.0, denom = 1.0;
    for (int j = 0; j < inst_.m; ++j) {
      if (mask >> j & 1) {
        num += marginal[j] * inst_.u(i, j);
        denom += inst_.u(i, j);
      }
    }
    const double val = num / denom;
    const Subset cand = Subset::FromMask(mask);
    if (val > best.value ||
        (val == best.value && SizeThenLexLess(cand, best.assortment))) {
      best = {cand, val};
    }
  }
  return best;
}

PolicyOutcome SameOrderGreedy::Sample(uint64_t seed) const {
  Rng rng(seed);
  std::vector<Subset> backlogs(inst_.m);
  BacklogAssignment assignment;
  assignment.choice.assign(inst_.n, kOutside);
  std::vector<PolicyStep> trace;
  std::vector<double> weights;
  for (int i : order_) {
    const Offer offer = ChooseAssortment(i, backlogs);
    weights.assign(1, 1.0);
    for (int j : offer.assortment) weights.push_back(inst_.u(i, j));
    const int k = rng.Categorical(weights);
    const int choice = k == 0 ? kOutside : offer.assortment[k - 1];
    if (choice != kOutside) backlogs[choice] = backlogs[choice].With(i);
    assignment.choice[i] = choice;
    trace.push_back({i, offer.assortment, choice});
  }
  PolicyOutcome out = FinalizeSuppliers(inst_, assignment);
  out.trace = std::move(trace);
  return out;
}

SameOrderGreedy::Evaluation SameOrderGreedy::EvaluateExact(
    bool check_steps) const {
  CheckSize(inst_.n <= 4 && inst_.m <= 4,
            "SameOrderGreedy::EvaluateExact: needs n <= 4, m <= 4");
  Evaluation ev;
  std::vector<Subset> backlogs(inst_.m);
  Recurse(0, backlogs, 1.0, 0.0, check_steps, ev);
  return ev;
}

void SameOrderGreedy::Recurse(int t, std::vector<Subset>& backlogs,
                              double prob, double alpha_sum, bool check_steps,
                              Evaluation& ev) const {
  if (t == inst_.n) {
    double primal = 0.0;
    for (int j = 0; j < inst_.m; ++j) {
      primal += OptimalRevenue(inst_, j, backlogs[j]).value;
    }
    // beta_j = g_j(C_j), so the dual objective is alpha_sum + primal.
    const double dual = alpha_sum + primal;
    ev.max_identity_error =
        std::max(ev.max_identity_error, std::abs(dual - 2.0 * primal));
    ev.expected_revenue += prob * primal;
    ++ev.paths;
    return;
  }
  const int i = order_[t];
  const Offer offer = ChooseAssortment(i, backlogs);
  if (check_steps) {
    const Offer brute = ChooseAssortmentBruteForce(i, backlogs);
    ev.max_step_gap =
        std::max(ev.max_step_gap, std::abs(offer.value - brute.value));
  }
  double denom = 1.0;
  for (int j : offer.assortment) denom += inst_.u(i, j);
  Recurse(t + 1, backlogs, prob / denom, alpha_sum, check_steps, ev);
  for (int j : offer.assortment) {
    const double gain = MarginalRevenue(inst_, j, i, backlogs[j]);
    const Subset saved = backlogs[j];
    backlogs[j] = saved.With(i);
    Recurse(t + 1, backlogs, prob * inst_.u(i, j) / denom, alpha_sum + gain,
            check_steps, ev);
    backlogs[j] = saved;
  }
}

}  // namespace tsa
