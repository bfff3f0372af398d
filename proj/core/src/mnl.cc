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

#include "tsa/mnl.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tsa/errors.h"

namespace tsa {

double ChoiceProbability(std::span<const double> weights, const Subset& S,
                         int k) {
  double denom = 1.0;
  for (int l : S) denom += weights[l];
  if (k == kOutside) return 1.0 / denom;
  if (!S.Contains(k)) return 0.0;
  return weights[k] / denom;
}

double CustomerChoiceProbability(const Instance& inst, int i, const Subset& S,
                                 int k) {
  double denom = 1.0;
  for (int l : S) denom += inst.u(i, l);
  if (k == kOutside) return 1.0 / denom;
  if (!S.Contains(k)) return 0.0;
  return inst.u(i, k) / denom;
}

double SupplierChoiceProbability(const Instance& inst, int j, const Subset& C,
                                 int k) {
  double denom = 1.0;
  for (int l : C) denom += inst.w(j, l);
  if (k == kOutside) return 1.0 / denom;
  if (!C.Contains(k)) return 0.0;
  return inst.w(j, k) / denom;
}

double ExpectedRevenue(const Instance& inst, int j, const Subset& C) {
  double num = 0.0, denom = 1.0;
  for (int i : C) {
    num += inst.r(i, j) * inst.w(j, i);
    denom += inst.w(j, i);
  }
  return num / denom;
}

RevenueResult RevenueOrderedOptimum(std::span<const double> values,
                                    std::span<const double> weights,
                                    std::span<const int> items) {
  std::vector<int> order(items.begin(), items.end());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });
  double num = 0.0, denom = 1.0;
  double best = 0.0;
  size_t best_len = 0;
  for (size_t k = 0; k < order.size(); ++k) {
    num += values[order[k]] * weights[order[k]];
    denom += weights[order[k]];
    const double val = num / denom;
    if (val > best) {
      best = val;
      best_len = k + 1;
    }
  }
  RevenueResult result;
  result.value = best;
  result.argmax = Subset(
      std::vector<int>(order.begin(), order.begin() + best_len));
  return result;
}

RevenueResult OptimalRevenue(const Instance& inst, int j, const Subset& C) {
  // Revenue and weight columns for supplier j, indexed by customer.
  std::vector<double> values(inst.n), weights(inst.n);
  for (int i : C) {
    values[i] = inst.r(i, j);
    weights[i] = inst.w(j, i);
  }
  return RevenueOrderedOptimum(values, weights, C.items());
}

RevenueResult OptimalRevenueBruteForce(const Instance& inst, int j,
                                       const Subset& C) {
  CheckSize(C.size() <= 20, "OptimalRevenueBruteForce: |C| > 20");
  const int k = C.size();
  RevenueResult best;  // empty set, value 0
  for (uint64_t mask = 1; mask < (uint64_t{1} << k); ++mask) {
    double num = 0.0, denom = 1.0;
    std::vector<int> chosen;
    for (int b = 0; b < k; ++b) {
      if (mask >> b & 1) {
        const int i = C[b];
        num += inst.r(i, j) * inst.w(j, i);
        denom += inst.w(j, i);
        chosen.push_back(i);
      }
    }
    const double val = num / denom;
    if (val > best.value) {
      best = {val, Subset(std::move(chosen))};
    } else if (val == best.value) {
      Subset cand(std::move(chosen));
      if (SizeThenLexLess(cand, best.argmax)) best.argmax = std::move(cand);
    }
  }
  return best;
}

double MarginalRevenue(const Instance& inst, int j, int i, const Subset& C) {
  if (C.Contains(i)) {
    throw std::invalid_argument("MarginalRevenue: customer " +
                                std::to_string(i) + " already in C");
  }
  return OptimalRevenue(inst, j, C.With(i)).value -
         OptimalRevenue(inst, j, C).value;
}

OptimalRevenueTable::OptimalRevenueTable(const Instance& inst)
    : n_(inst.n), m_(inst.m) {
  CheckSize(n_ <= 20, "OptimalRevenueTable: n > 20");
  stride_ = size_t{1} << n_;
  table_.resize(stride_ * m_);
  std::vector<double> values(n_), weights(n_);
  std::vector<int> items;
  items.reserve(n_);
  for (int j = 0; j < m_; ++j) {
    for (int i = 0; i < n_; ++i) {
      values[i] = inst.r(i, j);
      weights[i] = inst.w(j, i);
    }
    for (uint64_t mask = 0; mask < stride_; ++mask) {
      items.clear();
      for (int i = 0; i < n_; ++i) {
        if (mask >> i & 1) items.push_back(i);
      }
      table_[j * stride_ + mask] =
          RevenueOrderedOptimum(values, weights, items).value;
    }
  }
}

}  // namespace tsa
