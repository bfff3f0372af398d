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

#include "tsa/rounding.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tsa/errors.h"
#include "tsa/mnl.h"

namespace tsa {

Subset AssortmentDistribution::Sample(Rng& rng) const {
  std::vector<double> probs;
  probs.reserve(support.size());
  for (const auto& entry : support) probs.push_back(entry.second);
  return support[rng.Categorical(probs)].first;
}

AssortmentDistribution MnlDistribution(std::span<const double> x,
                                       std::span<const double> u) {
  const int m = static_cast<int>(x.size());
  if (static_cast<int>(u.size()) != m) {
    throw PreconditionError("MnlDistribution: x and u differ in length");
  }
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    if (!(x[j] >= 0.0)) {
      throw PreconditionError("MnlDistribution: negative marginal");
    }
    if (!(u[j] > 0.0)) {
      throw PreconditionError("MnlDistribution: nonpositive weight");
    }
    total += x[j];
  }
  for (int j = 0; j < m; ++j) {
    if (x[j] / u[j] + total > 1.0 + kRoundingTolerance) {
      throw PreconditionError("MnlDistribution: capacity row " +
                              std::to_string(j) + " exceeds 1");
    }
  }

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return x[a] / u[a] > x[b] / u[b];
  });
  auto ratio = [&](int l) { return x[order[l]] / u[order[l]]; };

  std::vector<double> prob(m + 1, 0.0);
  if (m == 0) {
    prob[0] = 1.0;
  } else {
    prob[0] = 1.0 - ratio(0) - total;
    double weight = 1.0;
    for (int l = 1; l <= m; ++l) {
      weight += u[order[l - 1]];
      const double next = l < m ? ratio(l) : 0.0;
      prob[l] = (ratio(l - 1) - next) * weight;
    }
  }

  double sum = 0.0;
  bool clamped = false;
  for (double& p : prob) {
    if (p < 0.0) {
      if (p < -kRoundingTolerance) {
        throw PreconditionError("MnlDistribution: probability " +
                                std::to_string(p) + " below tolerance");
      }
      p = 0.0;
      clamped = true;
    }
    sum += p;
  }
  if (clamped) {
    for (double& p : prob) p /= sum;
  }

  AssortmentDistribution dist;
  std::vector<int> prefix;
  dist.support.emplace_back(Subset(), prob[0]);
  for (int l = 1; l <= m; ++l) {
    prefix.push_back(order[l - 1]);
    dist.support.emplace_back(Subset(prefix), prob[l]);
  }
  return dist;
}

double ValidateMarginals(const AssortmentDistribution& dist,
                         std::span<const double> u,
                         std::span<const double> x) {
  std::vector<double> induced(x.size(), 0.0);
  for (const auto& [S, p] : dist.support) {
    for (int j : S) induced[j] += p * ChoiceProbability(u, S, j);
  }
  double err = 0.0;
  for (size_t j = 0; j < x.size(); ++j) {
    err = std::max(err, std::abs(induced[j] - x[j]));
  }
  return err;
}

}  // namespace tsa
