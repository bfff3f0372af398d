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

// Turns one customer's marginals x_i (with x_ij/u_ij + sum_l x_il <= 1) into
// a distribution over nested supplier assortments whose MNL choice
// probabilities reproduce x_i exactly.
//
// With suppliers sorted so that x_j/u_j is nonincreasing (ties by index) and
// S(l) the first l of them:
//
//   P[S(0)] = 1 - x_1/u_1 - sum_j x_j
//   P[S(l)] = (x_l/u_l - x_{l+1}/u_{l+1}) (1 + sum_{k <= l} u_k),  0 < l < m
//   P[S(m)] = (x_m/u_m) (1 + sum_k u_k)

#ifndef TSA_ROUNDING_H_
#define TSA_ROUNDING_H_

#include <span>
#include <utility>
#include <vector>

#include "tsa/random.h"
#include "tsa/subset.h"

namespace tsa {

struct AssortmentDistribution {
  std::vector<std::pair<Subset, double>> support;

  Subset Sample(Rng& rng) const;
};

// Slack allowed in the capacity precondition; negative probabilities down to
// -kRoundingTolerance are clamped to 0 and the rest renormalized.
inline constexpr double kRoundingTolerance = 1e-9;

// Throws PreconditionError if x is negative or the capacity row is exceeded
// by more than kRoundingTolerance.
AssortmentDistribution MnlDistribution(std::span<const double> x,
                                       std::span<const double> u);

// max_j |sum_S P[S] phi(j, S) - x_j|.
double ValidateMarginals(const AssortmentDistribution& dist,
                         std::span<const double> u, std::span<const double> x);

}  // namespace tsa

#endif  // TSA_ROUNDING_H_
