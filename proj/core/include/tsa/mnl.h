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

// MNL choice probabilities and the supplier-side revenue functions:
//
//   R_j(C) = sum_{i in C} r_ij w_ji / (1 + sum_{i in C} w_ji)
//   g_j(C) = max_{C' subset of C} R_j(C')
//
// g_j is evaluated through the revenue-ordered property of MNL: some prefix
// of C sorted by descending revenue is optimal.

#ifndef TSA_MNL_H_
#define TSA_MNL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "tsa/instance.h"
#include "tsa/subset.h"

namespace tsa {

// Choice index meaning "no selection".
inline constexpr int kOutside = -1;

// P(choose k | offered S) with outside weight 1. `weights` is indexed by the
// universe; k == kOutside asks for the no-choice probability.
double ChoiceProbability(std::span<const double> weights, const Subset& S,
                         int k);

// Customer i choosing supplier k (or kOutside) from supplier assortment S.
double CustomerChoiceProbability(const Instance& inst, int i, const Subset& S,
                                 int k);
// Supplier j choosing customer k (or kOutside) from customer assortment C.
double SupplierChoiceProbability(const Instance& inst, int j, const Subset& C,
                                 int k);

double ExpectedRevenue(const Instance& inst, int j, const Subset& C);

struct RevenueResult {
  double value = 0.0;
  Subset argmax;
};

// Revenue-ordered optimum of sum_{k in S} v_k a_k / (1 + sum_{k in S} a_k)
// over S subset of `items`. Sorts by descending value (ties by index) and
// keeps the best prefix, preferring the shorter prefix on exact ties. The
// empty prefix is included, so the value is never negative.
RevenueResult RevenueOrderedOptimum(std::span<const double> values,
                                    std::span<const double> weights,
                                    std::span<const int> items);

// g_j(C) and a maximizing subset, in O(|C| log |C|).
RevenueResult OptimalRevenue(const Instance& inst, int j, const Subset& C);

// Exhaustive max of R_j over all subsets of C. Independent oracle for
// OptimalRevenue; |C| <= 20. Ties go to the smaller, then lexicographically
// smaller, subset.
RevenueResult OptimalRevenueBruteForce(const Instance& inst, int j,
                                       const Subset& C);

// g_j(i | C) = g_j(C + i) - g_j(C). Throws std::invalid_argument if i in C.
double MarginalRevenue(const Instance& inst, int j, int i, const Subset& C);

// g_j tabulated for every customer subset (bit i of the mask = customer i).
// n <= 20.
class OptimalRevenueTable {
 public:
  explicit OptimalRevenueTable(const Instance& inst);

  double operator()(int j, uint64_t mask) const {
    return table_[static_cast<size_t>(j) * stride_ + mask];
  }
  int n() const { return n_; }
  int m() const { return m_; }

 private:
  int n_;
  int m_;
  size_t stride_;
  std::vector<double> table_;
};

}  // namespace tsa

#endif  // TSA_MNL_H_
