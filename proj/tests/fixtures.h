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

// Small instances shared by the unit tests. Their reference values come from
// tests/oracles/frozen_values.py, which solves everything by brute force.

#ifndef TSA_TESTS_FIXTURES_H_
#define TSA_TESTS_FIXTURES_H_

#include <initializer_list>

#include <Eigen/Core>

#include "tsa/instance.h"

namespace tsa::testing {

inline Eigen::MatrixXd Mat(
    std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd out(static_cast<int>(rows.size()),
                      static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

// 2 customers, 2 suppliers; every relaxation and policy variant coincides.
inline Instance TwoByTwo() {
  return Instance::FromMatrices(Mat({{1.0, 2.0}, {0.5, 1.5}}),
                                Mat({{2.0, 1.0}, {0.5, 3.0}}),
                                Mat({{1.0, 0.4}, {0.6, 0.9}}));
}

// 3 customers, 2 suppliers; adaptivity and both relaxations are strict.
inline Instance ThreeByTwo() {
  return Instance::FromMatrices(
      Mat({{0.7, 2.0}, {1.3, 0.4}, {3.0, 1.1}}),
      Mat({{1.2, 0.3, 2.5}, {0.8, 1.9, 0.6}}),
      Mat({{0.9, 0.2}, {0.5, 1.0}, {0.3, 0.7}}));
}

inline constexpr double kTwoByTwoValue = 0.738333333333333;

inline constexpr double kThreeByTwoLp2 = 0.571999222886647;
inline constexpr double kThreeByTwoLp1 = 0.571999222886647;
inline constexpr double kThreeByTwoAtar = 0.534007993940707;
inline constexpr double kThreeByTwoFtar = 0.534007993940707;
inline constexpr double kThreeByTwoStar = 0.504393206849400;

// The oracle prints 15 decimals.
inline constexpr double kFrozenTol = 1e-12;

}  // namespace tsa::testing

#endif  // TSA_TESTS_FIXTURES_H_
