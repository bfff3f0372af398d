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

// Two-sided platform instances: n customers, m suppliers, per-agent MNL
// weights on both sides (outside option weight fixed at 1) and nonnegative
// pair revenues.

#ifndef TSA_INSTANCE_H_
#define TSA_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace tsa {

struct Instance {
  int n = 0;  // customers
  int m = 0;  // suppliers
  Eigen::MatrixXd u;  // n x m, customer i's weight for supplier j
  Eigen::MatrixXd w;  // m x n, supplier j's weight for customer i
  Eigen::MatrixXd r;  // n x m, revenue of the pair (i, j)
  double revenue_scale = 1.0;

  // Builds an instance and fills n, m from the shapes. Does not validate.
  static Instance FromMatrices(Eigen::MatrixXd u, Eigen::MatrixXd w,
                               Eigen::MatrixXd r);
};

// Every violated invariant, as human-readable messages. Empty means valid.
std::vector<std::string> Validate(const Instance& inst);
// Throws std::invalid_argument listing every violation.
void ValidateOrThrow(const Instance& inst);

// Divides all revenues by the largest one so that R_j(C) <= 1 everywhere and
// multiplies revenue_scale by that factor. All-zero revenues pass through.
Instance NormalizeRevenues(const Instance& inst);

// True if every supplier's revenue column is nonincreasing along `order`.
bool IsSameOrder(const Instance& inst, std::span<const int> order);

// A customer permutation that every supplier ranks in nonincreasing revenue
// order, if one exists. Customers are sorted by their revenue rows,
// lexicographically descending with ties by index, and the result verified.
std::optional<std::vector<int>> DetectSameOrder(const Instance& inst);

enum class InstanceKind {
  kUniformRandom,
  kSameOrderAdditive,
  kSameOrderMultiplicative,
  kSupplierUniform,
};

std::string_view KindName(InstanceKind kind);
// Accepts the names returned by KindName. Throws std::invalid_argument.
InstanceKind ParseInstanceKind(std::string_view name);

// Deterministic in `seed`. Weights are log-uniform on [0.1, 10]; revenues
// follow `kind`: U[0,1] per pair, r_i + r_j, r_i * r_j, or r_j with the
// per-agent factors drawn U[0,1].
Instance Generate(InstanceKind kind, int n, int m, uint64_t seed);

// The 3-customer single-supplier example on which the optimal revenue
// function is monotone but not submodular: w = (1, 1, 3), r = (4, 3, 2).
// Customer weights are all 1.
Instance NonSubmodularExample();

// Structured-text (JSON) form: {"n", "m", "u", "w", "r", "revenue_scale"},
// matrices as arrays of rows. Doubles round-trip exactly.
std::string InstanceToJson(const Instance& inst);
// Throws std::invalid_argument on malformed input or failed validation.
Instance InstanceFromJson(std::string_view text);

void WriteInstanceFile(const std::string& path, const Instance& inst);
Instance ReadInstanceFile(const std::string& path);

}  // namespace tsa

#endif  // TSA_INSTANCE_H_
