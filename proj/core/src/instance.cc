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

#include "tsa/instance.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "json_util.h"
#include "tsa/random.h"

namespace tsa {

Instance Instance::FromMatrices(Eigen::MatrixXd u, Eigen::MatrixXd w,
                                Eigen::MatrixXd r) {
  Instance inst;
  inst.n = static_cast<int>(u.rows());
  inst.m = static_cast<int>(u.cols());
  inst.u = std::move(u);
  inst.w = std::move(w);
  inst.r = std::move(r);
  return inst;
}

std::vector<std::string> Validate(const Instance& inst) {
  std::vector<std::string> errors;
  if (inst.n <= 0) errors.push_back("customer count must be positive");
  if (inst.m <= 0) errors.push_back("supplier count must be positive");
  if (inst.u.rows() != inst.n || inst.u.cols() != inst.m) {
    errors.push_back("dimension mismatch: u must be n x m");
  }
  if (inst.w.rows() != inst.m || inst.w.cols() != inst.n) {
    errors.push_back("dimension mismatch: w must be m x n");
  }
  if (inst.r.rows() != inst.n || inst.r.cols() != inst.m) {
    errors.push_back("dimension mismatch: r must be n x m");
  }
  if (!errors.empty()) return errors;

  auto scan = [&](const Eigen::MatrixXd& mat, const char* nonfinite_msg,
                  auto bad, const char* bad_msg) {
    bool saw_nonfinite = false, saw_bad = false;
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
      for (Eigen::Index j = 0; j < mat.cols(); ++j) {
        const double v = mat(i, j);
        if (!std::isfinite(v)) {
          saw_nonfinite = true;
        } else if (bad(v)) {
          saw_bad = true;
        }
      }
    }
    if (saw_nonfinite) errors.push_back(nonfinite_msg);
    if (saw_bad) errors.push_back(bad_msg);
  };
  auto nonpositive = [](double v) { return v <= 0.0; };
  auto negative = [](double v) { return v < 0.0; };
  scan(inst.u, "non-finite customer weight", nonpositive,
       "nonpositive customer weight");
  scan(inst.w, "non-finite supplier weight", nonpositive,
       "nonpositive supplier weight");
  scan(inst.r, "non-finite revenue", negative, "negative revenue");
  if (!(std::isfinite(inst.revenue_scale) && inst.revenue_scale > 0.0)) {
    errors.push_back("revenue_scale must be positive");
  }
  return errors;
}

void ValidateOrThrow(const Instance& inst) {
  const auto errors = Validate(inst);
  if (errors.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& e : errors) msg += " " + e + ";";
  throw std::invalid_argument(msg);
}

Instance NormalizeRevenues(const Instance& inst) {
  Instance out = inst;
  const double top = inst.r.size() > 0 ? inst.r.maxCoeff() : 0.0;
  if (top > 0.0) {
    out.r = inst.r / top;
    out.revenue_scale = inst.revenue_scale * top;
  }
  return out;
}

bool IsSameOrder(const Instance& inst, std::span<const int> order) {
  if (static_cast<int>(order.size()) != inst.n) return false;
  std::vector<bool> seen(inst.n, false);
  for (int i : order) {
    if (i < 0 || i >= inst.n || seen[i]) return false;
    seen[i] = true;
  }
  for (int j = 0; j < inst.m; ++j) {
    for (int t = 0; t + 1 < inst.n; ++t) {
      if (inst.r(order[t], j) < inst.r(order[t + 1], j)) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> DetectSameOrder(const Instance& inst) {
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    for (int j = 0; j < inst.m; ++j) {
      if (inst.r(a, j) != inst.r(b, j)) return inst.r(a, j) > inst.r(b, j);
    }
    return false;
  });
  if (!IsSameOrder(inst, order)) return std::nullopt;
  return order;
}

std::string_view KindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kUniformRandom:
      return "uniform-random";
    case InstanceKind::kSameOrderAdditive:
      return "same-order-additive";
    case InstanceKind::kSameOrderMultiplicative:
      return "same-order-multiplicative";
    case InstanceKind::kSupplierUniform:
      return "supplier-uniform";
  }
  return "unknown";
}

InstanceKind ParseInstanceKind(std::string_view name) {
  for (auto kind : {InstanceKind::kUniformRandom,
                    InstanceKind::kSameOrderAdditive,
                    InstanceKind::kSameOrderMultiplicative,
                    InstanceKind::kSupplierUniform}) {
    if (KindName(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown instance kind '" + std::string(name) +
                              "'");
}

Instance Generate(InstanceKind kind, int n, int m, uint64_t seed) {
  if (n <= 0 || m <= 0) {
    throw std::invalid_argument("Generate: n and m must be positive");
  }
  Rng rng(seed);
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.u.resize(n, m);
  inst.w.resize(m, n);
  inst.r.resize(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) inst.u(i, j) = rng.LogUniform(0.1, 10.0);
  }
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) inst.w(j, i) = rng.LogUniform(0.1, 10.0);
  }
  std::vector<double> customer_factor(n), supplier_factor(m);
  for (double& v : customer_factor) v = rng.Uniform();
  for (double& v : supplier_factor) v = rng.Uniform();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      switch (kind) {
        case InstanceKind::kUniformRandom:
          inst.r(i, j) = rng.Uniform();
          break;
        case InstanceKind::kSameOrderAdditive:
          inst.r(i, j) = customer_factor[i] + supplier_factor[j];
          break;
        case InstanceKind::kSameOrderMultiplicative:
          inst.r(i, j) = customer_factor[i] * supplier_factor[j];
          break;
        case InstanceKind::kSupplierUniform:
          inst.r(i, j) = supplier_factor[j];
          break;
      }
    }
  }
  return inst;
}

Instance NonSubmodularExample() {
  Eigen::MatrixXd u = Eigen::MatrixXd::Ones(3, 1);
  Eigen::MatrixXd w(1, 3);
  w << 1.0, 1.0, 3.0;
  Eigen::MatrixXd r(3, 1);
  r << 4.0, 3.0, 2.0;
  return Instance::FromMatrices(std::move(u), std::move(w), std::move(r));
}

std::string InstanceToJson(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["n"] = inst.n;
  doc["m"] = inst.m;
  doc["u"] = internal::MatrixToJson(inst.u);
  doc["w"] = internal::MatrixToJson(inst.w);
  doc["r"] = internal::MatrixToJson(inst.r);
  doc["revenue_scale"] = inst.revenue_scale;
  return doc.dump(2) + "\n";
}

Instance InstanceFromJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("instance parse error: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("instance must be a JSON object");
  }
  for (const char* key : {"n", "m", "u", "w", "r"}) {
    if (!doc.contains(key)) {
      throw std::invalid_argument(std::string("instance missing field '") +
                                  key + "'");
    }
  }
  if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer()) {
    throw std::invalid_argument("instance fields n, m must be integers");
  }
  Instance inst;
  inst.n = doc["n"].get<int>();
  inst.m = doc["m"].get<int>();
  if (inst.n <= 0 || inst.m <= 0) {
    throw std::invalid_argument("instance fields n, m must be positive");
  }
  inst.u = internal::MatrixFromJson(doc["u"], inst.n, inst.m, "u");
  inst.w = internal::MatrixFromJson(doc["w"], inst.m, inst.n, "w");
  inst.r = internal::MatrixFromJson(doc["r"], inst.n, inst.m, "r");
  if (doc.contains("revenue_scale")) {
    inst.revenue_scale = doc["revenue_scale"].get<double>();
  }
  ValidateOrThrow(inst);
  return inst;
}

void WriteInstanceFile(const std::string& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << InstanceToJson(inst);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return InstanceFromJson(buf.str());
}

}  // namespace tsa
