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

#ifndef TSA_SRC_JSON_UTIL_H_
#define TSA_SRC_JSON_UTIL_H_

#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

namespace tsa::internal {

inline nlohmann::json MatrixToJson(const Eigen::MatrixXd& mat) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < mat.cols(); ++j) row.push_back(mat(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Eigen::MatrixXd MatrixFromJson(const nlohmann::json& rows, int n_rows,
                                      int n_cols, const std::string& name) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n_rows) {
    throw std::invalid_argument("dimension mismatch: '" + name + "' needs " +
                                std::to_string(n_rows) + " rows");
  }
  Eigen::MatrixXd mat(n_rows, n_cols);
  for (int i = 0; i < n_rows; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n_cols) {
      throw std::invalid_argument("dimension mismatch: '" + name + "' row " +
                                  std::to_string(i) + " needs " +
                                  std::to_string(n_cols) + " entries");
    }
    for (int j = 0; j < n_cols; ++j) {
      if (!row[j].is_number()) {
        throw std::invalid_argument("'" + name + "' has a non-numeric entry");
      }
      mat(i, j) = row[j].get<double>();
    }
  }
  return mat;
}

}  // namespace tsa::internal

#endif  // TSA_SRC_JSON_UTIL_H_
