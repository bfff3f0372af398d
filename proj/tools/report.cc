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

#include "report.h"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace tsa::cli {
namespace {

std::string Cell(const nlohmann::ordered_json& v) {
  if (v.is_null()) return "";
  if (!v.is_string()) return v.dump();
  const std::string s = v.get<std::string>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

Format ParseFormat(const std::string& name) {
  if (name == "rows") return Format::kRows;
  if (name == "summary") return Format::kSummary;
  throw std::invalid_argument("unknown format '" + name + "'");
}

void Report::Config(const std::string& key, nlohmann::ordered_json value) {
  config_[key] = std::move(value);
}

void Report::Row(std::vector<nlohmann::ordered_json> cells) {
  if (cells.size() != columns_.size()) {
    throw std::logic_error("Report::Row: cell count mismatch");
  }
  rows_.push_back(std::move(cells));
}

std::string Report::Render(Format format) const {
  if (format == Format::kSummary) {
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    doc["config"] = config_;
    auto results = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json rec;
      for (size_t k = 0; k < columns_.size(); ++k) rec[columns_[k]] = row[k];
      results.push_back(std::move(rec));
    }
    doc["results"] = std::move(results);
    return doc.dump(2) + "\n";
  }
  std::string out = "# tsa " + command_ + "\n";
  for (const auto& [key, value] : config_.items()) {
    out += "# " + key + "=" + Cell(value) + "\n";
  }
  for (size_t k = 0; k < columns_.size(); ++k) {
    out += (k ? "," : "") + columns_[k];
  }
  out += "\n";
  for (const auto& row : rows_) {
    for (size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + Cell(row[k]);
    out += "\n";
  }
  return out;
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace tsa::cli
