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

// Tabular command output. "rows" renders a '#'-prefixed config block followed
// by comma-separated rows; "summary" renders one JSON object with the same
// content.

#ifndef TSA_TOOLS_REPORT_H_
#define TSA_TOOLS_REPORT_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tsa::cli {

enum class Format { kRows, kSummary };

Format ParseFormat(const std::string& name);

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void Config(const std::string& key, nlohmann::ordered_json value);
  void Columns(std::vector<std::string> names) { columns_ = std::move(names); }
  void Row(std::vector<nlohmann::ordered_json> cells);

  std::string Render(Format format) const;

 private:
  std::string command_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
  std::vector<std::string> columns_;
  std::vector<std::vector<nlohmann::ordered_json>> rows_;
};

// Writes `text` to `path`, or to stdout when the path is empty or "-".
void Emit(const std::string& path, const std::string& text);

}  // namespace tsa::cli

#endif  // TSA_TOOLS_REPORT_H_
