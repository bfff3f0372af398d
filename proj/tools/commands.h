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

#ifndef TSA_TOOLS_COMMANDS_H_
#define TSA_TOOLS_COMMANDS_H_

#include <cstdint>
#include <string>

namespace tsa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitPolicy = 3;
inline constexpr int kExitVerify = 4;

struct GenOptions {
  std::string kind;
  int n = 0;
  int m = 0;
  uint64_t seed = 0;
  std::string out;
};

struct SolveOptions {
  std::string instance;
  double delta = 0.0;
  int64_t t_max = 0;  // 0: default budget
  bool early_exit = false;
  std::string dump_lp;
  std::string solution;
  std::string trace;
  std::string out;
  std::string format = "rows";
};

struct RunOptions {
  std::string instance;
  std::string policy;
  int64_t trials = 10000;
  uint64_t seed = 0;
  std::string solution;
  double delta = 0.0;
  int64_t t_max = 0;
  bool force_order = false;
  int threads = 1;
  std::string out;
  std::string format = "rows";
};

struct VerifyOptions {
  std::string suite = "all";
  uint64_t seed = 0;
  int64_t trials = 1000;
  std::string out;
  std::string format = "rows";
};

// Each returns a process exit code; library exceptions propagate to main.
int CmdGen(const GenOptions& opt);
int CmdSolve(const SolveOptions& opt);
int CmdRun(const RunOptions& opt);
int CmdVerify(const VerifyOptions& opt);

}  // namespace tsa::cli

#endif  // TSA_TOOLS_COMMANDS_H_
