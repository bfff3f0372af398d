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

// tsa: generate instances, solve the marginal LP, run policies, and verify
// structural properties.
//
// Exit codes: 0 ok, 1 usage or input error, 2 solver failure, 3 policy
// precondition (size limit, missing certificate), 4 verification failure.

#include <iostream>

#include <CLI11.hpp>

#include "commands.h"
#include "tsa/errors.h"

namespace {

using tsa::cli::kExitPolicy;
using tsa::cli::kExitSolver;
using tsa::cli::kExitUsage;

void AddFormat(CLI::App* cmd, std::string* out, std::string* format) {
  cmd->add_option("--out", *out, "Output file (default: stdout)");
  cmd->add_option("--format", *format, "rows | summary")
      ->check(CLI::IsMember({"rows", "summary"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive two-sided assortment optimization toolkit", "tsa"};
  app.require_subcommand(1);

  tsa::cli::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("kind", gen.kind,
                      "uniform-random | same-order-additive | "
                      "same-order-multiplicative | supplier-uniform")
      ->required();
  gen_cmd->add_option("n", gen.n, "Customers")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("m", gen.m, "Suppliers")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Instance file (default: stdout)");

  tsa::cli::SolveOptions solve;
  auto* solve_cmd =
      app.add_subcommand("solve", "Approximately solve the marginal LP");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--delta", solve.delta,
                        "Oracle approximation slack in [0,1); 0 is exact");
  solve_cmd->add_option("--t-max", solve.t_max,
                        "Ellipsoid iteration budget (default: size-based)");
  solve_cmd->add_flag("--early-exit", solve.early_exit,
                      "Stop once the ellipsoid trace drops below 1e-24");
  solve_cmd->add_option("--dump-lp", solve.dump_lp,
                        "Write the restricted LP and its solution here");
  solve_cmd->add_option("--solution", solve.solution,
                        "Write the LP solution here");
  solve_cmd->add_option("--trace", solve.trace,
                        "Write one record per ellipsoid iteration here");
  AddFormat(solve_cmd, &solve.out, &solve.format);

  tsa::cli::RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a policy");
  run_cmd->add_option("instance", run.instance, "Instance file")->required();
  run_cmd->add_option("--policy", run.policy, "Policy to evaluate")
      ->required()
      ->check(CLI::IsMember({"rand-static", "greedy", "dp", "ftar", "star"}));
  run_cmd->add_option("--trials", run.trials, "Monte Carlo trials");
  run_cmd->add_option("--seed", run.seed, "Master seed for sampling");
  run_cmd->add_option("--solution", run.solution,
                      "LP solution file for rand-static (default: solve)");
  run_cmd->add_option("--delta", run.delta, "Oracle slack when solving");
  run_cmd->add_option("--t-max", run.t_max, "Ellipsoid budget when solving");
  run_cmd->add_flag("--force-order", run.force_order,
                    "Run greedy without a same-order certificate (heuristic)");
  run_cmd->add_option("--threads", run.threads, "Monte Carlo worker threads")
      ->check(CLI::PositiveNumber);
  AddFormat(run_cmd, &run.out, &run.format);

  tsa::cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", verify.suite,
                         "appendix-a | gap | sharing | order | chain | all")
      ->check(CLI::IsMember({"appendix-a", "gap", "sharing", "order", "chain",
                             "all"}));
  verify_cmd->add_option("--seed", verify.seed, "Master seed");
  verify_cmd->add_option("--trials", verify.trials,
                         "Random cases per check (chain uses trials/5 "
                         "instances)");
  AddFormat(verify_cmd, &verify.out, &verify.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return tsa::cli::CmdGen(gen);
    if (*solve_cmd) return tsa::cli::CmdSolve(solve);
    if (*run_cmd) return tsa::cli::CmdRun(run);
    if (*verify_cmd) return tsa::cli::CmdVerify(verify);
  } catch (const tsa::SolverError& e) {
    std::cerr << "tsa: solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const tsa::SizeLimitError& e) {
    std::cerr << "tsa: size limit: " << e.what() << "\n";
    return kExitPolicy;
  } catch (const tsa::PreconditionError& e) {
    std::cerr << "tsa: precondition: " << e.what() << "\n";
    return kExitPolicy;
  } catch (const std::exception& e) {
    std::cerr << "tsa: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
