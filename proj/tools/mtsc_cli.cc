// Copyright 2026 The mtscombine Authors.
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

// Command-line driver: run, sweep, lb, mab, doubling and validate.
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtsc/adversary.h"
#include "mtsc/errors.h"
#include "mtsc/experiment.h"
#include "mtsc/instance_io.h"
#include "mtsc/selfcheck.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> threads;
  std::optional<std::string> out;
};

void AddCommon(CLI::App* cmd, Overrides& o, bool config_required) {
  auto* opt = cmd->add_option("-c,--config", o.config, "JSON config file");
  if (config_required) opt->required();
  cmd->add_option("--seed", o.seed, "Override the config seed");
  cmd->add_option("--trials", o.trials, "Override the trial count");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  cmd->add_option("--out", o.out, "Override the output directory");
}

mtsc::ExperimentConfig Load(const Overrides& o) {
  mtsc::ExperimentConfig c =
      o.config.empty() ? mtsc::ExperimentConfig{} : mtsc::LoadConfig(o.config);
  if (o.seed) c.seed = *o.seed;
  if (o.trials) c.trials = *o.trials;
  if (o.threads) c.threads = *o.threads;
  if (o.out) c.out_dir = *o.out;
  c.Validate();
  return c;
}

void PrintSummary(const mtsc::SummaryRow& s) {
  std::cout << s.scenario << ": trials=" << s.trials
            << " mean_alg_cost=" << mtsc::FormatDouble(s.alg_cost.mean)
            << " mean_opt0=" << mtsc::FormatDouble(s.opt0.mean)
            << " mean_regret0=" << mtsc::FormatDouble(s.regret0.mean)
            << " (stderr " << mtsc::FormatDouble(s.regret0.stderr_) << ")"
            << " mean_regretk=" << mtsc::FormatDouble(s.regretk.mean)
            << "\n";
}

int RunScenario(const Overrides& o, std::optional<mtsc::Scenario> force) {
  mtsc::ExperimentConfig c = Load(o);
  if (force) c.scenario = *force;
  c.Validate();
  mtsc::ExperimentReport report = mtsc::RunExperiment(c);
  mtsc::WriteReport(report);
  PrintSummary(report.summary);
  std::cout << "wrote " << c.out_dir << "/trials.csv and summary.csv\n";
  return 0;
}

// Writes one lower-bound instance (instance, heuristic paths, sidecar).
void EmitLb(const mtsc::ExperimentConfig& c, const std::string& dir) {
  mtsc::Rng rng(mtsc::DeriveSeed(c.seed, 0, mtsc::kInstanceStream));
  const int ell = c.instance.planted.ell;
  mtsc::LossMatrix losses = mtsc::GenLosses(
      c.instance.loss, ell, c.instance.blocks, c.instance.loss_params, rng);
  mtsc::LBInstance lb = mtsc::BuildLbBlocks(
      ell, c.instance.blocks, losses, rng, c.instance.finite_sentinel,
      c.instance.pad);
  std::vector<mtsc::HeuristicPath> paths;
  for (int i = 0; i < ell; ++i) paths.push_back(mtsc::LbHeuristic(i, lb, rng));
  std::filesystem::create_directories(dir);
  mtsc::SaveInstanceFile(dir + "/instance.txt", lb.instance);
  std::ofstream p(dir + "/paths.txt");
  mtsc::WritePaths(p, paths);
  std::ofstream s(dir + "/sidecar.txt");
  mtsc::WriteLbSidecar(s, lb);
  if (!p || !s) throw std::runtime_error("cannot write into '" + dir + "'");
  std::cout << "wrote " << dir << "/instance.txt, paths.txt, sidecar.txt\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combining MTS heuristics under delayed bandit access"};
  app.require_subcommand(1);

  Overrides run_o, sweep_o, lb_o, mab_o, dbl_o;
  auto* run = app.add_subcommand("run", "Run the experiment in a config");
  AddCommon(run, run_o, true);

  auto* sweep = app.add_subcommand("sweep", "Sweep one axis of a config");
  AddCommon(sweep, sweep_o, true);
  std::string axis;
  std::vector<double> values;
  sweep->add_option("--axis", axis, "opt_scale | T | ell | m");
  sweep->add_option("--values", values, "Axis values (at least 3)");

  auto* lb = app.add_subcommand("lb", "Lower-bound scenario");
  AddCommon(lb, lb_o, false);
  std::string emit;
  lb->add_option("--emit", emit,
                 "Write one instance, its paths and sidecar here instead");

  auto* mab = app.add_subcommand("mab", "Bandit scenario with switching costs");
  AddCommon(mab, mab_o, false);

  auto* dbl = app.add_subcommand("doubling", "Guess-and-double scenario");
  AddCommon(dbl, dbl_o, false);

  auto* validate = app.add_subcommand("validate", "Oracle self-tests");
  int cases = 500;
  std::uint64_t validate_seed = 1;
  validate->add_option("--cases", cases, "Random instances to check");
  validate->add_option("--seed", validate_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return RunScenario(run_o, std::nullopt);
    if (*mab) return RunScenario(mab_o, mtsc::Scenario::kMab);
    if (*dbl) return RunScenario(dbl_o, mtsc::Scenario::kDoubling);
    if (*lb) {
      if (!emit.empty()) {
        EmitLb(Load(lb_o), emit);
        return 0;
      }
      return RunScenario(lb_o, mtsc::Scenario::kLowerBound);
    }
    if (*sweep) {
      mtsc::ExperimentConfig c = Load(sweep_o);
      if (!axis.empty()) c.sweep_axis = axis;
      if (!values.empty()) c.sweep_values = values;
      if (c.sweep_axis.empty()) {
        throw mtsc::ValidationError("sweep: no axis given");
      }
      std::vector<mtsc::SummaryRow> rows =
          mtsc::Sweep(c, c.sweep_axis, c.sweep_values);
      mtsc::WriteSweep(c, rows);
      for (const auto& row : rows) {
        std::cout << row.axis << "=" << mtsc::FormatDouble(row.value) << " ";
        PrintSummary(row);
      }
      if (rows.front().has_slope) {
        std::cout << "fitted log-log slope: "
                  << mtsc::FormatDouble(rows.front().slope) << "\n";
      }
      return 0;
    }
    if (*validate) {
      mtsc::SelfCheckReport r = mtsc::RunOracleSelfCheck(cases, validate_seed);
      std::cout << "oracle self-check: " << r.cases << " cases, "
                << r.failures << " failures, max error "
                << mtsc::FormatDouble(r.max_error) << "\n";
      if (r.failures) {
        std::cout << "first failure: " << r.first_failure << "\n";
        return kExitRuntime;
      }
      return 0;
    }
  } catch (const mtsc::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
