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

#ifndef MTSC_EXPERIMENT_H_
#define MTSC_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mtsc/adversary.h"
#include "mtsc/combiner.h"
#include "mtsc/families.h"

namespace mtsc {

enum class Scenario { kUpperBound, kOptK, kLowerBound, kMab, kDoubling };

Scenario ParseScenario(const std::string& name);
std::string ToString(Scenario scenario);

struct InstanceSpec {
  // planted | star | segments | lb | file. The lower_bound and mab scenarios
  // always use their own generators.
  std::string family = "planted";
  PlantedParams planted;
  StarParams star;
  int segment_length = 1000;  // segments family, k + 1 segments
  int blocks = 1024;          // lb family
  int pad = 0;
  bool finite_sentinel = false;
  LossKind loss = LossKind::kGapBernoulli;
  LossParams loss_params;
  std::string instance_file;  // file family
  std::string paths_file;
  // When set every trial reuses the instance of trial 0 and only the
  // algorithm's coins vary.
  bool fixed = false;
};

struct AlgorithmSpec {
  ExpertKind kind = ExpertKind::kHedge;
  int m = 2;
  int k = 0;
  // Unset values come from the hyperparameter formulas; an unset opt_guess
  // is the trial's realized benchmark (OPT_{<=0}, or OPT_{<=k} for share).
  std::optional<double> epsilon;
  std::optional<double> gamma;
  std::optional<double> alpha;
  std::optional<double> opt_guess;
  double omega = 1.0;      // doubling
  std::optional<double> r; // doubling; unset means the realized OPT_{<=0}/OFF
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int trials = 1;
  int threads = 1;
  Scenario scenario = Scenario::kUpperBound;
  InstanceSpec instance;
  AlgorithmSpec algorithm;
  std::string out_dir = "out";
  bool trace = false;
  int trace_trials = 1;
  std::string sweep_axis;          // opt_scale | T | ell | m
  std::vector<double> sweep_values;

  void Validate() const;
};

// Parses the JSON config format documented in the README. Throws
// ValidationError on unknown keys or bad values.
ExperimentConfig ParseConfig(const std::string& json_text);
ExperimentConfig LoadConfig(const std::string& path);

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;  // algorithm stream seed
  double alg_cost = 0.0;
  double opt0 = 0.0;       // best fixed arm loss in the mab scenario
  double optk = 0.0;
  double off = 0.0;
  double regret0 = 0.0;
  double regretk = 0.0;
  Hyperparams hyper;
  int switches = 0;
  int explore_steps = 0;
  int epochs = 1;
  double tv_sum = 0.0;
  double fractional_cost = 0.0;
  int queries = 0;
  bool one_per_step = true;

  // Per-step trace, kept for the first trace_trials trials when tracing.
  std::vector<StepLabel> labels;
  std::vector<int> heuristics;
  std::vector<double> step_cost;
  std::vector<double> cum_cost;
  std::vector<double> heur_cum;  // best single heuristic
  std::vector<double> off_cum;   // offline optimum
};

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MeanStderr Summarize(std::span<const double> values);

struct SummaryRow {
  std::string scenario;
  int trials = 0;
  std::string axis;
  double value = 0.0;
  MeanStderr alg_cost;
  MeanStderr opt0;
  MeanStderr optk;
  MeanStderr off;
  MeanStderr regret0;
  MeanStderr regretk;
  double ratio0 = 0.0;     // mean alg_cost / mean opt0
  double epsilon = 0.0;    // means over trials
  double gamma = 0.0;
  double alpha = 0.0;
  double mean_epochs = 1.0;
  double slope = 0.0;      // sweep only: d log regret / d log value
  bool has_slope = false;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;  // ordered by trial index
  SummaryRow summary;
};

// One trial, fully determined by (config, trial).
TrialRecord RunTrial(const ExperimentConfig& config, int trial);

// Runs all trials on config.threads workers; results ordered by trial.
ExperimentReport RunExperiment(const ExperimentConfig& config);

// Least-squares slope of log y against log x. Throws ValidationError for
// fewer than 3 points or non-positive values.
double FitLogLogSlope(std::span<const double> x, std::span<const double> y);

// One experiment per axis value; hyperparameters are re-derived per point.
// Every row carries the fitted slope of mean regret (regret0, or regretk in
// the opt_k scenario) against the axis value.
std::vector<SummaryRow> Sweep(const ExperimentConfig& config,
                              const std::string& axis,
                              std::span<const double> values);

// Config with the axis value applied.
ExperimentConfig ApplyAxis(const ExperimentConfig& config,
                           const std::string& axis, double value);

void WriteTrialsCsv(std::ostream& out, const ExperimentReport& report);
void WriteSummaryCsv(std::ostream& out, std::span<const SummaryRow> rows);
void WriteTraceCsv(std::ostream& out, const ExperimentReport& report);

// trials.csv, summary.csv and (when tracing) trace.csv under out_dir.
void WriteReport(const ExperimentReport& report);
void WriteSweep(const ExperimentConfig& config,
                std::span<const SummaryRow> rows);

}  // namespace mtsc

#endif  // MTSC_EXPERIMENT_H_
