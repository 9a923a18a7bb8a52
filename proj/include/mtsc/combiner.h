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

#ifndef MTSC_COMBINER_H_
#define MTSC_COMBINER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtsc/access.h"
#include "mtsc/experts.h"
#include "mtsc/instance.h"
#include "mtsc/rng.h"
#include "mtsc/transport.h"

namespace mtsc {

enum class StepLabel { kExploit, kSkip, kExplore };

std::string ToString(StepLabel label);

// Pre-sampled exploration coins and the step labels they induce. A schedule
// covers global steps first_step() .. last_step(); the step just before
// first_step() plays the role of the initial exploitation step with beta = 0.
class ExplorationSchedule {
 public:
  // Builds a schedule from explicit coins. `beta` and `picks` are indexed by
  // local time u = t - first_step + 1; beta[0] is ignored (treated as 0) and
  // picks must cover u = 1 .. length + m. Picks are 0-based heuristics.
  static ExplorationSchedule FromCoins(int first_step, int m,
                                       std::vector<char> beta,
                                       std::vector<int> picks);

  int first_step() const { return first_; }
  int last_step() const { return first_ + length_ - 1; }
  int length() const { return length_; }
  int m() const { return m_; }

  bool beta(int t) const { return beta_[Local(t)] != 0; }
  // e_t; defined for t up to last_step() + m so that tail skip steps have a
  // bootstrap target.
  int pick(int t) const { return picks_[Local(t)]; }
  StepLabel label(int t) const { return labels_[Local(t)]; }
  // For skip and explore steps, the explore step tau they lead to (which can
  // lie past last_step() for a window cut off by the horizon); 0 for exploit
  // steps.
  int target_time(int t) const { return target_[Local(t)]; }

  int explore_count() const { return explore_count_; }
  // Labels of steps first_step() .. last_step().
  std::vector<StepLabel> Labels() const;

 private:
  ExplorationSchedule() = default;
  int Local(int t) const { return t - first_ + 1; }
  void DeriveLabels();

  int first_ = 1;
  int length_ = 0;
  int m_ = 2;
  std::vector<char> beta_;
  std::vector<int> picks_;
  std::vector<StepLabel> labels_;
  std::vector<int> target_;
  int explore_count_ = 0;
};

// Draws beta_1..beta_T ~ Bernoulli(epsilon) and then e_1..e_{T+m} uniform on
// the ell heuristics, and labels the steps by replaying the learning loop.
ExplorationSchedule SampleSchedule(int horizon, int m, double epsilon, int ell,
                                   Rng& rng, int first_step = 1);

// One-hot loss at coordinate e with value f / loss_scale. Throws
// ValidationError if f lies outside [0, loss_scale]. A zero scale requires
// f == 0 and yields the zero vector.
std::vector<double> FeedbackVector(double f, int e, double loss_scale, int ell);

// Expert state for x_{t+1}: updated with the observed cost of e_t when t is
// an explore step, unchanged otherwise. The loss scale is 2D.
ExpertState DynamicsStep(const ExpertState& state,
                         const ExplorationSchedule& schedule,
                         const QueryGateway& gateway, const Instance& instance,
                         int t);

// Heuristic queried at step t: e_tau on skip and explore steps, i_t on
// exploit steps.
int QueryPolicy(const ExplorationSchedule& schedule, int i_t, int t);

struct ProducerState {
  int i = 0;  // exploited heuristic i_{t-1}
  int b = 0;  // last successfully queried state b_{t-1}
  int s = 0;  // occupied state s_{t-1}
};

struct StepOutcome {
  int i = 0;
  int b = 0;
  int s = 0;
  double cost = 0.0;
  bool known = false;  // s_t^{i_t} was revealed
  int queried = -1;
};

// One step of solution production. Resamples i_t by the Round coupling when
// x_t differs from x_{t-1}, issues the step's query and moves to s_t^{i_t}
// when revealed (or to the nearest zero-cost state when that state is
// forbidden at t). Otherwise moves greedily to argmin_s d(b, s) + c_t(s).
StepOutcome ProduceStep(const ProducerState& prev,
                        std::span<const double> x_prev,
                        std::span<const double> x_t,
                        const ExplorationSchedule& schedule,
                        QueryGateway& gateway, const Instance& instance, int t,
                        Rng& rng);

// Greedy fallback target: argmin_s d(b, s) + c_t(s), lowest index on ties.
int GreedyState(const Instance& instance, int t, int b);

struct Hyperparams {
  double epsilon = 0.0;
  double gamma = 0.0;
  double alpha = 0.0;
};

// epsilon = (D ell ln ell)^{1/3} m^{-4/3} opt^{-1/3} and
// gamma = (D ell ln ell)^{1/3} m^{2/3} opt^{-1/3}, clamped into (0, 0.49].
Hyperparams HedgeHyperparams(double diameter, int ell, int m,
                             double opt_guess);

// epsilon = (D ell k)^{1/3} m^{-4/3} opt^{-1/3} clamped into (0, 0.49], then
// alpha = D ell k / (epsilon opt) clamped into (0, 1/2] and
// gamma = sqrt(D ell k / (epsilon opt)) clamped into (0, 0.99].
Hyperparams ShareHyperparams(double diameter, int ell, int m, int k,
                             double opt_guess);

struct CombinerConfig {
  ExpertKind kind = ExpertKind::kHedge;
  int m = 2;
  double epsilon = 0.0;
  double gamma = 0.5;
  double alpha = 0.0;
  double opt_guess = 0.0;  // informational once the rates are set
  int k = 0;               // switch budget the rates were tuned for

  void Validate() const;
};

// Config with rates from HedgeHyperparams (k == 0 and kind == kHedge) or
// ShareHyperparams.
CombinerConfig AutoConfig(ExpertKind kind, double diameter, int ell, int m,
                          double opt_guess, int k = 0);

struct Benchmarks {
  double opt0 = 0.0;
  double optk = 0.0;
  double off = 0.0;
  int k = 0;
};

Benchmarks ComputeBenchmarks(const Instance& instance,
                             std::span<const HeuristicPath> paths, int k);

struct RunOptions {
  bool record_x = false;
  // Benchmarks to attach; computed from the instance when empty.
  std::optional<Benchmarks> benchmarks;
  int k = 0;  // budget for the computed OPT_{<=k}
};

struct RunResult {
  std::vector<StepLabel> labels;    // steps 1..T
  std::vector<int> heuristics;      // i_1..i_T
  std::vector<int> states;          // s_1..s_T
  std::vector<char> known;          // s_t^{i_t} revealed
  std::vector<double> step_cost;
  std::vector<double> cum_cost;
  std::vector<Distribution> x;      // x_0..x_T when recorded

  double alg_cost = 0.0;
  // sum_t f_t^T x_t + D sum_t ||x_{t-1} - x_t||_1
  double fractional_cost = 0.0;
  double tv_sum = 0.0;  // sum_t tv_emd(x_{t-1}, x_t)
  int initial_heuristic = 0;
  int switches = 0;     // steps with i_t != i_{t-1}
  int explore_steps = 0;
  QueryAudit audit;

  Benchmarks bench;
  double regret0 = 0.0;
  double regretk = 0.0;

  Hyperparams hyper;    // rates of the first epoch
  int epochs = 1;
  std::vector<int> epoch_starts;
  std::uint64_t seed = 0;
};

// Learning dynamics and solution production end to end. Paths must be
// wrapped by WrapBounded.
RunResult RunCombiner(const Instance& instance,
                      std::span<const HeuristicPath> paths,
                      const CombinerConfig& config, Rng& rng,
                      const RunOptions& options = {});

struct DoublingConfig {
  ExpertKind kind = ExpertKind::kHedge;
  int m = 2;
  int k = 1;            // used in share mode
  double omega = 1.0;   // initial guess
  double r = 1.0;       // competitiveness bound R
};

// Guess-and-double wrapper. The current epoch i ends before step t when the
// offline optimum of its steps so far exceeds R 2^i omega; a fresh combiner
// tuned for 2^i omega then continues from the current state.
RunResult RunDoubling(const Instance& instance,
                      std::span<const HeuristicPath> paths,
                      const DoublingConfig& config, Rng& rng,
                      const RunOptions& options = {});

// Offline optimum of steps first..last, free to start anywhere.
double WindowOfflineCost(const Instance& instance, int first, int last);

}  // namespace mtsc

#endif  // MTSC_COMBINER_H_
