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

#ifndef MTSC_MAB_H_
#define MTSC_MAB_H_

#include <functional>
#include <span>
#include <vector>

#include "mtsc/adversary.h"
#include "mtsc/combiner.h"
#include "mtsc/experts.h"
#include "mtsc/rng.h"

namespace mtsc {

// Bandit adversary whose loss at step t depends only on t and the learner's
// trailing actions a_{t-w+1}, ..., a_t (fewer near the start).
class MemoryAdversary {
 public:
  // `rule(t, actions)` gets the trailing window with the current action
  // last and must return a loss in [0, 1].
  using LossRule = std::function<double(int, std::span<const int>)>;

  MemoryAdversary(int window, int arms, int horizon, LossRule rule);

  int window() const { return window_; }
  int arms() const { return arms_; }
  int horizon() const { return horizon_; }

  double Loss(int t, std::span<const int> window_actions) const;

  // Total loss of always playing `arm`.
  double ConstantPolicyLoss(int arm) const;
  double BestFixedLoss() const;

 private:
  int window_;
  int arms_;
  int horizon_;
  LossRule rule_;
};

// Window-2 adversary charging base[t-1][a_t] + 1{a_t != a_{t-1}}, which can
// exceed 1 on a switch; only the switch-free losses ever reach the learner.
MemoryAdversary SwitchingCostAdversary(LossMatrix base);

// Loss c on every step regardless of actions.
MemoryAdversary ConstantAdversary(double c, int arms, int horizon);

struct MabResult {
  std::vector<int> actions;  // a_1..a_T
  double total_loss = 0.0;
  double best_fixed = 0.0;
  double regret = 0.0;
  int switches = 0;
  int explore_steps = 0;
  double tv_sum = 0.0;
  Hyperparams hyper;
};

// Plays i_t ~ Round(x) on exploitation steps and the bootstrapped e_tau on
// skip and explore steps; on each explore step the observed loss (scale 1)
// updates the experts.
MabResult MabPlay(const ExplorationSchedule& schedule, ExpertState expert,
                  const MemoryAdversary& adversary, int horizon, Rng& rng);

// epsilon = (ell ln ell)^{1/3} m^{-2/3} T^{-1/3} and
// gamma = (m ell ln ell)^{1/3} T^{-1/3}, clamped into (0, 0.49].
Hyperparams MabHyperparams(int ell, int m, int horizon);

// Samples the schedule from `rng` and runs HEDGE with MabHyperparams.
MabResult RunMab(const MemoryAdversary& adversary, int m, Rng& rng);

}  // namespace mtsc

#endif  // MTSC_MAB_H_
