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

#include "mtsc/mab.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mtsc/errors.h"
#include "mtsc/transport.h"

namespace mtsc {

MemoryAdversary::MemoryAdversary(int window, int arms, int horizon,
                                 LossRule rule)
    : window_(window), arms_(arms), horizon_(horizon), rule_(std::move(rule)) {
  if (window < 1) throw ValidationError("adversary: window must be >= 1");
  if (arms < 1) throw ValidationError("adversary: need at least one arm");
  if (horizon < 1) throw ValidationError("adversary: horizon must be >= 1");
  if (!rule_) throw ValidationError("adversary: missing loss rule");
}

double MemoryAdversary::Loss(int t, std::span<const int> window_actions) const {
  if (t < 1 || t > horizon_) throw ValidationError("adversary: bad time");
  if (window_actions.size() > static_cast<size_t>(window_)) {
    window_actions = window_actions.last(window_);
  }
  return rule_(t, window_actions);
}

double MemoryAdversary::ConstantPolicyLoss(int arm) const {
  std::vector<int> history(window_, arm);
  double total = 0.0;
  for (int t = 1; t <= horizon_; ++t) {
    const int len = std::min(t, window_);
    total += rule_(t, std::span<const int>(history).last(len));
  }
  return total;
}

double MemoryAdversary::BestFixedLoss() const {
  double best = kInf;
  for (int a = 0; a < arms_; ++a) best = std::min(best, ConstantPolicyLoss(a));
  return best;
}

MemoryAdversary SwitchingCostAdversary(LossMatrix base) {
  if (base.empty() || base.front().empty()) {
    throw ValidationError("switching adversary: empty loss table");
  }
  const int arms = static_cast<int>(base.front().size());
  for (const auto& row : base) {
    if (static_cast<int>(row.size()) != arms) {
      throw ValidationError("switching adversary: ragged loss table");
    }
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("switching adversary: loss outside [0, 1]");
      }
    }
  }
  const int horizon = static_cast<int>(base.size());
  return MemoryAdversary(
      2, arms, horizon,
      [table = std::move(base)](int t, std::span<const int> a) {
        double loss = table[t - 1][a.back()];
        if (a.size() == 2 && a[0] != a[1]) loss += 1.0;
        return loss;
      });
}

MemoryAdversary ConstantAdversary(double c, int arms, int horizon) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw ValidationError("constant adversary: loss outside [0, 1]");
  }
  return MemoryAdversary(1, arms, horizon,
                         [c](int, std::span<const int>) { return c; });
}

MabResult MabPlay(const ExplorationSchedule& schedule, ExpertState expert,
                  const MemoryAdversary& adversary, int horizon, Rng& rng) {
  const int ell = expert.size();
  if (ell != adversary.arms()) {
    throw ValidationError("mab: expert count differs from arm count");
  }
  if (horizon != adversary.horizon() || schedule.first_step() != 1 ||
      schedule.last_step() != horizon) {
    throw ValidationError("mab: schedule, adversary and horizon disagree");
  }
  if (schedule.m() < adversary.window()) {
    throw ValidationError("mab: delay m shorter than the adversary memory");
  }
  MabResult result;
  result.actions.reserve(horizon);
  const int w = adversary.window();
  std::vector<int> recent;  // trailing window of actions
  Distribution x_prev = expert.distribution();
  Distribution x_cur = x_prev;
  int i = UniformIndex(rng, ell);
  int last_action = -1;
  for (int t = 1; t <= horizon; ++t) {
    bool changed = false;
    for (int j = 0; j < ell; ++j) {
      if (std::abs(x_prev[j] - x_cur[j]) > 1e-12) changed = true;
    }
    if (changed) {
      result.tv_sum += TvEmd(x_prev, x_cur);
      i = RoundStep(i, x_prev, x_cur, rng);
    }
    const StepLabel label = schedule.label(t);
    const int action = QueryPolicy(schedule, i, t);
    recent.push_back(action);
    if (static_cast<int>(recent.size()) > w) recent.erase(recent.begin());
    const double loss = adversary.Loss(t, recent);
    result.actions.push_back(action);
    result.total_loss += loss;
    if (last_action >= 0 && action != last_action) ++result.switches;
    last_action = action;

    x_prev = x_cur;
    if (label == StepLabel::kExplore) {
      ++result.explore_steps;
      const int e = schedule.pick(t);
      // The last m actions were all e, so `loss` is the loss of the constant
      // policy e at this step.
      expert = Update(expert, FeedbackVector(loss, e, 1.0, ell));
      x_cur = expert.distribution();
    }
  }
  result.best_fixed = adversary.BestFixedLoss();
  result.regret = result.total_loss - result.best_fixed;
  return result;
}

Hyperparams MabHyperparams(int ell, int m, int horizon) {
  if (ell < 2) throw ValidationError("mab hyperparameters: need ell >= 2");
  if (m < 1 || horizon < 1) {
    throw ValidationError("mab hyperparameters: need m >= 1 and T >= 1");
  }
  const double lnl = ell * std::log(ell);
  Hyperparams h;
  h.epsilon = std::min(
      0.49, std::cbrt(lnl) * std::pow(m, -2.0 / 3.0) * std::cbrt(1.0 / horizon));
  h.gamma = std::min(0.49, std::cbrt(m * lnl / horizon));
  return h;
}

MabResult RunMab(const MemoryAdversary& adversary, int m, Rng& rng) {
  const int ell = adversary.arms();
  const int horizon = adversary.horizon();
  Hyperparams h = MabHyperparams(ell, m, horizon);
  ExplorationSchedule schedule =
      SampleSchedule(horizon, m, h.epsilon, ell, rng);
  ExpertState expert =
      ExpertState::Init(ell, RateFromGamma(h.gamma), 0.0, ExpertKind::kHedge);
  MabResult result = MabPlay(schedule, std::move(expert), adversary, horizon, rng);
  result.hyper = h;
  return result;
}

}  // namespace mtsc
