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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "mtsc/adversary.h"
#include "mtsc/errors.h"
#include "mtsc/mab.h"

namespace mtsc {
namespace {

double PlayedLoss(const MemoryAdversary& adv, const std::vector<int>& actions) {
  double total = 0.0;
  for (size_t t = 0; t < actions.size(); ++t) {
    const size_t from = t + 1 >= size_t(adv.window()) ? t + 1 - adv.window() : 0;
    std::vector<int> w(actions.begin() + from, actions.begin() + t + 1);
    total += adv.Loss(static_cast<int>(t) + 1, w);
  }
  return total;
}

TEST_CASE("Constant adversary charges T c whatever is played") {
  MemoryAdversary adv = ConstantAdversary(0.25, 3, 400);
  Rng rng(1);
  MabResult r = RunMab(adv, 2, rng);
  CHECK(r.total_loss == doctest::Approx(100.0));
  CHECK(r.best_fixed == doctest::Approx(100.0));
  CHECK(r.regret == doctest::Approx(0.0));
}

TEST_CASE("Epsilon zero plays one sampled arm throughout") {
  Rng rng(3);
  LossMatrix base = GenLosses(LossKind::kIidBernoulli, 2, 300, {}, rng);
  MemoryAdversary adv = SwitchingCostAdversary(base);
  ExplorationSchedule s = SampleSchedule(300, 2, 0.0, 2, rng);
  MabResult r = MabPlay(
      s, ExpertState::Init(2, 0.3, 0.0, ExpertKind::kHedge), adv, 300, rng);
  CHECK(r.switches == 0);
  const int arm = r.actions.front();
  for (int a : r.actions) CHECK(a == arm);
  double column = 0.0;
  for (const auto& row : base) column += row[arm];
  CHECK(r.total_loss == doctest::Approx(column));
  CHECK(r.total_loss == doctest::Approx(adv.ConstantPolicyLoss(arm)));
}

TEST_CASE("Switching penalties") {
  const int horizon = 101;
  MemoryAdversary adv =
      SwitchingCostAdversary(LossMatrix(horizon, std::vector<double>(2, 0.0)));
  CHECK(PlayedLoss(adv, std::vector<int>(horizon, 1)) == 0.0);
  std::vector<int> alternate(horizon);
  for (int t = 0; t < horizon; ++t) alternate[t] = t % 2;
  CHECK(PlayedLoss(adv, alternate) == horizon - 1.0);

  Rng rng(5);
  const int runs = 2000;
  double sum = 0.0;
  for (int r = 0; r < runs; ++r) {
    std::vector<int> a(horizon);
    for (int& v : a) v = UniformIndex(rng, 2);
    sum += PlayedLoss(adv, a);
  }
  // Each of the T-1 transitions switches with probability 1/2.
  const double sd = std::sqrt((horizon - 1) * 0.25 / runs);
  CHECK(std::abs(sum / runs - (horizon - 1) / 2.0) < 4 * sd);
}

// With identical arms the exploited index only moves through the rounding
// coupling, so the switches across exploration windows average to the summed
// earth mover distance of consecutive distributions.
TEST_CASE("Identical arms: rounding switches track the summed earth mover distance") {
  const int horizon = 3000, m = 2, ell = 3;
  Rng rng(7);
  LossMatrix base(horizon, std::vector<double>(ell, 0.0));
  for (auto& row : base) {
    const double v = Uniform01(rng);
    for (double& x : row) x = v;
  }
  MemoryAdversary adv = SwitchingCostAdversary(base);
  const int runs = 400;
  double sum = 0.0, sq = 0.0;
  for (int r = 0; r < runs; ++r) {
    ExplorationSchedule s = SampleSchedule(horizon, m, 0.05, ell, rng);
    MabResult res = MabPlay(
        s, ExpertState::Init(ell, 0.5, 0.0, ExpertKind::kHedge), adv, horizon,
        rng);
    int rounding = 0;
    for (int t = m + 1; t < horizon; ++t) {
      if (s.label(t) != StepLabel::kExplore) continue;
      rounding += res.actions[t - m - 1] != res.actions[t];
    }
    const double diff = rounding - res.tv_sum;
    sum += diff;
    sq += diff * diff;
  }
  const double mean = sum / runs;
  const double se = std::sqrt((sq / runs - mean * mean) / runs);
  CHECK(std::abs(mean) <= 4 * se + 1e-9);
}

TEST_CASE("MAB hyperparameters") {
  Hyperparams h = MabHyperparams(2, 2, 1000000);
  const double want = std::cbrt(2 * std::log(2.0)) * std::pow(2, -2.0 / 3.0) *
                      1e-2;
  CHECK(h.epsilon == doctest::Approx(want).epsilon(1e-12));
  CHECK(h.epsilon == doctest::Approx(0.00704).epsilon(1e-3));
  CHECK(MabHyperparams(3, 2, 1000).epsilon ==
        doctest::Approx(10 * MabHyperparams(3, 2, 1000000).epsilon));
  CHECK(MabHyperparams(3, 16, 100000000).gamma ==
        doctest::Approx(2 * MabHyperparams(3, 2, 100000000).gamma));
  CHECK_THROWS_AS(MabHyperparams(1, 2, 100), ValidationError);
}

TEST_CASE("MabPlay argument checks") {
  MemoryAdversary adv = ConstantAdversary(0.5, 2, 50);
  Rng rng(1);
  ExplorationSchedule s = SampleSchedule(40, 2, 0.1, 2, rng);
  CHECK_THROWS_AS(
      MabPlay(s, ExpertState::Init(2, 0.3, 0, ExpertKind::kHedge), adv, 50, rng),
      ValidationError);
  ExplorationSchedule ok = SampleSchedule(50, 2, 0.1, 3, rng);
  CHECK_THROWS_AS(
      MabPlay(ok, ExpertState::Init(3, 0.3, 0, ExpertKind::kHedge), adv, 50, rng),
      ValidationError);
}

}  // namespace
}  // namespace mtsc
