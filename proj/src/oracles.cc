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

#include "mtsc/oracles.h"

#include <cmath>
#include <optional>

#include "mtsc/detail/dp.h"
#include "mtsc/errors.h"

namespace mtsc {
namespace {

std::optional<double> Finite(double v) {
  if (std::isinf(v)) return std::nullopt;
  return v;
}

}  // namespace

OfflineSolution OfflineOpt(const Instance& instance) {
  const MetricSpace& d = instance.metric();
  auto result = detail::OfflineOptDp<double>(
      instance.size(), instance.horizon(), instance.start(),
      [&](int i, int j) { return d(i, j); },
      [&](int t, int s) { return Finite(instance.cost(t, s)); });
  if (!result.cost) {
    throw InfeasibleError("offline optimum: instance has no finite solution");
  }
  return {*result.cost, std::move(result.path)};
}

SwitchingSolution OptK(const Instance& instance,
                       std::span<const HeuristicPath> paths, int budget) {
  if (paths.empty()) throw ValidationError("opt_k: need at least one path");
  if (budget < 0) throw ValidationError("opt_k: switch budget must be >= 0");
  for (const HeuristicPath& p : paths) CheckPath(instance, p);
  const int ell = static_cast<int>(paths.size());
  const int horizon = instance.horizon();
  // f_t(i) is needed for every cell; precompute it once.
  std::vector<double> stay(static_cast<size_t>(horizon) * ell);
  for (int i = 0; i < ell; ++i) {
    for (int t = 1; t <= horizon; ++t) {
      stay[static_cast<size_t>(t - 1) * ell + i] =
          HeuristicStepCost(instance, paths[i], t);
    }
  }
  auto result = detail::SwitchBudgetDp<double>(
      ell, horizon, std::min(budget, horizon - 1),
      [&](int t, int i) {
        return Finite(stay[static_cast<size_t>(t - 1) * ell + i]);
      },
      [&](int t, int from, int to) {
        return Finite(TransitionCost(instance, t, paths[from].state(t - 1),
                                     paths[to].state(t), paths[to].bounded()));
      });
  if (!result.cost) {
    throw InfeasibleError("opt_k: every heuristic combination is infeasible");
  }
  return {*result.cost, std::move(result.path), result.switches};
}

double OptZero(const Instance& instance, std::span<const HeuristicPath> paths) {
  if (paths.empty()) throw ValidationError("opt_0: need at least one path");
  double best = kInf;
  for (const HeuristicPath& p : paths) {
    CheckPath(instance, p);
    double total = 0.0;
    for (int t = 1; t <= instance.horizon(); ++t) {
      total += HeuristicStepCost(instance, p, t);
    }
    best = std::min(best, total);
  }
  return best;
}

}  // namespace mtsc
