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

#include "mtsc/instance.h"

#include <cmath>
#include <string>

#include "mtsc/errors.h"

namespace mtsc {

CostVector NormalizeCosts(std::span<const double> costs) {
  double lo = kInf;
  for (double c : costs) {
    if (std::isnan(c)) throw ValidationError("costs: NaN entry");
    lo = std::min(lo, c);
  }
  if (!std::isfinite(lo)) {
    throw InfeasibleError("costs: every state is forbidden at this step");
  }
  CostVector out(costs.begin(), costs.end());
  for (double& c : out) {
    if (std::isfinite(c)) c -= lo;
  }
  return out;
}

namespace {

std::vector<double> Flatten(const std::vector<CostVector>& rows, int n) {
  std::vector<double> flat;
  flat.reserve(rows.size() * n);
  for (size_t t = 0; t < rows.size(); ++t) {
    if (static_cast<int>(rows[t].size()) != n) {
      throw ValidationError("instance: cost vector " + std::to_string(t + 1) +
                            " has length " + std::to_string(rows[t].size()) +
                            ", expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[t].begin(), rows[t].end());
  }
  return flat;
}

}  // namespace

Instance::Instance(MetricSpace metric, int start, std::vector<CostVector> costs)
    : Instance(metric, start, Flatten(costs, metric.size())) {}

Instance::Instance(MetricSpace metric, int start, std::vector<double> flat_costs)
    : metric_(std::move(metric)),
      start_(start),
      horizon_(0),
      costs_(std::move(flat_costs)) {
  const size_t n = metric_.size();
  if (costs_.size() % n != 0) {
    throw ValidationError("instance: cost data is not a multiple of n");
  }
  horizon_ = static_cast<int>(costs_.size() / n);
  Check();
}

void Instance::Check() const {
  if (horizon_ < 1) throw ValidationError("instance: need T >= 1");
  if (start_ < 0 || start_ >= size()) {
    throw ValidationError("instance: start state " + std::to_string(start_) +
                          " out of range");
  }
  for (double c : costs_) {
    if (std::isnan(c) || c < 0.0) {
      throw ValidationError("instance: costs must lie in [0, +inf]");
    }
  }
}

Instance Instance::Normalized() const {
  std::vector<double> flat;
  flat.reserve(costs_.size());
  for (int t = 1; t <= horizon_; ++t) {
    CostVector row = NormalizeCosts(cost(t));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Instance(metric_, start_, std::move(flat));
}

bool Instance::IsNormalized() const {
  for (int t = 1; t <= horizon_; ++t) {
    double lo = kInf;
    for (double c : cost(t)) lo = std::min(lo, c);
    if (lo != 0.0) return false;
  }
  return true;
}

HeuristicPath::HeuristicPath(std::vector<int> states, bool bounded)
    : states_(std::move(states)), bounded_(bounded) {
  if (states_.empty()) {
    throw ValidationError("heuristic path: needs at least the start state");
  }
}

void CheckPath(const Instance& instance, const HeuristicPath& path) {
  if (path.horizon() != instance.horizon()) {
    throw ValidationError("heuristic path: horizon " +
                          std::to_string(path.horizon()) + " != instance T " +
                          std::to_string(instance.horizon()));
  }
  if (path.state(0) != instance.start()) {
    throw ValidationError("heuristic path: states[0] must equal s_0");
  }
  for (int s : path.states()) {
    if (s < 0 || s >= instance.size()) {
      throw ValidationError("heuristic path: state index " + std::to_string(s) +
                            " out of range");
    }
  }
}

int NearestZeroCostState(const Instance& instance, int t, int state) {
  const MetricSpace& d = instance.metric();
  int best = -1;
  for (int z = 0; z < instance.size(); ++z) {
    if (instance.cost(t, z) != 0.0) continue;
    if (best < 0 || d(state, z) < d(state, best)) best = z;
  }
  return best;
}

double TransitionCost(const Instance& instance, int t, int from, int to,
                      bool capped) {
  const MetricSpace& d = instance.metric();
  double raw = instance.cost(t, to) + d(from, to);
  if (!capped || raw <= 2.0 * d.diameter()) return raw;
  int z = NearestZeroCostState(instance, t, to);
  if (z < 0) {
    throw ValidationError("bounded heuristic: no zero-cost state at step " +
                          std::to_string(t));
  }
  return d(from, z) + d(z, to);
}

double SolutionCost(const Instance& instance, std::span<const int> states) {
  if (static_cast<int>(states.size()) != instance.horizon()) {
    throw ValidationError("solution: length " + std::to_string(states.size()) +
                          " != T " + std::to_string(instance.horizon()));
  }
  double total = 0.0;
  int prev = instance.start();
  for (int t = 1; t <= instance.horizon(); ++t) {
    int s = states[t - 1];
    if (s < 0 || s >= instance.size()) {
      throw ValidationError("solution: state index out of range");
    }
    total += instance.cost(t, s) + instance.metric()(prev, s);
    prev = s;
  }
  return total;
}

double HeuristicStepCost(const Instance& instance, const HeuristicPath& path,
                         int t) {
  if (t < 1 || t > path.horizon()) {
    throw ValidationError("heuristic step cost: t out of range");
  }
  return TransitionCost(instance, t, path.state(t - 1), path.state(t),
                        path.bounded());
}

std::vector<double> PathCosts(const Instance& instance,
                              const HeuristicPath& path) {
  std::vector<double> f(instance.horizon());
  for (int t = 1; t <= instance.horizon(); ++t) {
    f[t - 1] = HeuristicStepCost(instance, path, t);
  }
  return f;
}

}  // namespace mtsc
