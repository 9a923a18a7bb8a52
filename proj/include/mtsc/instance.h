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

#ifndef MTSC_INSTANCE_H_
#define MTSC_INSTANCE_H_

#include <limits>
#include <span>
#include <vector>

#include "mtsc/metric.h"

namespace mtsc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-state service costs of one step. +inf marks a forbidden state.
using CostVector = std::vector<double>;

// Subtracts the finite minimum; +inf entries stay +inf. Throws
// InfeasibleError if every entry is infinite.
CostVector NormalizeCosts(std::span<const double> costs);

// An online MTS input: metric, start state s_0 and cost vectors c_1..c_T.
// Time is 1-based throughout the library; step 0 is the start.
class Instance {
 public:
  Instance(MetricSpace metric, int start, std::vector<CostVector> costs);
  // `flat_costs` holds T rows of n entries.
  Instance(MetricSpace metric, int start, std::vector<double> flat_costs);

  const MetricSpace& metric() const { return metric_; }
  int size() const { return metric_.size(); }
  int start() const { return start_; }
  int horizon() const { return horizon_; }

  std::span<const double> cost(int t) const {
    return {costs_.data() + static_cast<size_t>(t - 1) * size(),
            static_cast<size_t>(size())};
  }
  double cost(int t, int state) const {
    return costs_[static_cast<size_t>(t - 1) * size() + state];
  }
  const std::vector<double>& flat_costs() const { return costs_; }

  // Same instance with every cost vector normalized.
  Instance Normalized() const;
  bool IsNormalized() const;

 private:
  void Check() const;

  MetricSpace metric_;
  int start_;
  int horizon_;
  std::vector<double> costs_;
};

// A heuristic's states s_0..s_T. `bounded` is set by WrapBounded and caps
// the charged per-step cost at 2D by a detour through a zero-cost state.
class HeuristicPath {
 public:
  explicit HeuristicPath(std::vector<int> states, bool bounded = false);

  int horizon() const { return static_cast<int>(states_.size()) - 1; }
  int state(int t) const { return states_[t]; }
  const std::vector<int>& states() const { return states_; }
  bool bounded() const { return bounded_; }

  friend bool operator==(const HeuristicPath&, const HeuristicPath&) = default;

 private:
  std::vector<int> states_;
  bool bounded_;
};

// Throws ValidationError unless the path fits the instance: same horizon,
// valid state indices, and states[0] == s_0.
void CheckPath(const Instance& instance, const HeuristicPath& path);

// Zero-cost state at step t nearest to `state` (ties: lowest index), or -1.
int NearestZeroCostState(const Instance& instance, int t, int state);

// Cost of arriving at `to` at step t from `from` at step t-1:
// c_t(to) + d(from, to). When `capped` and that exceeds 2D, the request is
// served at the zero-cost state z nearest to `to` and the charge becomes
// d(from, z) + d(z, to) <= 2D.
double TransitionCost(const Instance& instance, int t, int from, int to,
                      bool capped);

// Sum over t of c_t(s_t) + d(s_{t-1}, s_t); `states` holds s_1..s_T and s_0
// is the instance start. +inf if any occupied state is forbidden.
double SolutionCost(const Instance& instance, std::span<const int> states);

// f_t(i) for the heuristic following `path`, 1 <= t <= T.
double HeuristicStepCost(const Instance& instance, const HeuristicPath& path,
                         int t);

// f_1(i)..f_T(i).
std::vector<double> PathCosts(const Instance& instance,
                              const HeuristicPath& path);

}  // namespace mtsc

#endif  // MTSC_INSTANCE_H_
