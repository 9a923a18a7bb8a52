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

#ifndef MTSC_ORACLES_H_
#define MTSC_ORACLES_H_

#include <span>
#include <vector>

#include "mtsc/instance.h"

namespace mtsc {

struct OfflineSolution {
  double cost = 0.0;
  std::vector<int> states;  // s_1..s_T
};

// Exact offline optimum by dynamic programming over (t, state).
// Throws InfeasibleError if no finite-cost solution exists.
OfflineSolution OfflineOpt(const Instance& instance);

struct SwitchingSolution {
  double cost = 0.0;
  std::vector<int> heuristics;  // i_1..i_T
  int switches = 0;
};

// Cost of the best combination of `paths` switching at most `budget` times:
// sum_t c_t(s_t^{i_t}) + d(s_{t-1}^{i_{t-1}}, s_t^{i_t}). Bounded paths are
// charged their capped cost, including at switch steps.
SwitchingSolution OptK(const Instance& instance,
                       std::span<const HeuristicPath> paths, int budget);

// Cost of the best single heuristic, min_i sum_t f_t(i).
double OptZero(const Instance& instance, std::span<const HeuristicPath> paths);

}  // namespace mtsc

#endif  // MTSC_ORACLES_H_
