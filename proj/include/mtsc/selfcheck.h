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

// Exhaustive reference oracles and random small instances, used by the
// `validate` subcommand and the test suites.

#ifndef MTSC_SELFCHECK_H_
#define MTSC_SELFCHECK_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mtsc/instance.h"
#include "mtsc/rng.h"

namespace mtsc {

struct SmallCase {
  Instance instance;
  std::vector<HeuristicPath> paths;
  int k = 0;
};

// n in [1, max_n], T in [1, max_t], ell in [1, max_ell], k in [0, max_k].
// Distances are small integers closed under shortest paths; costs are small
// integers with occasional +inf, every step keeping a finite state. Half of
// the cases get wrapped (cost-bounded) paths.
SmallCase RandomSmallCase(Rng& rng, int max_n = 4, int max_t = 6,
                          int max_ell = 3, int max_k = 2);

// min over all n^T state sequences of SolutionCost.
double BruteForceOffline(const Instance& instance);

// min over all ell^T index sequences with at most k switches. The t-th term
// is f_t(i_t) when i_t == i_{t-1} (or t == 1) and the transition cost from
// s_{t-1}^{i_{t-1}} to s_t^{i_t} otherwise.
double BruteForceOptK(const Instance& instance,
                      std::span<const HeuristicPath> paths, int k);

struct SelfCheckReport {
  int cases = 0;
  int failures = 0;
  double max_error = 0.0;
  std::string first_failure;
};

// Compares OfflineOpt and OptK with the exhaustive oracles on `cases`
// random small instances.
SelfCheckReport RunOracleSelfCheck(int cases, std::uint64_t seed,
                                   double tolerance = 1e-9);

}  // namespace mtsc

#endif  // MTSC_SELFCHECK_H_
