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

#ifndef MTSC_FAMILIES_H_
#define MTSC_FAMILIES_H_

#include <vector>

#include "mtsc/adversary.h"
#include "mtsc/instance.h"
#include "mtsc/rng.h"

namespace mtsc {

// Planted-expert family on a uniform metric. A hidden target z_t jumps to a
// fresh state with probability `target_switch` per step; c_t is 0 at z_t and
// at each other state independently with probability `free_fraction`, and
// `miss_cost` elsewhere. Heuristic `planted` sits at z_t except with
// probability `noise`, when it sits at a uniformly random other state. The
// remaining heuristics are lazy random walks that jump with probability
// `walk_rate`.
struct PlantedParams {
  int n = 4;
  int ell = 2;
  int horizon = 1000;
  double scale = 1.0;  // distance between distinct states, so D = scale
  double target_switch = 0.05;
  double free_fraction = 0.5;
  double miss_cost = 1.0;
  double noise = 0.05;
  double walk_rate = 0.1;
  int planted = 0;

  void Validate() const;
};

// Paths come back wrapped (cost-bounded).
Segment PlantedExpert(const PlantedParams& params, Rng& rng);

// Weighted star: leaf i sits at distance weights[i] from a hub that is not a
// state, so d(i, j) = w_i + w_j. Each step requests a leaf drawn with
// probability proportional to popularity[i]; the request costs 0 at that
// leaf and `miss_cost` elsewhere. Heuristics: 0 follows every request, 1
// stays at the most popular leaf, 2 moves after two identical requests in a
// row; any further heuristics are lazy random walks.
struct StarParams {
  std::vector<double> weights = {0.5, 0.5, 1.0, 1.5};
  std::vector<double> popularity = {4.0, 2.0, 1.0, 1.0};
  int ell = 3;
  int horizon = 1000;
  double miss_cost = 1.0;
  double walk_rate = 0.1;

  void Validate() const;
};

Segment WeightedStar(const StarParams& params, Rng& rng);

// k + 1 planted segments of `segment_length` steps; segment j plants
// heuristic j mod ell. Paths come back wrapped.
Segment TrackingSegments(const PlantedParams& base, int k, int segment_length,
                         Rng& rng);

}  // namespace mtsc

#endif  // MTSC_FAMILIES_H_
