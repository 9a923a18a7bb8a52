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

#ifndef MTSC_ADVERSARY_H_
#define MTSC_ADVERSARY_H_

#include <string>
#include <utility>
#include <vector>

#include "mtsc/instance.h"
#include "mtsc/metric.h"
#include "mtsc/rng.h"

namespace mtsc {

// Loss table indexed [block][heuristic], entries in [0, 1].
using LossMatrix = std::vector<std::vector<double>>;

// Points of the lower-bound metric for heuristic i (0-based): the hub r_i
// and the two leaves a_i, b_i.
inline int LbHub(int /*ell*/, int i) { return i; }
inline int LbLeafA(int ell, int i) { return ell + i; }
inline int LbLeafB(int ell, int i) { return 2 * ell + i; }

// Metric closure of the graph with unit edges r_i - r_j, r_i - a_i and
// r_i - b_i on 3 ell points ordered r_1..r_ell, a_1..a_ell, b_1..b_ell.
MetricSpace BuildLbMetric(int ell);

struct LBInstance {
  int ell = 0;
  int blocks = 0;
  int pad = 0;  // zero-cost steps appended after the last block
  bool finite_sentinel = false;
  // sigma[j][i] is the point (a_i or b_i) that is free on the third step of
  // block j.
  std::vector<std::vector<int>> sigma;
  LossMatrix losses;
  Instance instance;
};

// Blocks of three steps: free exactly on the hubs, then free exactly off the
// hubs, then free exactly on {sigma_j^1, ..., sigma_j^ell}. Forbidden states
// cost +inf, or 2D when `use_finite_sentinel`. The start state is r_1.
LBInstance BuildLbBlocks(int ell, int blocks, const LossMatrix& losses,
                         Rng& rng, bool use_finite_sentinel = false,
                         int pad = 0);

// Simulated heuristic i (0-based): per block r_i, then sigma_j^i with
// probability 1 - loss(j, i) / 2 and the other leaf otherwise, then
// sigma_j^i. Stays put during padding.
HeuristicPath LbHeuristic(int i, const LBInstance& lb, Rng& rng);

// Closed-form expected cost of LbHeuristic(i): 2 blocks + sum_j loss(j, i),
// corrected for the move from the start r_1 to r_i in the first block.
double LbExpectedHeuristicCost(int i, const LBInstance& lb);

enum class LossKind { kIidBernoulli, kGapBernoulli, kRandomWalk };

LossKind ParseLossKind(const std::string& name);
std::string ToString(LossKind kind);

struct LossParams {
  double p = 0.5;        // iid_bernoulli: success probability
  double delta = 0.1;    // gap_bernoulli: best arm mean 1/2 - delta
  int best = 0;          // gap_bernoulli: index of the best arm
  double start = 0.5;    // random_walk: initial value
  double step = 0.05;    // random_walk: increment size
};

// iid_bernoulli: every entry Bernoulli(p). gap_bernoulli: Bernoulli(1/2 -
// delta) for the best arm, Bernoulli(1/2) otherwise. random_walk: columns
// start at `start` and move by +-step each row, clipped to [0, 1].
LossMatrix GenLosses(LossKind kind, int ell, int rows, const LossParams& params,
                     Rng& rng);

struct Segment {
  Instance instance;
  std::vector<HeuristicPath> paths;
};

// Concatenates cost sequences and heuristic paths. The result starts at the
// first segment's start; later segments' starts are dropped, so boundary
// moves are charged through the shared metric. Throws ValidationError on a
// metric or heuristic-count mismatch.
Segment ConcatSegments(const std::vector<Segment>& segments);

}  // namespace mtsc

#endif  // MTSC_ADVERSARY_H_
