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

#include "mtsc/adversary.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mtsc/errors.h"

namespace mtsc {
namespace {

void CheckLosses(const LossMatrix& losses, int ell, int blocks) {
  if (static_cast<int>(losses.size()) != blocks) {
    throw ValidationError("lower bound: need one loss row per block");
  }
  for (const auto& row : losses) {
    if (static_cast<int>(row.size()) != ell) {
      throw ValidationError("lower bound: loss row has wrong length");
    }
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("lower bound: loss outside [0, 1]");
      }
    }
  }
}

}  // namespace

MetricSpace BuildLbMetric(int ell) {
  if (ell < 1) throw ValidationError("lower bound metric: need ell >= 1");
  const int n = 3 * ell;
  std::vector<std::vector<double>> edges(n, std::vector<double>(n, kInf));
  for (int i = 0; i < ell; ++i) {
    for (int j = 0; j < ell; ++j) {
      if (i != j) edges[LbHub(ell, i)][LbHub(ell, j)] = 1.0;
    }
    for (int leaf : {LbLeafA(ell, i), LbLeafB(ell, i)}) {
      edges[LbHub(ell, i)][leaf] = 1.0;
      edges[leaf][LbHub(ell, i)] = 1.0;
    }
  }
  return MetricClosure(std::move(edges));
}

LBInstance BuildLbBlocks(int ell, int blocks, const LossMatrix& losses,
                         Rng& rng, bool use_finite_sentinel, int pad) {
  if (blocks < 1) throw ValidationError("lower bound: need at least one block");
  if (pad < 0) throw ValidationError("lower bound: padding must be >= 0");
  CheckLosses(losses, ell, blocks);
  MetricSpace metric = BuildLbMetric(ell);
  const int n = metric.size();
  const double forbidden =
      use_finite_sentinel ? 2.0 * metric.diameter() : kInf;

  LBInstance lb{ell, blocks, pad, use_finite_sentinel, {}, losses,
                Instance(metric, 0, std::vector<CostVector>{CostVector(n, 0.0)})};
  lb.sigma.assign(blocks, std::vector<int>(ell));
  const int horizon = 3 * blocks + pad;
  std::vector<double> flat(static_cast<size_t>(horizon) * n, 0.0);
  for (int j = 0; j < blocks; ++j) {
    double* first = &flat[static_cast<size_t>(3 * j) * n];
    double* second = first + n;
    double* third = second + n;
    for (int s = 0; s < n; ++s) {
      const bool hub = s < ell;
      first[s] = hub ? 0.0 : forbidden;
      second[s] = hub ? forbidden : 0.0;
      third[s] = forbidden;
    }
    for (int i = 0; i < ell; ++i) {
      const int pick = Bernoulli(rng, 0.5) ? LbLeafB(ell, i) : LbLeafA(ell, i);
      lb.sigma[j][i] = pick;
      third[pick] = 0.0;
    }
  }
  lb.instance = Instance(std::move(metric), LbHub(ell, 0), std::move(flat));
  return lb;
}

HeuristicPath LbHeuristic(int i, const LBInstance& lb, Rng& rng) {
  if (i < 0 || i >= lb.ell) {
    throw ValidationError("lower bound heuristic: index out of range");
  }
  const int ell = lb.ell;
  std::vector<int> states;
  states.reserve(3 * lb.blocks + lb.pad + 1);
  states.push_back(lb.instance.start());
  for (int j = 0; j < lb.blocks; ++j) {
    const int sigma = lb.sigma[j][i];
    const int other =
        sigma == LbLeafA(ell, i) ? LbLeafB(ell, i) : LbLeafA(ell, i);
    states.push_back(LbHub(ell, i));
    states.push_back(Bernoulli(rng, 1.0 - lb.losses[j][i] / 2.0) ? sigma
                                                                 : other);
    states.push_back(sigma);
  }
  for (int t = 0; t < lb.pad; ++t) states.push_back(states.back());
  return HeuristicPath(std::move(states));
}

double LbExpectedHeuristicCost(int i, const LBInstance& lb) {
  double total = 2.0 * lb.blocks;
  for (int j = 0; j < lb.blocks; ++j) total += lb.losses[j][i];
  const MetricSpace& d = lb.instance.metric();
  // The generic block pays 1 to reach r_i from the previous leaf.
  total += d(lb.instance.start(), LbHub(lb.ell, i)) - 1.0;
  return total;
}

LossKind ParseLossKind(const std::string& name) {
  if (name == "iid_bernoulli") return LossKind::kIidBernoulli;
  if (name == "gap_bernoulli") return LossKind::kGapBernoulli;
  if (name == "random_walk") return LossKind::kRandomWalk;
  throw ValidationError("unknown loss generator '" + name + "'");
}

std::string ToString(LossKind kind) {
  switch (kind) {
    case LossKind::kIidBernoulli:
      return "iid_bernoulli";
    case LossKind::kGapBernoulli:
      return "gap_bernoulli";
    case LossKind::kRandomWalk:
      return "random_walk";
  }
  return "iid_bernoulli";
}

LossMatrix GenLosses(LossKind kind, int ell, int rows, const LossParams& params,
                     Rng& rng) {
  if (ell < 1 || rows < 1) {
    throw ValidationError("loss generator: need ell >= 1 and rows >= 1");
  }
  LossMatrix out(rows, std::vector<double>(ell, 0.0));
  switch (kind) {
    case LossKind::kIidBernoulli:
      if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw ValidationError("iid_bernoulli: p must lie in [0, 1]");
      }
      for (auto& row : out) {
        for (double& v : row) v = Bernoulli(rng, params.p) ? 1.0 : 0.0;
      }
      break;
    case LossKind::kGapBernoulli:
      if (!(params.delta > 0.0 && params.delta < 0.5)) {
        throw ValidationError("gap_bernoulli: delta must lie in (0, 1/2)");
      }
      if (params.best < 0 || params.best >= ell) {
        throw ValidationError("gap_bernoulli: best arm out of range");
      }
      for (auto& row : out) {
        for (int i = 0; i < ell; ++i) {
          const double mean = i == params.best ? 0.5 - params.delta : 0.5;
          row[i] = Bernoulli(rng, mean) ? 1.0 : 0.0;
        }
      }
      break;
    case LossKind::kRandomWalk: {
      if (!(params.start >= 0.0 && params.start <= 1.0) ||
          !(params.step >= 0.0)) {
        throw ValidationError("random_walk: need start in [0, 1], step >= 0");
      }
      std::vector<double> level(ell, params.start);
      for (auto& row : out) {
        for (int i = 0; i < ell; ++i) {
          row[i] = level[i];
          const double move = Bernoulli(rng, 0.5) ? params.step : -params.step;
          level[i] = std::clamp(level[i] + move, 0.0, 1.0);
        }
      }
      break;
    }
  }
  return out;
}

Segment ConcatSegments(const std::vector<Segment>& segments) {
  if (segments.empty()) throw ValidationError("concat: no segments");
  const Segment& head = segments.front();
  const int ell = static_cast<int>(head.paths.size());
  if (ell < 1) throw ValidationError("concat: segment without heuristics");
  std::vector<double> flat;
  std::vector<std::vector<int>> states(ell,
                                       std::vector<int>{head.instance.start()});
  bool bounded = true;
  for (const Segment& seg : segments) {
    if (!(seg.instance.metric() == head.instance.metric())) {
      throw ValidationError("concat: segments use different metrics");
    }
    if (static_cast<int>(seg.paths.size()) != ell) {
      throw ValidationError("concat: segments have different heuristic counts");
    }
    flat.insert(flat.end(), seg.instance.flat_costs().begin(),
                seg.instance.flat_costs().end());
    for (int i = 0; i < ell; ++i) {
      CheckPath(seg.instance, seg.paths[i]);
      bounded = bounded && seg.paths[i].bounded();
      const auto& s = seg.paths[i].states();
      states[i].insert(states[i].end(), s.begin() + 1, s.end());
    }
  }
  Segment out{Instance(head.instance.metric(), head.instance.start(),
                       std::move(flat)),
              {}};
  for (auto& s : states) out.paths.emplace_back(std::move(s), bounded);
  return out;
}

}  // namespace mtsc
