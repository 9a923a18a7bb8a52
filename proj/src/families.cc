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

#include "mtsc/families.h"

#include <algorithm>
#include <numeric>

#include "mtsc/access.h"
#include "mtsc/errors.h"

namespace mtsc {
namespace {

bool InUnit(double v) { return v >= 0.0 && v <= 1.0; }

// Uniform state of {0..n-1} other than `avoid`.
int OtherState(Rng& rng, int n, int avoid) {
  int s = UniformIndex(rng, n - 1);
  return s >= avoid ? s + 1 : s;
}

int SampleWeighted(Rng& rng, const std::vector<double>& cumulative) {
  const double u = Uniform01(rng) * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min(static_cast<int>(it - cumulative.begin()),
                  static_cast<int>(cumulative.size()) - 1);
}

std::vector<int> LazyWalk(Rng& rng, int n, int start, int horizon,
                          double rate) {
  std::vector<int> states{start};
  for (int t = 1; t <= horizon; ++t) {
    int s = states.back();
    if (Bernoulli(rng, rate)) s = OtherState(rng, n, s);
    states.push_back(s);
  }
  return states;
}

Segment Wrap(Instance instance, std::vector<std::vector<int>> states) {
  Segment seg{std::move(instance), {}};
  for (auto& s : states) {
    seg.paths.push_back(WrapBounded(HeuristicPath(std::move(s)), seg.instance));
  }
  return seg;
}

}  // namespace

void PlantedParams::Validate() const {
  if (n < 2) throw ValidationError("planted: need n >= 2");
  if (ell < 1) throw ValidationError("planted: need ell >= 1");
  if (horizon < 1) throw ValidationError("planted: need horizon >= 1");
  if (!(scale > 0.0)) throw ValidationError("planted: scale must be positive");
  if (!InUnit(target_switch) || !InUnit(free_fraction) || !InUnit(noise) ||
      !InUnit(walk_rate)) {
    throw ValidationError("planted: rates must lie in [0, 1]");
  }
  if (!(miss_cost >= 0.0)) throw ValidationError("planted: negative miss cost");
  if (planted < 0 || planted >= ell) {
    throw ValidationError("planted: planted index out of range");
  }
}

Segment PlantedExpert(const PlantedParams& params, Rng& rng) {
  params.Validate();
  const int n = params.n;
  const int start = 0;
  std::vector<double> flat(static_cast<size_t>(params.horizon) * n);
  std::vector<int> target(params.horizon + 1, start);
  for (int t = 1; t <= params.horizon; ++t) {
    int z = target[t - 1];
    if (Bernoulli(rng, params.target_switch)) z = OtherState(rng, n, z);
    target[t] = z;
    double* c = &flat[static_cast<size_t>(t - 1) * n];
    for (int s = 0; s < n; ++s) {
      const bool free = s == z || Bernoulli(rng, params.free_fraction);
      c[s] = free ? 0.0 : params.miss_cost;
    }
  }
  std::vector<std::vector<int>> states(params.ell);
  for (int i = 0; i < params.ell; ++i) {
    if (i == params.planted) {
      states[i].push_back(start);
      for (int t = 1; t <= params.horizon; ++t) {
        states[i].push_back(Bernoulli(rng, params.noise)
                                ? OtherState(rng, n, target[t])
                                : target[t]);
      }
    } else {
      states[i] = LazyWalk(rng, n, start, params.horizon, params.walk_rate);
    }
  }
  return Wrap(Instance(UniformMetric(n, params.scale), start, std::move(flat)),
              std::move(states));
}

void StarParams::Validate() const {
  if (weights.size() < 2) throw ValidationError("star: need >= 2 leaves");
  if (popularity.size() != weights.size()) {
    throw ValidationError("star: popularity and weights differ in length");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw ValidationError("star: weights must be positive");
  }
  for (double p : popularity) {
    if (!(p >= 0.0)) throw ValidationError("star: negative popularity");
  }
  if (!(std::accumulate(popularity.begin(), popularity.end(), 0.0) > 0.0)) {
    throw ValidationError("star: popularity sums to zero");
  }
  if (ell < 1) throw ValidationError("star: need ell >= 1");
  if (horizon < 1) throw ValidationError("star: need horizon >= 1");
  if (!(miss_cost >= 0.0)) throw ValidationError("star: negative miss cost");
  if (!InUnit(walk_rate)) throw ValidationError("star: walk rate outside [0, 1]");
}

Segment WeightedStar(const StarParams& params, Rng& rng) {
  params.Validate();
  const int n = static_cast<int>(params.weights.size());
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) dist[i][j] = params.weights[i] + params.weights[j];
    }
  }
  std::vector<double> cumulative(n);
  std::partial_sum(params.popularity.begin(), params.popularity.end(),
                   cumulative.begin());
  const int popular = static_cast<int>(
      std::max_element(params.popularity.begin(), params.popularity.end()) -
      params.popularity.begin());
  const int start = popular;

  std::vector<int> requests(params.horizon + 1, start);
  std::vector<double> flat(static_cast<size_t>(params.horizon) * n,
                           params.miss_cost);
  for (int t = 1; t <= params.horizon; ++t) {
    requests[t] = SampleWeighted(rng, cumulative);
    flat[static_cast<size_t>(t - 1) * n + requests[t]] = 0.0;
  }

  std::vector<std::vector<int>> states(params.ell);
  for (int i = 0; i < params.ell; ++i) {
    std::vector<int>& s = states[i];
    switch (i) {
      case 0:
        s = requests;
        break;
      case 1:
        s.assign(params.horizon + 1, popular);
        break;
      case 2:
        s.push_back(start);
        for (int t = 1; t <= params.horizon; ++t) {
          const bool repeat = t >= 2 && requests[t] == requests[t - 1];
          s.push_back(repeat ? requests[t] : s.back());
        }
        break;
      default:
        s = LazyWalk(rng, n, start, params.horizon, params.walk_rate);
    }
  }
  return Wrap(Instance(ValidateMetric(dist), start, std::move(flat)),
              std::move(states));
}

Segment TrackingSegments(const PlantedParams& base, int k, int segment_length,
                         Rng& rng) {
  if (k < 0) throw ValidationError("segments: need k >= 0");
  if (segment_length < 1) throw ValidationError("segments: need length >= 1");
  std::vector<Segment> parts;
  for (int j = 0; j <= k; ++j) {
    PlantedParams p = base;
    p.horizon = segment_length;
    p.planted = j % base.ell;
    parts.push_back(PlantedExpert(p, rng));
  }
  return ConcatSegments(parts);
}

}  // namespace mtsc
