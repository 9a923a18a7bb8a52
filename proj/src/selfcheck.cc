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

#include "mtsc/selfcheck.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mtsc/access.h"
#include "mtsc/errors.h"
#include "mtsc/oracles.h"

namespace mtsc {
namespace {

int UniformInt(Rng& rng, int lo, int hi) {
  return lo + UniformIndex(rng, hi - lo + 1);
}

// Advances `digits` as a base-`radix` odometer; false once it wraps.
bool NextTuple(std::vector<int>& digits, int radix) {
  for (int& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

}  // namespace

SmallCase RandomSmallCase(Rng& rng, int max_n, int max_t, int max_ell,
                          int max_k) {
  const int n = UniformInt(rng, 1, max_n);
  const int horizon = UniformInt(rng, 1, max_t);
  const int ell = UniformInt(rng, 1, max_ell);
  const int k = UniformInt(rng, 0, max_k);

  std::vector<std::vector<double>> edges(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges[i][j] = edges[j][i] = UniformInt(rng, 1, 4);
    }
  }
  MetricSpace metric = MetricClosure(edges);

  std::vector<double> flat(static_cast<size_t>(horizon) * n);
  for (int t = 0; t < horizon; ++t) {
    double* c = &flat[static_cast<size_t>(t) * n];
    for (int s = 0; s < n; ++s) {
      c[s] = Bernoulli(rng, 0.15) ? kInf : UniformInt(rng, 0, 3);
    }
    c[UniformIndex(rng, n)] = UniformInt(rng, 0, 3);
  }
  const int start = UniformIndex(rng, n);
  Instance instance(std::move(metric), start, std::move(flat));

  const bool wrap = Bernoulli(rng, 0.5);
  Instance normalized = instance.Normalized();
  SmallCase out{wrap ? normalized : instance, {}, k};
  for (int i = 0; i < ell; ++i) {
    std::vector<int> states{start};
    for (int t = 1; t <= horizon; ++t) states.push_back(UniformIndex(rng, n));
    HeuristicPath p(std::move(states));
    out.paths.push_back(wrap ? WrapBounded(p, out.instance) : p);
  }
  return out;
}

double BruteForceOffline(const Instance& instance) {
  std::vector<int> seq(instance.horizon(), 0);
  double best = kInf;
  do {
    best = std::min(best, SolutionCost(instance, seq));
  } while (NextTuple(seq, instance.size()));
  return best;
}

double BruteForceOptK(const Instance& instance,
                      std::span<const HeuristicPath> paths, int k) {
  const int ell = static_cast<int>(paths.size());
  const int horizon = instance.horizon();
  std::vector<int> seq(horizon, 0);
  double best = kInf;
  do {
    int switches = 0;
    for (int t = 1; t < horizon; ++t) switches += seq[t] != seq[t - 1];
    if (switches > k) continue;
    double total = 0.0;
    for (int t = 1; t <= horizon; ++t) {
      const int cur = seq[t - 1];
      const int prev = t == 1 ? cur : seq[t - 2];
      total += prev == cur
                   ? HeuristicStepCost(instance, paths[cur], t)
                   : TransitionCost(instance, t, paths[prev].state(t - 1),
                                    paths[cur].state(t), paths[cur].bounded());
    }
    best = std::min(best, total);
  } while (NextTuple(seq, ell));
  return best;
}

SelfCheckReport RunOracleSelfCheck(int cases, std::uint64_t seed,
                                   double tolerance) {
  SelfCheckReport report;
  Rng rng(seed);
  auto record = [&](double got, double want, const std::string& what) {
    const bool both_inf = std::isinf(got) && std::isinf(want);
    const double err = both_inf ? 0.0 : std::abs(got - want);
    report.max_error = std::max(report.max_error, std::isnan(err) ? kInf : err);
    if (!(err <= tolerance)) {
      ++report.failures;
      if (report.first_failure.empty()) {
        std::ostringstream msg;
        msg << what << " in case " << report.cases << ": got " << got
            << ", brute force " << want;
        report.first_failure = msg.str();
      }
    }
  };
  for (int c = 0; c < cases; ++c) {
    SmallCase sc = RandomSmallCase(rng);
    record(OfflineOpt(sc.instance).cost, BruteForceOffline(sc.instance),
           "offline_opt");
    double optk = kInf;
    try {
      optk = OptK(sc.instance, sc.paths, sc.k).cost;
    } catch (const InfeasibleError&) {
    }
    record(optk, BruteForceOptK(sc.instance, sc.paths, sc.k), "opt_k");
    ++report.cases;
  }
  return report;
}

}  // namespace mtsc
