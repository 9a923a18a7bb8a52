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

// Scalar-generic dynamic programs behind the benchmark oracles. The library
// instantiates them with double; tests also run them over exact rationals.
// A forbidden (infinite) value is an empty optional, so the scalar type needs
// no infinity.

#ifndef MTSC_DETAIL_DP_H_
#define MTSC_DETAIL_DP_H_

#include <optional>
#include <vector>

namespace mtsc::detail {

template <class S>
struct DpResult {
  std::optional<S> cost;  // empty if infeasible
  std::vector<int> path;  // 1..T choices; empty if infeasible
  int switches = 0;
};

template <class S>
bool Improves(const std::optional<S>& candidate, const std::optional<S>& best) {
  return candidate && (!best || *candidate < *best);
}

template <class S>
std::optional<S> Add(const std::optional<S>& a, const std::optional<S>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// min over s_1..s_T of sum_t cost(t, s_t) + dist(s_{t-1}, s_t).
// Ties go to the lowest predecessor / final state index.
template <class S, class Dist, class Cost>
DpResult<S> OfflineOptDp(int n, int horizon, int start, Dist dist, Cost cost) {
  std::vector<std::optional<S>> value(n), next(n);
  value[start] = S(0);
  std::vector<int> parent(static_cast<size_t>(horizon) * n, -1);
  for (int t = 1; t <= horizon; ++t) {
    for (int s = 0; s < n; ++s) {
      std::optional<S> best;
      int arg = -1;
      std::optional<S> c = cost(t, s);
      if (c) {
        for (int p = 0; p < n; ++p) {
          if (!value[p]) continue;
          std::optional<S> v = *value[p] + dist(p, s);
          if (Improves(v, best)) {
            best = v;
            arg = p;
          }
        }
      }
      next[s] = Add(best, c);
      parent[static_cast<size_t>(t - 1) * n + s] = next[s] ? arg : -1;
    }
    value.swap(next);
  }
  DpResult<S> out;
  int arg = -1;
  for (int s = 0; s < n; ++s) {
    if (Improves(value[s], out.cost)) {
      out.cost = value[s];
      arg = s;
    }
  }
  if (!out.cost) return out;
  out.path.assign(horizon, 0);
  for (int t = horizon; t >= 1; --t) {
    out.path[t - 1] = arg;
    arg = parent[static_cast<size_t>(t - 1) * n + arg];
  }
  return out;
}

// min over index sequences i_1..i_T with at most `budget` switches of
// sum_t step(t, i_t) when i_t == i_{t-1} (or t == 1) and cross(t, i_{t-1},
// i_t) otherwise. Staying is preferred on ties, then lower indices.
template <class S, class Step, class Cross>
DpResult<S> SwitchBudgetDp(int ell, int horizon, int budget, Step step,
                           Cross cross) {
  const int layers = budget + 1;
  auto idx = [&](int i, int j) { return i * layers + j; };
  std::vector<std::optional<S>> value(ell * layers), next(ell * layers);
  // parent heuristic at t-1 for cell (t, i, j); -1 for t == 1.
  std::vector<int> parent(static_cast<size_t>(horizon) * ell * layers, -1);
  for (int i = 0; i < ell; ++i) value[idx(i, 0)] = step(1, i);
  for (int t = 2; t <= horizon; ++t) {
    const size_t base = static_cast<size_t>(t - 1) * ell * layers;
    for (int i = 0; i < ell; ++i) {
      std::optional<S> stay_cost = step(t, i);
      for (int j = 0; j < layers; ++j) {
        std::optional<S> best = Add(value[idx(i, j)], stay_cost);
        int arg = best ? i : -1;
        if (j > 0) {
          for (int p = 0; p < ell; ++p) {
            if (p == i || !value[idx(p, j - 1)]) continue;
            std::optional<S> v = Add(value[idx(p, j - 1)], cross(t, p, i));
            if (Improves(v, best)) {
              best = v;
              arg = p;
            }
          }
        }
        next[idx(i, j)] = best;
        parent[base + idx(i, j)] = arg;
      }
    }
    value.swap(next);
  }
  DpResult<S> out;
  int arg_i = -1, arg_j = -1;
  for (int i = 0; i < ell; ++i) {
    for (int j = 0; j < layers; ++j) {
      if (Improves(value[idx(i, j)], out.cost)) {
        out.cost = value[idx(i, j)];
        arg_i = i;
        arg_j = j;
      }
    }
  }
  if (!out.cost) return out;
  out.path.assign(horizon, 0);
  out.switches = arg_j;
  for (int t = horizon; t >= 1; --t) {
    out.path[t - 1] = arg_i;
    if (t == 1) break;
    int p = parent[static_cast<size_t>(t - 1) * ell * layers + idx(arg_i, arg_j)];
    if (p != arg_i) --arg_j;
    arg_i = p;
  }
  return out;
}

}  // namespace mtsc::detail

#endif  // MTSC_DETAIL_DP_H_
