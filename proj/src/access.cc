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

#include "mtsc/access.h"

#include <algorithm>
#include <string>

#include "mtsc/errors.h"

namespace mtsc {

QueryGateway::QueryGateway(const Instance& instance,
                           std::span<const HeuristicPath> paths, int m)
    : instance_(&instance),
      paths_(paths),
      m_(m),
      queried_at_(instance.horizon() + 1, -1) {
  if (m < 2) throw ValidationError("gateway: delay m must be >= 2");
  if (paths.empty()) throw ValidationError("gateway: no heuristics");
  for (const HeuristicPath& p : paths) CheckPath(instance, p);
}

void QueryGateway::CheckIndex(int i, int t) const {
  if (i < 0 || i >= num_heuristics()) {
    throw ValidationError("gateway: heuristic index " + std::to_string(i) +
                          " out of range");
  }
  if (t < 1 || t > horizon()) {
    throw ValidationError("gateway: time " + std::to_string(t) +
                          " outside 1.." + std::to_string(horizon()));
  }
}

bool QueryGateway::WindowQueried(int i, int from, int to) const {
  for (int s = std::max(1, from); s <= to; ++s) {
    if (queried_at_[s] != i) return false;
  }
  return true;
}

std::optional<int> QueryGateway::Query(int i, int t) {
  CheckIndex(i, t);
  if (queried_at_[t] != -1) {
    throw BudgetError("gateway: second query at step " + std::to_string(t));
  }
  if (t < last_t_) {
    throw BudgetError("gateway: query at step " + std::to_string(t) +
                      " after step " + std::to_string(last_t_));
  }
  queried_at_[t] = i;
  last_t_ = t;
  const bool revealed = WindowQueried(i, t - m_ + 2, t);
  log_.push_back({t, i, revealed});
  if (!revealed) return std::nullopt;
  return paths_[i].state(t);
}

std::optional<double> QueryGateway::ObservedCost(int i, int t) const {
  CheckIndex(i, t);
  if (!WindowQueried(i, t - m_ + 1, t)) return std::nullopt;
  return HeuristicStepCost(*instance_, paths_[i], t);
}

QueryAudit QueryGateway::Audit() const {
  QueryAudit audit;
  audit.steps = horizon();
  audit.queries = static_cast<int>(log_.size());
  std::vector<int> per_step(horizon() + 1, 0);
  for (const QueryRecord& r : log_) {
    ++per_step[r.t];
    if (r.revealed) ++audit.revealed;
  }
  audit.one_per_step = std::all_of(per_step.begin() + 1, per_step.end(),
                                   [](int c) { return c == 1; });
  return audit;
}

void QueryGateway::WriteAuditCsv(std::ostream& out) const {
  out << "t,heuristic,revealed\n";
  for (const QueryRecord& r : log_) {
    out << r.t << ',' << r.heuristic + 1 << ','
        << (r.revealed ? "true" : "false") << '\n';
  }
}

HeuristicPath WrapBounded(const HeuristicPath& path,
                          const Instance& instance) {
  CheckPath(instance, path);
  for (int t = 1; t <= instance.horizon(); ++t) {
    if (NearestZeroCostState(instance, t, path.state(t)) < 0) {
      throw ValidationError("wrap_bounded: no zero-cost state at step " +
                            std::to_string(t));
    }
  }
  return HeuristicPath(path.states(), /*bounded=*/true);
}

}  // namespace mtsc
