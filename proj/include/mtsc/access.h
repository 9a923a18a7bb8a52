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

#ifndef MTSC_ACCESS_H_
#define MTSC_ACCESS_H_

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "mtsc/instance.h"

namespace mtsc {

struct QueryRecord {
  int t;
  int heuristic;
  bool revealed;
};

struct QueryAudit {
  int steps = 0;     // horizon T
  int queries = 0;   // total queries issued
  int revealed = 0;  // queries that returned a state
  // True iff every step 1..T carries exactly one query.
  bool one_per_step = false;
};

// m-delayed bandit access to a set of heuristic paths. A query of heuristic
// i at step t reveals s_t^i only if i was also queried at every step of
// {t-m+2, ..., t}; steps t <= 0 count as queried. One query per step, in
// increasing time order.
//
// The gateway keeps references to `instance` and `paths`; both must outlive
// it.
class QueryGateway {
 public:
  QueryGateway(const Instance& instance, std::span<const HeuristicPath> paths,
               int m);

  int m() const { return m_; }
  int num_heuristics() const { return static_cast<int>(paths_.size()); }
  int horizon() const { return instance_->horizon(); }

  // Records the query and returns s_t^i if the window rule holds. Throws
  // BudgetError on a second query at t or a query earlier than the last one.
  std::optional<int> Query(int i, int t);

  // f_t(i) if both s_{t-1}^i and s_t^i are revealable from the log, i.e. i
  // was queried at every step of {t-m+1, ..., t}. Does not issue a query.
  std::optional<double> ObservedCost(int i, int t) const;

  // Heuristic queried at step t, or -1.
  int QueriedAt(int t) const { return queried_at_[t]; }
  int last_query_time() const { return last_t_; }
  const std::vector<QueryRecord>& log() const { return log_; }

  QueryAudit Audit() const;

  // Columns t,heuristic,revealed with a header row. Heuristics are 1-based
  // in the file.
  void WriteAuditCsv(std::ostream& out) const;

 private:
  bool WindowQueried(int i, int from, int to) const;
  void CheckIndex(int i, int t) const;

  const Instance* instance_;
  std::span<const HeuristicPath> paths_;
  int m_;
  int last_t_ = 0;
  std::vector<int> queried_at_;  // index 0..T
  std::vector<QueryRecord> log_;
};

// Marks the path as cost-bounded: charged step costs above 2D become the
// detour through the nearest zero-cost state, so every f_t lies in [0, 2D].
// The state sequence is unchanged. Throws ValidationError if some step has no
// zero-cost state.
HeuristicPath WrapBounded(const HeuristicPath& path, const Instance& instance);

}  // namespace mtsc

#endif  // MTSC_ACCESS_H_
