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

#ifndef MTSC_ERRORS_H_
#define MTSC_ERRORS_H_

#include <stdexcept>

namespace mtsc {

// Malformed input: bad matrices, out-of-range parameters, bad configs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A step where every state has infinite cost.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// More than one heuristic queried in a single time step, or a query that
// goes back in time.
class BudgetError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant of the combiner broke.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mtsc

#endif  // MTSC_ERRORS_H_
