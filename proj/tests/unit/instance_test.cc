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

#include <sstream>
#include <vector>

#include "doctest.h"
#include "mtsc/access.h"
#include "mtsc/errors.h"
#include "mtsc/instance.h"
#include "mtsc/instance_io.h"
#include "mtsc/metric.h"
#include "mtsc/oracles.h"

namespace mtsc {
namespace {

Instance TwoState(std::vector<CostVector> costs, int start = 0) {
  return Instance(UniformMetric(2), start, std::move(costs));
}

TEST_CASE("ValidateMetric accepts the two-point metric") {
  MetricSpace m = ValidateMetric({{0, 1}, {1, 0}});
  CHECK(m.size() == 2);
  CHECK(m.diameter() == 1.0);
}

TEST_CASE("ValidateMetric rejects asymmetry and triangle violations") {
  CHECK_THROWS_AS(ValidateMetric({{0, 1}, {2, 0}}), ValidationError);
  CHECK_THROWS_AS(ValidateMetric({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(ValidateMetric({{1, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(ValidateMetric({{0, -1}, {-1, 0}}), ValidationError);
  CHECK_THROWS_AS(ValidateMetric({{0, 1}}), ValidationError);
  CHECK_THROWS_AS(ValidateMetric({}), ValidationError);
}

TEST_CASE("MetricClosure takes shortest paths") {
  MetricSpace m = MetricClosure({{0, 1, kInf}, {1, 0, 1}, {kInf, 1, 0}});
  CHECK(m(0, 2) == 2.0);
  CHECK(m.diameter() == 2.0);
  CHECK_THROWS_AS(MetricClosure({{0, kInf}, {kInf, 0}}), ValidationError);
}

TEST_CASE("NormalizeCosts subtracts the finite minimum") {
  CHECK(NormalizeCosts(std::vector<double>{3, 5, 4}) ==
        CostVector{0, 2, 1});
  CHECK(NormalizeCosts(std::vector<double>{0, kInf}) == CostVector{0, kInf});
  CHECK(NormalizeCosts(std::vector<double>{7, 7}) == CostVector{0, 0});
  CHECK_THROWS_AS(NormalizeCosts(std::vector<double>{kInf, kInf}),
                  InfeasibleError);
}

TEST_CASE("SolutionCost hand evaluations") {
  Instance one = TwoState({{0, 3}});
  CHECK(SolutionCost(one, std::vector<int>{0}) == 0.0);
  CHECK(SolutionCost(one, std::vector<int>{1}) == 4.0);
  Instance two = TwoState({{0, 3}, {3, 0}});
  CHECK(SolutionCost(two, std::vector<int>{0, 1}) == 1.0);
  Instance forbidden = TwoState({{0, kInf}});
  CHECK(SolutionCost(forbidden, std::vector<int>{1}) == kInf);
}

TEST_CASE("HeuristicStepCost examples") {
  Instance inst = TwoState({{0, 2}, {2, 0}, {2, 0}, {0, 2}});
  HeuristicPath stay({0, 0, 1, 1, 1});
  CHECK(HeuristicStepCost(inst, stay, 1) == 0.0);  // free state
  CHECK(HeuristicStepCost(inst, stay, 2) == 1.0);  // move into free state
  CHECK(HeuristicStepCost(inst, stay, 4) == 2.0);  // stay at cost 2
  CHECK(PathCosts(inst, stay) == std::vector<double>{0, 1, 0, 2});
}

TEST_CASE("Instance construction checks") {
  CHECK_THROWS_AS(Instance(UniformMetric(2), 2, std::vector<CostVector>{{0, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(Instance(UniformMetric(2), 0, std::vector<CostVector>{{0}}),
                  ValidationError);
  // An all-forbidden step is representable but infeasible to solve.
  Instance dead = TwoState({{kInf, kInf}});
  CHECK_THROWS_AS(dead.Normalized(), InfeasibleError);
  CHECK_THROWS_AS(OfflineOpt(dead), InfeasibleError);
  Instance inst = TwoState({{3, 5}});
  CHECK_FALSE(inst.IsNormalized());
  CHECK(inst.Normalized().IsNormalized());
  CHECK(inst.Normalized().cost(1, 1) == 2.0);
}

TEST_CASE("CheckPath rejects mismatched paths") {
  Instance inst = TwoState({{0, 0}, {0, 0}});
  CHECK_NOTHROW(CheckPath(inst, HeuristicPath({0, 1, 0})));
  CHECK_THROWS_AS(CheckPath(inst, HeuristicPath({1, 1, 0})), ValidationError);
  CHECK_THROWS_AS(CheckPath(inst, HeuristicPath({0, 1})), ValidationError);
  CHECK_THROWS_AS(CheckPath(inst, HeuristicPath({0, 2, 0})), ValidationError);
}

TEST_CASE("WrapBounded caps charged costs at 2D") {
  // Line 0 - 1 - 2 with D = 2, so 2D = 4.
  MetricSpace line = ValidateMetric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  Instance inst(line, 0,
                std::vector<CostVector>{{0, 2, 0}, {kInf, 0, 0}, {0, 1, 0}});
  HeuristicPath raw({0, 0, 0, 0});
  HeuristicPath wrapped = WrapBounded(raw, inst);
  CHECK(wrapped.bounded());
  CHECK(wrapped.states() == raw.states());
  // Step 1 is already bounded. Step 2 predicts a forbidden state: detour via
  // the nearest zero-cost state 1 is d(0,1) + d(1,0) = 2.
  CHECK(HeuristicStepCost(inst, raw, 2) == kInf);
  CHECK(HeuristicStepCost(inst, wrapped, 1) == 0.0);
  CHECK(HeuristicStepCost(inst, wrapped, 2) == 2.0);
  CHECK(HeuristicStepCost(inst, wrapped, 3) == 0.0);

  // Forbidden state with its nearest free state at distance D: charged 2D.
  Instance far(line, 2, std::vector<CostVector>{{0, kInf, kInf}});
  HeuristicPath to_two = WrapBounded(HeuristicPath({2, 2}), far);
  CHECK(HeuristicStepCost(far, to_two, 1) == 4.0);

  // All steps cheap: identical cost profile.
  Instance cheap(line, 0, std::vector<CostVector>{{0, 1, 0}, {1, 0, 1}});
  HeuristicPath p({0, 1, 2});
  CHECK(PathCosts(cheap, p) == PathCosts(cheap, WrapBounded(p, cheap)));

  Instance none(line, 0, std::vector<CostVector>{{1, 2, 3}});
  CHECK_THROWS_AS(WrapBounded(HeuristicPath({0, 0}), none), ValidationError);
}

TEST_CASE("Every wrapped step lies in [0, 2D]") {
  MetricSpace line = ValidateMetric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  Instance inst(line, 0,
                std::vector<CostVector>{
                    {0, kInf, 50}, {9, 0, kInf}, {kInf, kInf, 0}, {0, 7, 8}});
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      HeuristicPath p = WrapBounded(HeuristicPath({0, a, b, a, b}), inst);
      for (double c : PathCosts(inst, p)) {
        CHECK(c >= 0.0);
        CHECK(c <= 4.0);
      }
    }
  }
}

TEST_CASE("NearestZeroCostState breaks ties by index") {
  MetricSpace line = ValidateMetric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  Instance inst(line, 0, std::vector<CostVector>{{0, 1, 0}, {1, 1, 0}});
  CHECK(NearestZeroCostState(inst, 1, 1) == 0);
  CHECK(NearestZeroCostState(inst, 2, 0) == 2);
}

TEST_CASE("Instance text format round-trips exactly") {
  MetricSpace m = ValidateMetric({{0, 0.1, 0.3}, {0.1, 0, 0.2}, {0.3, 0.2, 0}});
  Instance inst(m, 1,
                std::vector<CostVector>{{0, kInf, 1.0 / 3.0}, {2.5, 0, 0}});
  std::stringstream ss;
  WriteInstance(ss, inst);
  Instance back = ReadInstance(ss);
  CHECK(back.metric() == inst.metric());
  CHECK(back.start() == inst.start());
  CHECK(back.flat_costs() == inst.flat_costs());

  std::vector<HeuristicPath> paths{HeuristicPath({1, 0, 2}, true),
                                   HeuristicPath({1, 1, 1}, true)};
  std::stringstream ps;
  WritePaths(ps, paths);
  CHECK(ReadPaths(ps) == paths);
}

TEST_CASE("Instance reader reports malformed input") {
  std::istringstream bad("n 2\nstart 0\ndist\n0 1\n1 0\nT 1\ncosts\n0 x\n");
  CHECK_THROWS_AS(ReadInstance(bad), ValidationError);
  std::istringstream comment(
      "# two states\nn 2\nstart 0\ndist\n0 1\n1 0\nT 1\ncosts\n0 +inf\n");
  Instance inst = ReadInstance(comment);
  CHECK(inst.cost(1, 1) == kInf);
  CHECK(FormatDouble(0.1) == "0.10000000000000001");
  CHECK(FormatDouble(kInf) == "+inf");
}

}  // namespace
}  // namespace mtsc
