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

#include "mtsc/transport.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mtsc/errors.h"

namespace mtsc {
namespace {

constexpr double kClampTolerance = 1e-12;
constexpr double kSumTolerance = 1e-9;

void CheckSameSize(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size() || p.empty()) {
    throw ValidationError("transport: dimension mismatch (" +
                          std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()) + ")");
  }
}

}  // namespace

Distribution ToSimplex(std::span<const double> p) {
  Distribution out(p.begin(), p.end());
  double sum = 0.0;
  for (double& v : out) {
    if (std::isnan(v) || v < -kClampTolerance) {
      throw ValidationError("distribution: entry outside the simplex");
    }
    v = std::max(v, 0.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("distribution: entries sum to " +
                          std::to_string(sum));
  }
  for (double& v : out) v /= sum;
  return out;
}

double TvEmd(std::span<const double> p, std::span<const double> q) {
  CheckSameSize(p, q);
  Distribution a = ToSimplex(p), b = ToSimplex(q);
  double moved = 0.0;
  for (size_t i = 0; i < a.size(); ++i) moved += std::max(0.0, a[i] - b[i]);
  return moved;
}

double TransportPlan::RowSum(int i) const {
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

double TransportPlan::ColSum(int j) const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += (*this)(i, j);
  return s;
}

double TransportPlan::OffDiagonalMass() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j) s += (*this)(i, j);
    }
  }
  return s;
}

int TransportPlan::SampleRow(int from, double u) const {
  const double total = RowSum(from);
  const double target = u * total;
  double acc = 0.0;
  int last = from;
  for (int j = 0; j < n_; ++j) {
    double mass = (*this)(from, j);
    if (mass <= 0.0) continue;
    acc += mass;
    last = j;
    if (target < acc) return j;
  }
  return last;
}

TransportPlan GreedyTransportPlan(std::span<const double> p,
                                  std::span<const double> q) {
  CheckSameSize(p, q);
  Distribution a = ToSimplex(p), b = ToSimplex(q);
  const int n = static_cast<int>(a.size());
  TransportPlan plan(n);
  std::vector<double> surplus(n), deficit(n);
  for (int i = 0; i < n; ++i) {
    double keep = std::min(a[i], b[i]);
    plan.at(i, i) = keep;
    surplus[i] = a[i] - keep;
    deficit[i] = b[i] - keep;
  }
  int i = 0, j = 0;
  while (true) {
    while (i < n && surplus[i] <= 0.0) ++i;
    while (j < n && deficit[j] <= 0.0) ++j;
    if (i == n || j == n) break;
    double moved = std::min(surplus[i], deficit[j]);
    plan.at(i, j) += moved;
    surplus[i] -= moved;
    deficit[j] -= moved;
    // Exactly one side is exhausted; force it to zero so rounding cannot
    // leave a sliver that stalls the sweep.
    if (surplus[i] <= deficit[j]) {
      surplus[i] = 0.0;
    } else {
      deficit[j] = 0.0;
    }
  }
  return plan;
}

int RoundStep(int i_prev, std::span<const double> p, std::span<const double> q,
              Rng& rng) {
  if (i_prev < 0 || i_prev >= static_cast<int>(p.size())) {
    throw ValidationError("round: previous index out of range");
  }
  if (!(p[i_prev] > 0.0)) {
    throw InvariantError("round: previous index has zero probability");
  }
  return GreedyTransportPlan(p, q).SampleRow(i_prev, Uniform01(rng));
}

}  // namespace mtsc
