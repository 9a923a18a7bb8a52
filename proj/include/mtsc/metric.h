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

#ifndef MTSC_METRIC_H_
#define MTSC_METRIC_H_

#include <vector>

namespace mtsc {

// A finite metric space on points {0, ..., n-1}. Only constructible through
// ValidateMetric, so every instance satisfies symmetry, a zero diagonal and
// the triangle inequality.
class MetricSpace {
 public:
  int size() const { return n_; }
  double diameter() const { return diameter_; }
  double operator()(int i, int j) const { return dist_[i * n_ + j]; }
  // Row-major n*n distance matrix.
  const std::vector<double>& flat() const { return dist_; }
  std::vector<std::vector<double>> Matrix() const;

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.n_ == b.n_ && a.dist_ == b.dist_;
  }

 private:
  friend MetricSpace ValidateMetric(const std::vector<std::vector<double>>&,
                                    double);
  MetricSpace(int n, std::vector<double> dist, double diameter)
      : n_(n), dist_(std::move(dist)), diameter_(diameter) {}

  int n_ = 0;
  std::vector<double> dist_;
  double diameter_ = 0.0;
};

// Checks a square matrix of finite non-negative distances and builds the
// metric. Throws ValidationError naming the offending entry or triple.
// `tolerance` absorbs rounding in the triangle check only.
MetricSpace ValidateMetric(const std::vector<std::vector<double>>& dist,
                           double tolerance = 1e-9);

// Metric closure (all-pairs shortest paths) of an undirected weighted graph
// given as an n*n matrix where +inf marks a missing edge.
MetricSpace MetricClosure(std::vector<std::vector<double>> edges);

// Every pair of distinct points at distance `scale`.
MetricSpace UniformMetric(int n, double scale = 1.0);

}  // namespace mtsc

#endif  // MTSC_METRIC_H_
