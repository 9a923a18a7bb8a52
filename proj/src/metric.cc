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

#include "mtsc/metric.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mtsc/errors.h"

namespace mtsc {

std::vector<std::vector<double>> MetricSpace::Matrix() const {
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  }
  return m;
}

MetricSpace ValidateMetric(const std::vector<std::vector<double>>& dist,
                           double tolerance) {
  const int n = static_cast<int>(dist.size());
  if (n == 0) throw ValidationError("metric: empty distance matrix");
  std::vector<double> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[i].size()) != n) {
      throw ValidationError("metric: row " + std::to_string(i) + " has " +
                            std::to_string(dist[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      double v = dist[i][j];
      if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream msg;
        msg << "metric: entry (" << i << "," << j << ") = " << v
            << " is not a finite non-negative distance";
        throw ValidationError(msg.str());
      }
      flat[i * n + j] = v;
    }
  }
  double diameter = 0.0;
  for (int i = 0; i < n; ++i) {
    if (flat[i * n + i] != 0.0) {
      throw ValidationError("metric: nonzero diagonal at (" +
                            std::to_string(i) + "," + std::to_string(i) + ")");
    }
    for (int j = i + 1; j < n; ++j) {
      if (flat[i * n + j] != flat[j * n + i]) {
        throw ValidationError("metric: asymmetry at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
      }
      diameter = std::max(diameter, flat[i * n + j]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (flat[i * n + k] > flat[i * n + j] + flat[j * n + k] + tolerance) {
          std::ostringstream msg;
          msg << "metric: triangle inequality violated for (" << i << "," << j
              << "," << k << "): d(" << i << "," << k
              << ") = " << flat[i * n + k] << " > " << flat[i * n + j] << " + "
              << flat[j * n + k];
          throw ValidationError(msg.str());
        }
      }
    }
  }
  return MetricSpace(n, std::move(flat), diameter);
}

MetricSpace MetricClosure(std::vector<std::vector<double>> edges) {
  const int n = static_cast<int>(edges.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(edges[i].size()) != n) {
      throw ValidationError("metric closure: matrix is not square");
    }
    edges[i][i] = 0.0;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        edges[i][j] = std::min(edges[i][j], edges[i][k] + edges[k][j]);
      }
    }
  }
  return ValidateMetric(edges);
}

MetricSpace UniformMetric(int n, double scale) {
  if (n < 1 || !(scale > 0.0)) {
    throw ValidationError("uniform metric: need n >= 1 and scale > 0");
  }
  std::vector<std::vector<double>> d(n, std::vector<double>(n, scale));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  return ValidateMetric(d);
}

}  // namespace mtsc
