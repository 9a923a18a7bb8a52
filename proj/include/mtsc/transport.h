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

#ifndef MTSC_TRANSPORT_H_
#define MTSC_TRANSPORT_H_

#include <span>
#include <vector>

#include "mtsc/rng.h"

namespace mtsc {

using Distribution = std::vector<double>;

// Clamps entries in [-1e-12, 0) to zero and renormalizes. Throws
// ValidationError for larger negative entries or a sum off by more than 1e-9.
Distribution ToSimplex(std::span<const double> p);

// Earth mover distance on the simplex: sum_i max(0, p(i) - q(i)), which is
// half the L1 distance.
double TvEmd(std::span<const double> p, std::span<const double> q);

// Mass moved from p(i) to q(j). Row sums are p, column sums are q, and the
// off-diagonal mass equals TvEmd(p, q).
class TransportPlan {
 public:
  explicit TransportPlan(int n) : n_(n), tau_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  double operator()(int i, int j) const { return tau_[i * n_ + j]; }
  double& at(int i, int j) { return tau_[i * n_ + j]; }

  double RowSum(int i) const;
  double ColSum(int j) const;
  double OffDiagonalMass() const;

  // Index j drawn with probability tau(from, j) / sum_j tau(from, j), using
  // the uniform draw u in [0, 1).
  int SampleRow(int from, double u) const;

 private:
  int n_;
  std::vector<double> tau_;
};

// Keeps min(p(i), q(i)) in place, then matches surpluses to deficits in
// ascending index order (northwest corner on the residuals).
TransportPlan GreedyTransportPlan(std::span<const double> p,
                                  std::span<const double> q);

// One step of the Round coupling: from i_prev (drawn from p), moves to j with
// probability tau(i_prev, j) / p(i_prev). Throws InvariantError if
// p(i_prev) == 0.
int RoundStep(int i_prev, std::span<const double> p, std::span<const double> q,
              Rng& rng);

}  // namespace mtsc

#endif  // MTSC_TRANSPORT_H_
