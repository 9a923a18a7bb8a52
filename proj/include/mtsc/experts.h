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

#ifndef MTSC_EXPERTS_H_
#define MTSC_EXPERTS_H_

#include <span>
#include <string>
#include <vector>

#include "mtsc/transport.h"

namespace mtsc {

enum class ExpertKind { kHedge, kShare };

ExpertKind ParseExpertKind(const std::string& name);
std::string ToString(ExpertKind kind);

// Full-information expert algorithm state. Updates return new values.
class ExpertState {
 public:
  // Uniform weights. Requires ell >= 1, eta > 0 and alpha in [0, 1/2].
  static ExpertState Init(int ell, double eta, double alpha, ExpertKind kind);

  int size() const { return static_cast<int>(weights_.size()); }
  double eta() const { return eta_; }
  double alpha() const { return alpha_; }
  ExpertKind kind() const { return kind_; }
  const std::vector<double>& weights() const { return weights_; }
  long updates() const { return updates_; }

  Distribution distribution() const;

  friend bool operator==(const ExpertState&, const ExpertState&) = default;

 private:
  friend ExpertState HedgeUpdate(const ExpertState&, std::span<const double>);
  friend ExpertState ShareUpdate(const ExpertState&, std::span<const double>);
  ExpertState() = default;
  void CountUpdate();

  std::vector<double> weights_;
  double eta_ = 0.0;
  double alpha_ = 0.0;
  ExpertKind kind_ = ExpertKind::kHedge;
  long updates_ = 0;
};

// w(i) <- w(i) * exp(-eta * g(i)). Loss entries must lie in [0, 1].
ExpertState HedgeUpdate(const ExpertState& state, std::span<const double> g);

// Hedge step, then every weight gains alpha * Delta / ell where Delta is the
// total weight lost by the hedge step.
ExpertState ShareUpdate(const ExpertState& state, std::span<const double> g);

// Dispatches on state.kind().
ExpertState Update(const ExpertState& state, std::span<const double> g);

// eta = -ln(1 - gamma) for gamma in (0, 1).
double RateFromGamma(double gamma);

// ||x_prev - x_next||_1 <= eta * g^T x_prev (1e-9 slack).
bool CheckStability(std::span<const double> x_prev,
                    std::span<const double> x_next, std::span<const double> g,
                    double eta);

// Probability mass that leaves decreasing coordinates,
// sum_{i: x_next(i) < x_prev(i)} (x_prev(i) - x_next(i)) = ||x_prev - x_next||_1 / 2.
double MassMoved(std::span<const double> x_prev, std::span<const double> x_next);

}  // namespace mtsc

#endif  // MTSC_EXPERTS_H_
