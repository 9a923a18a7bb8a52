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

#include "mtsc/experts.h"

#include <cmath>
#include <numeric>

#include "mtsc/errors.h"

namespace mtsc {
namespace {

constexpr double kLossTolerance = 1e-9;
constexpr long kRenormalizeEvery = 1024;

void CheckLoss(const ExpertState& state, std::span<const double> g) {
  if (static_cast<int>(g.size()) != state.size()) {
    throw ValidationError("experts: loss vector has wrong length");
  }
  for (double v : g) {
    if (std::isnan(v) || v < -kLossTolerance || v > 1.0 + kLossTolerance) {
      throw ValidationError("experts: loss entry outside [0, 1]");
    }
  }
}

double ClampLoss(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

ExpertKind ParseExpertKind(const std::string& name) {
  if (name == "hedge") return ExpertKind::kHedge;
  if (name == "share") return ExpertKind::kShare;
  throw ValidationError("unknown expert algorithm '" + name + "'");
}

std::string ToString(ExpertKind kind) {
  return kind == ExpertKind::kHedge ? "hedge" : "share";
}

ExpertState ExpertState::Init(int ell, double eta, double alpha,
                              ExpertKind kind) {
  if (ell < 1) throw ValidationError("experts: need ell >= 1");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ValidationError("experts: learning rate must be positive");
  }
  if (!(alpha >= 0.0 && alpha <= 0.5)) {
    throw ValidationError("experts: sharing parameter must lie in [0, 1/2]");
  }
  ExpertState s;
  s.weights_.assign(ell, 1.0);
  s.eta_ = eta;
  s.alpha_ = alpha;
  s.kind_ = kind;
  return s;
}

Distribution ExpertState::distribution() const {
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  Distribution x(weights_.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] = weights_[i] / total;
  return x;
}

void ExpertState::CountUpdate() {
  ++updates_;
  double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (updates_ % kRenormalizeEvery == 0 || total < 1e-200) {
    for (double& w : weights_) w /= total;
  }
}

ExpertState HedgeUpdate(const ExpertState& state, std::span<const double> g) {
  CheckLoss(state, g);
  ExpertState next = state;
  for (int i = 0; i < state.size(); ++i) {
    next.weights_[i] *= std::exp(-state.eta_ * ClampLoss(g[i]));
  }
  next.CountUpdate();
  return next;
}

ExpertState ShareUpdate(const ExpertState& state, std::span<const double> g) {
  CheckLoss(state, g);
  ExpertState next = state;
  double lost = 0.0;
  for (int i = 0; i < state.size(); ++i) {
    double kept = state.weights_[i] * std::exp(-state.eta_ * ClampLoss(g[i]));
    lost += state.weights_[i] - kept;
    next.weights_[i] = kept;
  }
  const double bonus = state.alpha_ * lost / state.size();
  for (double& w : next.weights_) w += bonus;
  next.CountUpdate();
  return next;
}

ExpertState Update(const ExpertState& state, std::span<const double> g) {
  return state.kind() == ExpertKind::kHedge ? HedgeUpdate(state, g)
                                            : ShareUpdate(state, g);
}

double RateFromGamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw ValidationError("gamma must lie in (0, 1)");
  }
  return -std::log1p(-gamma);
}

double MassMoved(std::span<const double> x_prev,
                 std::span<const double> x_next) {
  if (x_prev.size() != x_next.size()) {
    throw ValidationError("stability: dimension mismatch");
  }
  double moved = 0.0;
  for (size_t i = 0; i < x_prev.size(); ++i) {
    moved += std::max(0.0, x_prev[i] - x_next[i]);
  }
  return moved;
}

bool CheckStability(std::span<const double> x_prev,
                    std::span<const double> x_next, std::span<const double> g,
                    double eta) {
  if (x_prev.size() != x_next.size() || x_prev.size() != g.size()) {
    throw ValidationError("stability: dimension mismatch");
  }
  double l1 = 0.0, expected_loss = 0.0;
  for (size_t i = 0; i < x_prev.size(); ++i) {
    l1 += std::abs(x_prev[i] - x_next[i]);
    expected_loss += g[i] * x_prev[i];
  }
  return l1 <= eta * expected_loss + 1e-9;
}

}  // namespace mtsc
