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

#include "mtsc/combiner.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "mtsc/errors.h"
#include "mtsc/oracles.h"

namespace mtsc {
namespace {

constexpr double kChangeTolerance = 1e-12;
constexpr double kFeedbackTolerance = 1e-9;
constexpr double kRateCap = 0.49;

bool Changed(std::span<const double> a, std::span<const double> b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kChangeTolerance) return true;
  }
  return false;
}

double L1(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double ClampRate(double v, double cap) {
  if (!(v > 0.0) || std::isnan(v)) {
    throw ValidationError("hyperparameters: formula produced a non-positive rate");
  }
  return std::min(v, cap);
}

// V_t(s) = c_t(s) + min_{s'} (V_{t-1}(s') + d(s', s)), in place.
void RelaxOffline(const Instance& instance, int t, std::vector<double>& v) {
  const MetricSpace& d = instance.metric();
  const int n = instance.size();
  std::vector<double> next(n, kInf);
  for (int s = 0; s < n; ++s) {
    const double c = instance.cost(t, s);
    if (std::isinf(c)) continue;
    double best = kInf;
    for (int p = 0; p < n; ++p) best = std::min(best, v[p] + d(p, s));
    next[s] = best + c;
  }
  v.swap(next);
}

// One instantiation of the combiner, running from `first_step` to the end
// of the instance or until replaced.
class Session {
 public:
  Session(const Instance& instance, QueryGateway& gateway,
          const CombinerConfig& config, int first_step, ProducerState start,
          Rng& rng)
      : instance_(instance),
        gateway_(gateway),
        schedule_(SampleSchedule(instance.horizon() - first_step + 1,
                                 config.m, config.epsilon,
                                 gateway.num_heuristics(), rng, first_step)),
        expert_(ExpertState::Init(gateway.num_heuristics(),
                                  RateFromGamma(config.gamma), config.alpha,
                                  config.kind)),
        prev_(start) {
    x_prev_ = expert_.distribution();
    x_cur_ = x_prev_;
    prev_.i = UniformIndex(rng, gateway.num_heuristics());
  }

  const ExplorationSchedule& schedule() const { return schedule_; }
  const Distribution& x_prev() const { return x_prev_; }
  const Distribution& x_cur() const { return x_cur_; }
  int initial_heuristic() const { return prev_.i; }

  StepOutcome Step(int t, Rng& rng) {
    StepOutcome out = ProduceStep(prev_, x_prev_, x_cur_, schedule_, gateway_,
                                  instance_, t, rng);
    prev_ = {out.i, out.b, out.s};
    x_prev_ = x_cur_;
    if (schedule_.label(t) == StepLabel::kExplore) {
      expert_ = DynamicsStep(expert_, schedule_, gateway_, instance_, t);
      x_cur_ = expert_.distribution();
    }
    return out;
  }

  ProducerState state() const { return prev_; }

 private:
  const Instance& instance_;
  QueryGateway& gateway_;
  ExplorationSchedule schedule_;
  ExpertState expert_;
  ProducerState prev_;
  Distribution x_prev_;  // x_{t-1} before Step(t)
  Distribution x_cur_;   // x_t before Step(t)
};

void CheckWrapped(const Instance& instance,
                  std::span<const HeuristicPath> paths) {
  if (paths.empty()) throw ValidationError("combiner: need at least one path");
  for (const HeuristicPath& p : paths) {
    CheckPath(instance, p);
    if (!p.bounded()) {
      throw ValidationError("combiner: heuristic paths must be wrapped");
    }
  }
}

// Shared bookkeeping for RunCombiner and RunDoubling.
class Recorder {
 public:
  Recorder(const Instance& instance, std::span<const HeuristicPath> paths,
           const RunOptions& options, RunResult& result)
      : instance_(instance), options_(options), result_(result) {
    const int horizon = instance.horizon();
    ell_ = static_cast<int>(paths.size());
    f_.resize(static_cast<size_t>(horizon) * ell_);
    for (int i = 0; i < ell_; ++i) {
      std::vector<double> fi = PathCosts(instance, paths[i]);
      for (int t = 1; t <= horizon; ++t) {
        f_[static_cast<size_t>(t - 1) * ell_ + i] = fi[t - 1];
      }
    }
    result_.labels.reserve(horizon);
    result_.heuristics.reserve(horizon);
    result_.states.reserve(horizon);
    result_.known.reserve(horizon);
    result_.step_cost.reserve(horizon);
    result_.cum_cost.reserve(horizon);
  }

  void Begin(const Distribution& x0, int i0) {
    result_.initial_heuristic = i0;
    if (options_.record_x) result_.x.push_back(x0);
    last_i_ = i0;
  }

  void Record(int t, StepLabel label, const StepOutcome& out,
              const Distribution& x_prev, const Distribution& x_t) {
    const double diameter = instance_.metric().diameter();
    result_.labels.push_back(label);
    result_.heuristics.push_back(out.i);
    result_.states.push_back(out.s);
    result_.known.push_back(out.known ? 1 : 0);
    result_.step_cost.push_back(out.cost);
    result_.alg_cost += out.cost;
    result_.cum_cost.push_back(result_.alg_cost);
    if (label == StepLabel::kExplore) ++result_.explore_steps;
    if (out.i != last_i_) ++result_.switches;
    last_i_ = out.i;
    double expected = 0.0;
    for (int i = 0; i < ell_; ++i) {
      expected += f_[static_cast<size_t>(t - 1) * ell_ + i] * x_t[i];
    }
    const double moved = L1(x_prev, x_t);
    result_.fractional_cost += expected + diameter * moved;
    result_.tv_sum += 0.5 * moved;
    if (options_.record_x) result_.x.push_back(x_t);
  }

 private:
  const Instance& instance_;
  const RunOptions& options_;
  RunResult& result_;
  int ell_ = 0;
  int last_i_ = 0;
  std::vector<double> f_;
};

void Finish(const Instance& instance, std::span<const HeuristicPath> paths,
            const RunOptions& options, const QueryGateway& gateway,
            RunResult& result) {
  result.audit = gateway.Audit();
  result.bench = options.benchmarks
                     ? *options.benchmarks
                     : ComputeBenchmarks(instance, paths, options.k);
  result.regret0 = result.alg_cost - result.bench.opt0;
  result.regretk = result.alg_cost - result.bench.optk;
}

}  // namespace

std::string ToString(StepLabel label) {
  switch (label) {
    case StepLabel::kExploit:
      return "exploit";
    case StepLabel::kSkip:
      return "skip";
    case StepLabel::kExplore:
      return "explore";
  }
  return "exploit";
}

ExplorationSchedule ExplorationSchedule::FromCoins(int first_step, int m,
                                                   std::vector<char> beta,
                                                   std::vector<int> picks) {
  if (m < 1) throw ValidationError("schedule: m must be >= 1");
  if (beta.empty()) throw ValidationError("schedule: empty beta array");
  const int length = static_cast<int>(beta.size()) - 1;
  if (static_cast<int>(picks.size()) < length + m + 1) {
    throw ValidationError("schedule: picks must cover steps 1..T+m");
  }
  ExplorationSchedule s;
  s.first_ = first_step;
  s.length_ = length;
  s.m_ = m;
  s.beta_ = std::move(beta);
  s.beta_[0] = 0;
  s.picks_ = std::move(picks);
  s.DeriveLabels();
  return s;
}

void ExplorationSchedule::DeriveLabels() {
  labels_.assign(length_ + 1, StepLabel::kExploit);
  target_.assign(length_ + 1, 0);
  explore_count_ = 0;
  int u = 0;
  while (u <= length_) {
    // u is an exploitation step.
    if (beta_[u]) {
      const int tau = u + m_;
      for (int v = u + 1; v < tau && v <= length_; ++v) {
        labels_[v] = StepLabel::kSkip;
        target_[v] = tau + first_ - 1;
      }
      if (tau <= length_) {
        labels_[tau] = StepLabel::kExplore;
        target_[tau] = tau + first_ - 1;
        ++explore_count_;
      }
      u = tau;
    }
    ++u;
  }
}

std::vector<StepLabel> ExplorationSchedule::Labels() const {
  return std::vector<StepLabel>(labels_.begin() + 1, labels_.end());
}

ExplorationSchedule SampleSchedule(int horizon, int m, double epsilon, int ell,
                                   Rng& rng, int first_step) {
  if (horizon < 1) throw ValidationError("schedule: horizon must be >= 1");
  if (ell < 1) throw ValidationError("schedule: need ell >= 1");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw ValidationError("schedule: epsilon must lie in [0, 1)");
  }
  std::vector<char> beta(horizon + 1, 0);
  for (int u = 1; u <= horizon; ++u) beta[u] = Bernoulli(rng, epsilon) ? 1 : 0;
  std::vector<int> picks(horizon + m + 1, 0);
  for (int u = 1; u <= horizon + m; ++u) picks[u] = UniformIndex(rng, ell);
  return ExplorationSchedule::FromCoins(first_step, m, std::move(beta),
                                        std::move(picks));
}

std::vector<double> FeedbackVector(double f, int e, double loss_scale,
                                   int ell) {
  if (e < 0 || e >= ell) throw ValidationError("feedback: index out of range");
  if (std::isnan(f) || f < -kFeedbackTolerance ||
      f > loss_scale + kFeedbackTolerance) {
    throw ValidationError("feedback: cost " + std::to_string(f) +
                          " outside [0, " + std::to_string(loss_scale) + "]");
  }
  std::vector<double> g(ell, 0.0);
  if (loss_scale > 0.0) g[e] = std::clamp(f / loss_scale, 0.0, 1.0);
  return g;
}

ExpertState DynamicsStep(const ExpertState& state,
                         const ExplorationSchedule& schedule,
                         const QueryGateway& gateway, const Instance& instance,
                         int t) {
  if (schedule.label(t) != StepLabel::kExplore) return state;
  const int e = schedule.pick(t);
  std::optional<double> f = gateway.ObservedCost(e, t);
  if (!f) {
    throw InvariantError("dynamics: explore step " + std::to_string(t) +
                         " has no observed cost");
  }
  return Update(state, FeedbackVector(*f, e, 2.0 * instance.metric().diameter(),
                                      state.size()));
}

int QueryPolicy(const ExplorationSchedule& schedule, int i_t, int t) {
  if (schedule.label(t) == StepLabel::kExploit) return i_t;
  return schedule.pick(schedule.target_time(t));
}

int GreedyState(const Instance& instance, int t, int b) {
  const MetricSpace& d = instance.metric();
  int best = -1;
  double best_value = kInf;
  for (int s = 0; s < instance.size(); ++s) {
    const double value = d(b, s) + instance.cost(t, s);
    if (value < best_value) {
      best_value = value;
      best = s;
    }
  }
  if (best < 0) {
    throw InfeasibleError("greedy step: every state is forbidden at step " +
                          std::to_string(t));
  }
  return best;
}

StepOutcome ProduceStep(const ProducerState& prev,
                        std::span<const double> x_prev,
                        std::span<const double> x_t,
                        const ExplorationSchedule& schedule,
                        QueryGateway& gateway, const Instance& instance, int t,
                        Rng& rng) {
  StepOutcome out;
  out.i = Changed(x_prev, x_t) ? RoundStep(prev.i, x_prev, x_t, rng) : prev.i;
  out.queried = QueryPolicy(schedule, out.i, t);
  std::optional<int> revealed = gateway.Query(out.queried, t);
  if (out.queried == out.i && revealed) {
    out.known = true;
    out.b = *revealed;
    out.s = *revealed;
    if (std::isinf(instance.cost(t, out.s))) {
      // Serve the request at the nearest free state; the next step moves on
      // from there.
      out.s = NearestZeroCostState(instance, t, out.s);
      if (out.s < 0) {
        throw InfeasibleError("produce: no zero-cost state at step " +
                              std::to_string(t));
      }
    }
  } else {
    out.b = prev.b;
    out.s = GreedyState(instance, t, prev.b);
  }
  out.cost = instance.cost(t, out.s) + instance.metric()(prev.s, out.s);
  return out;
}

Hyperparams HedgeHyperparams(double diameter, int ell, int m,
                             double opt_guess) {
  if (!(diameter > 0.0) || m < 1 || !(opt_guess > 0.0)) {
    throw ValidationError("hedge hyperparameters: inputs must be positive");
  }
  if (ell < 2) throw ValidationError("hedge hyperparameters: need ell >= 2");
  const double base = std::cbrt(diameter * ell * std::log(ell) / opt_guess);
  Hyperparams h;
  h.epsilon = ClampRate(base * std::pow(m, -4.0 / 3.0), kRateCap);
  h.gamma = ClampRate(base * std::pow(m, 2.0 / 3.0), kRateCap);
  return h;
}

Hyperparams ShareHyperparams(double diameter, int ell, int m, int k,
                             double opt_guess) {
  if (!(diameter > 0.0) || ell < 1 || m < 1) {
    throw ValidationError("share hyperparameters: inputs must be positive");
  }
  if (k < 1) throw ValidationError("share hyperparameters: need k >= 1");
  if (!(opt_guess >= 2.0 * k)) {
    throw ValidationError("share hyperparameters: need opt_guess >= 2k");
  }
  const double dlk = diameter * ell * k;
  Hyperparams h;
  h.epsilon =
      ClampRate(std::cbrt(dlk / opt_guess) * std::pow(m, -4.0 / 3.0), kRateCap);
  const double ratio = dlk / (h.epsilon * opt_guess);
  h.alpha = ClampRate(ratio, 0.5);
  h.gamma = ClampRate(std::sqrt(ratio), 0.99);
  return h;
}

void CombinerConfig::Validate() const {
  if (m < 2) throw ValidationError("combiner: m must be >= 2");
  if (!(epsilon >= 0.0 && epsilon < 0.5)) {
    throw ValidationError("combiner: epsilon must lie in [0, 1/2)");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw ValidationError("combiner: gamma must lie in (0, 1)");
  }
  if (!(alpha >= 0.0 && alpha <= 0.5)) {
    throw ValidationError("combiner: alpha must lie in [0, 1/2]");
  }
  if (k < 0) throw ValidationError("combiner: k must be >= 0");
}

CombinerConfig AutoConfig(ExpertKind kind, double diameter, int ell, int m,
                          double opt_guess, int k) {
  CombinerConfig c;
  c.kind = kind;
  c.m = m;
  c.opt_guess = opt_guess;
  c.k = k;
  Hyperparams h = kind == ExpertKind::kHedge
                      ? HedgeHyperparams(diameter, ell, m, opt_guess)
                      : ShareHyperparams(diameter, ell, m, k, opt_guess);
  c.epsilon = h.epsilon;
  c.gamma = h.gamma;
  c.alpha = kind == ExpertKind::kHedge ? 0.0 : h.alpha;
  return c;
}

Benchmarks ComputeBenchmarks(const Instance& instance,
                             std::span<const HeuristicPath> paths, int k) {
  Benchmarks b;
  b.k = k;
  b.opt0 = OptZero(instance, paths);
  b.optk = k == 0 ? b.opt0 : OptK(instance, paths, k).cost;
  b.off = OfflineOpt(instance).cost;
  return b;
}

RunResult RunCombiner(const Instance& instance,
                      std::span<const HeuristicPath> paths,
                      const CombinerConfig& config, Rng& rng,
                      const RunOptions& options) {
  config.Validate();
  CheckWrapped(instance, paths);
  QueryGateway gateway(instance, paths, config.m);
  RunResult result;
  result.hyper = {config.epsilon, config.gamma, config.alpha};
  result.epoch_starts = {1};
  Recorder recorder(instance, paths, options, result);

  Session session(instance, gateway, config, 1,
                  {0, instance.start(), instance.start()}, rng);
  recorder.Begin(session.x_prev(), session.initial_heuristic());
  for (int t = 1; t <= instance.horizon(); ++t) {
    Distribution x_prev = session.x_prev();
    Distribution x_t = session.x_cur();
    StepOutcome out = session.Step(t, rng);
    recorder.Record(t, session.schedule().label(t), out, x_prev, x_t);
  }
  Finish(instance, paths, options, gateway, result);
  return result;
}

double WindowOfflineCost(const Instance& instance, int first, int last) {
  if (first < 1 || last > instance.horizon()) {
    throw ValidationError("window offline cost: range out of bounds");
  }
  std::vector<double> v(instance.size(), 0.0);
  for (int t = first; t <= last; ++t) RelaxOffline(instance, t, v);
  return *std::min_element(v.begin(), v.end());
}

RunResult RunDoubling(const Instance& instance,
                      std::span<const HeuristicPath> paths,
                      const DoublingConfig& config, Rng& rng,
                      const RunOptions& options) {
  if (!(config.omega > 0.0)) throw ValidationError("doubling: need omega > 0");
  if (!(config.r >= 1.0)) throw ValidationError("doubling: need R >= 1");
  CheckWrapped(instance, paths);
  const int ell = static_cast<int>(paths.size());
  const double diameter = instance.metric().diameter();
  auto make_config = [&](double guess) {
    // Share mode needs guess >= 2k; early epochs use the smallest valid
    // guess.
    if (config.kind == ExpertKind::kShare) {
      guess = std::max(guess, 2.0 * config.k);
    }
    CombinerConfig c = AutoConfig(config.kind, diameter, ell, config.m, guess,
                                  config.kind == ExpertKind::kShare ? config.k
                                                                    : 0);
    c.Validate();
    return c;
  };

  QueryGateway gateway(instance, paths, config.m);
  RunResult result;
  Recorder recorder(instance, paths, options, result);

  double guess = config.omega;
  CombinerConfig current = make_config(guess);
  result.hyper = {current.epsilon, current.gamma, current.alpha};
  result.epoch_starts = {1};
  auto session = std::make_unique<Session>(
      instance, gateway, current, 1,
      ProducerState{0, instance.start(), instance.start()}, rng);
  recorder.Begin(session->x_prev(), session->initial_heuristic());

  std::vector<double> v(instance.size(), 0.0);
  double epoch_off = 0.0;
  for (int t = 1; t <= instance.horizon(); ++t) {
    if (epoch_off > config.r * guess) {
      guess *= 2.0;
      current = make_config(guess);
      session = std::make_unique<Session>(instance, gateway, current, t,
                                          session->state(), rng);
      result.epoch_starts.push_back(t);
      std::fill(v.begin(), v.end(), 0.0);
      epoch_off = 0.0;
    }
    Distribution x_prev = session->x_prev();
    Distribution x_t = session->x_cur();
    StepOutcome out = session->Step(t, rng);
    recorder.Record(t, session->schedule().label(t), out, x_prev, x_t);
    RelaxOffline(instance, t, v);
    epoch_off = *std::min_element(v.begin(), v.end());
  }
  result.epochs = static_cast<int>(result.epoch_starts.size());
  Finish(instance, paths, options, gateway, result);
  return result;
}

}  // namespace mtsc
