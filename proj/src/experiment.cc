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

#include "mtsc/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mtsc/access.h"
#include "mtsc/errors.h"
#include "mtsc/instance_io.h"
#include "mtsc/mab.h"
#include "mtsc/oracles.h"

namespace mtsc {
namespace {

using nlohmann::json;

// Reads fields of one JSON object and rejects keys nobody asked for.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string where)
      : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) {
      throw ValidationError("config: '" + where_ + "' must be an object");
    }
  }

  template <typename T>
  void Get(const std::string& key, T& out) {
    seen_.insert(key);
    auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception& e) {
      throw ValidationError("config: bad value for '" + where_ + "." + key +
                            "': " + e.what());
    }
  }

  // Number, or the string "auto" / a missing key for an unset value.
  void GetOptional(const std::string& key, std::optional<double>& out) {
    seen_.insert(key);
    auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return;
    if (it->is_string() && it->get<std::string>() == "auto") {
      out.reset();
      return;
    }
    if (!it->is_number()) {
      throw ValidationError("config: '" + where_ + "." + key +
                            "' must be a number or \"auto\"");
    }
    out = it->get<double>();
  }

  const json* Child(const std::string& key) {
    seen_.insert(key);
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  void Finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ValidationError("config: unknown key '" + where_ + "." +
                              it.key() + "'");
      }
    }
  }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> seen_;
};

void ParseLossParams(const json& obj, LossParams& p) {
  ObjectReader r(obj, "instance.loss_params");
  r.Get("p", p.p);
  r.Get("delta", p.delta);
  r.Get("best", p.best);
  r.Get("start", p.start);
  r.Get("step", p.step);
  r.Finish();
}

void ParseInstance(const json& obj, InstanceSpec& desc) {
  ObjectReader r(obj, "instance");
  r.Get("family", desc.family);
  int ell = desc.planted.ell;
  int horizon = desc.planted.horizon;
  r.Get("ell", ell);
  r.Get("horizon", horizon);
  desc.planted.ell = desc.star.ell = ell;
  desc.planted.horizon = desc.star.horizon = horizon;
  r.Get("n", desc.planted.n);
  r.Get("scale", desc.planted.scale);
  r.Get("target_switch", desc.planted.target_switch);
  r.Get("free_fraction", desc.planted.free_fraction);
  r.Get("miss_cost", desc.planted.miss_cost);
  desc.star.miss_cost = desc.planted.miss_cost;
  r.Get("noise", desc.planted.noise);
  r.Get("walk_rate", desc.planted.walk_rate);
  desc.star.walk_rate = desc.planted.walk_rate;
  r.Get("planted", desc.planted.planted);
  r.Get("weights", desc.star.weights);
  r.Get("popularity", desc.star.popularity);
  r.Get("segment_length", desc.segment_length);
  r.Get("blocks", desc.blocks);
  r.Get("pad", desc.pad);
  r.Get("finite_sentinel", desc.finite_sentinel);
  std::string loss = ToString(desc.loss);
  r.Get("loss", loss);
  desc.loss = ParseLossKind(loss);
  if (const json* lp = r.Child("loss_params")) ParseLossParams(*lp, desc.loss_params);
  r.Get("instance_file", desc.instance_file);
  r.Get("paths_file", desc.paths_file);
  r.Get("fixed", desc.fixed);
  r.Finish();
}

void ParseAlgorithm(const json& obj, AlgorithmSpec& desc) {
  ObjectReader r(obj, "algorithm");
  std::string kind = ToString(desc.kind);
  r.Get("expert", kind);
  desc.kind = ParseExpertKind(kind);
  r.Get("m", desc.m);
  r.Get("k", desc.k);
  r.GetOptional("epsilon", desc.epsilon);
  r.GetOptional("gamma", desc.gamma);
  r.GetOptional("alpha", desc.alpha);
  r.GetOptional("opt_guess", desc.opt_guess);
  r.Get("omega", desc.omega);
  r.GetOptional("r", desc.r);
  r.Finish();
}

// Instance plus wrapped heuristic paths for one trial.
Segment BuildTrialInstance(const ExperimentConfig& config, Rng& rng) {
  const InstanceSpec& desc = config.instance;
  const std::string family =
      config.scenario == Scenario::kLowerBound ? std::string("lb") : desc.family;
  if (family == "planted") return PlantedExpert(desc.planted, rng);
  if (family == "star") return WeightedStar(desc.star, rng);
  if (family == "segments") {
    return TrackingSegments(desc.planted, config.algorithm.k,
                            desc.segment_length, rng);
  }
  if (family == "lb") {
    const int ell = desc.planted.ell;
    LossMatrix losses =
        GenLosses(desc.loss, ell, desc.blocks, desc.loss_params, rng);
    LBInstance lb = BuildLbBlocks(ell, desc.blocks, losses, rng,
                                  desc.finite_sentinel, desc.pad);
    Segment seg{lb.instance, {}};
    for (int i = 0; i < ell; ++i) {
      seg.paths.push_back(WrapBounded(LbHeuristic(i, lb, rng), seg.instance));
    }
    return seg;
  }
  if (family == "file") {
    Segment seg{LoadInstanceFile(desc.instance_file), {}};
    std::ifstream in(desc.paths_file);
    if (!in) {
      throw ValidationError("cannot open paths file '" + desc.paths_file + "'");
    }
    for (const HeuristicPath& p : ReadPaths(in)) {
      seg.paths.push_back(WrapBounded(p, seg.instance));
    }
    return seg;
  }
  throw ValidationError("unknown instance family '" + family + "'");
}

CombinerConfig MakeCombinerConfig(const AlgorithmSpec& desc, double diameter,
                                  int ell, const Benchmarks& bench) {
  const double guess = desc.opt_guess.value_or(
      desc.kind == ExpertKind::kShare ? bench.optk : bench.opt0);
  CombinerConfig c;
  c.kind = desc.kind;
  c.m = desc.m;
  c.k = desc.k;
  c.opt_guess = guess;
  const bool need_formula = !desc.epsilon || !desc.gamma ||
                            (desc.kind == ExpertKind::kShare && !desc.alpha);
  if (need_formula) {
    c = AutoConfig(desc.kind, diameter, ell, desc.m, guess,
                   desc.kind == ExpertKind::kShare ? desc.k : 0);
  }
  if (desc.epsilon) c.epsilon = *desc.epsilon;
  if (desc.gamma) c.gamma = *desc.gamma;
  if (desc.alpha) c.alpha = *desc.alpha;
  return c;
}

std::vector<double> Cumulative(std::span<const double> steps) {
  std::vector<double> out(steps.size());
  double acc = 0.0;
  for (size_t t = 0; t < steps.size(); ++t) out[t] = acc += steps[t];
  return out;
}

TrialRecord RunMabTrial(const ExperimentConfig& config, int trial, Rng& irng,
                        Rng& arng) {
  const InstanceSpec& desc = config.instance;
  const AlgorithmSpec& alg = config.algorithm;
  const int ell = desc.planted.ell;
  const int horizon = desc.planted.horizon;
  MemoryAdversary adversary = SwitchingCostAdversary(
      GenLosses(desc.loss, ell, horizon, desc.loss_params, irng));
  Hyperparams h = MabHyperparams(ell, alg.m, horizon);
  if (alg.epsilon) h.epsilon = *alg.epsilon;
  if (alg.gamma) h.gamma = *alg.gamma;
  ExplorationSchedule schedule =
      SampleSchedule(horizon, alg.m, h.epsilon, ell, arng);
  MabResult r = MabPlay(
      schedule, ExpertState::Init(ell, RateFromGamma(h.gamma), 0.0, alg.kind),
      adversary, horizon, arng);
  TrialRecord rec;
  rec.trial = trial;
  rec.alg_cost = r.total_loss;
  rec.opt0 = rec.optk = rec.off = r.best_fixed;
  rec.regret0 = rec.regretk = r.regret;
  rec.hyper = h;
  rec.switches = r.switches;
  rec.explore_steps = r.explore_steps;
  rec.tv_sum = r.tv_sum;
  rec.queries = horizon;
  return rec;
}

}  // namespace

Scenario ParseScenario(const std::string& name) {
  if (name == "upper_bound") return Scenario::kUpperBound;
  if (name == "opt_k") return Scenario::kOptK;
  if (name == "lower_bound") return Scenario::kLowerBound;
  if (name == "mab") return Scenario::kMab;
  if (name == "doubling") return Scenario::kDoubling;
  throw ValidationError("unknown scenario '" + name + "'");
}

std::string ToString(Scenario scenario) {
  switch (scenario) {
    case Scenario::kUpperBound:
      return "upper_bound";
    case Scenario::kOptK:
      return "opt_k";
    case Scenario::kLowerBound:
      return "lower_bound";
    case Scenario::kMab:
      return "mab";
    case Scenario::kDoubling:
      return "doubling";
  }
  return "upper_bound";
}

void ExperimentConfig::Validate() const {
  if (trials < 1) throw ValidationError("config: trials must be >= 1");
  if (threads < 0) throw ValidationError("config: threads must be >= 0");
  if (trace_trials < 0) throw ValidationError("config: trace_trials < 0");
  if (algorithm.m < 2) throw ValidationError("config: m must be >= 2");
  if (algorithm.k < 0) throw ValidationError("config: k must be >= 0");
  if (scenario == Scenario::kOptK && algorithm.k < 1) {
    throw ValidationError("config: opt_k scenario needs k >= 1");
  }
  if (algorithm.kind == ExpertKind::kShare && algorithm.k < 1 &&
      !(algorithm.epsilon && algorithm.gamma && algorithm.alpha)) {
    throw ValidationError("config: share without explicit rates needs k >= 1");
  }
  if (scenario == Scenario::kDoubling && !(algorithm.omega > 0.0)) {
    throw ValidationError("config: doubling needs omega > 0");
  }
  if (algorithm.r && !(*algorithm.r >= 1.0)) {
    throw ValidationError("config: doubling needs R >= 1");
  }
  const std::string& f = instance.family;
  if (f != "planted" && f != "star" && f != "segments" && f != "lb" &&
      f != "file") {
    throw ValidationError("config: unknown instance family '" + f + "'");
  }
  if (f == "file" && scenario != Scenario::kLowerBound &&
      scenario != Scenario::kMab &&
      (instance.instance_file.empty() || instance.paths_file.empty())) {
    throw ValidationError("config: file family needs instance_file and paths_file");
  }
  if (instance.planted.ell < 1 || instance.planted.horizon < 1) {
    throw ValidationError("config: need ell >= 1 and horizon >= 1");
  }
  if (scenario == Scenario::kMab && instance.planted.ell < 2) {
    throw ValidationError("config: mab scenario needs ell >= 2");
  }
  if (instance.blocks < 1) throw ValidationError("config: blocks must be >= 1");
  if (instance.segment_length < 1) {
    throw ValidationError("config: segment_length must be >= 1");
  }
}

ExperimentConfig ParseConfig(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  ExperimentConfig c;
  ObjectReader r(root, "config");
  r.Get("seed", c.seed);
  r.Get("trials", c.trials);
  r.Get("threads", c.threads);
  std::string scenario = ToString(c.scenario);
  r.Get("scenario", scenario);
  c.scenario = ParseScenario(scenario);
  if (const json* inst = r.Child("instance")) ParseInstance(*inst, c.instance);
  if (const json* alg = r.Child("algorithm")) ParseAlgorithm(*alg, c.algorithm);
  if (const json* out = r.Child("output")) {
    ObjectReader o(*out, "output");
    o.Get("dir", c.out_dir);
    o.Get("trace", c.trace);
    o.Get("trace_trials", c.trace_trials);
    o.Finish();
  }
  if (const json* sweep = r.Child("sweep")) {
    ObjectReader s(*sweep, "sweep");
    s.Get("axis", c.sweep_axis);
    s.Get("values", c.sweep_values);
    s.Finish();
  }
  r.Finish();
  c.Validate();
  return c;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

TrialRecord RunTrial(const ExperimentConfig& config, int trial) {
  const int instance_trial = config.instance.fixed ? 0 : trial;
  Rng irng(DeriveSeed(config.seed, instance_trial, kInstanceStream));
  const std::uint64_t alg_seed =
      DeriveSeed(config.seed, trial, kAlgorithmStream);
  Rng arng(alg_seed);
  if (config.scenario == Scenario::kMab) {
    TrialRecord rec = RunMabTrial(config, trial, irng, arng);
    rec.seed = alg_seed;
    return rec;
  }

  Segment seg = BuildTrialInstance(config, irng);
  const AlgorithmSpec& alg = config.algorithm;
  const int ell = static_cast<int>(seg.paths.size());
  const double diameter = seg.instance.metric().diameter();
  Benchmarks bench = ComputeBenchmarks(seg.instance, seg.paths, alg.k);
  RunOptions options;
  options.benchmarks = bench;
  options.k = alg.k;

  RunResult run;
  if (config.scenario == Scenario::kDoubling) {
    DoublingConfig d;
    d.kind = alg.kind;
    d.m = alg.m;
    d.k = std::max(1, alg.k);
    d.omega = alg.omega;
    d.r = alg.r.value_or(std::max(1.0, bench.opt0 / std::max(bench.off, 1e-300)));
    run = RunDoubling(seg.instance, seg.paths, d, arng, options);
  } else {
    run = RunCombiner(seg.instance, seg.paths,
                      MakeCombinerConfig(alg, diameter, ell, bench), arng,
                      options);
  }

  TrialRecord rec;
  rec.trial = trial;
  rec.seed = alg_seed;
  rec.alg_cost = run.alg_cost;
  rec.opt0 = bench.opt0;
  rec.optk = bench.optk;
  rec.off = bench.off;
  rec.regret0 = run.regret0;
  rec.regretk = run.regretk;
  rec.hyper = run.hyper;
  rec.switches = run.switches;
  rec.explore_steps = run.explore_steps;
  rec.epochs = run.epochs;
  rec.tv_sum = run.tv_sum;
  rec.fractional_cost = run.fractional_cost;
  rec.queries = run.audit.queries;
  rec.one_per_step = run.audit.one_per_step;

  if (config.trace && trial < config.trace_trials) {
    rec.labels = run.labels;
    rec.heuristics = run.heuristics;
    rec.step_cost = run.step_cost;
    rec.cum_cost = run.cum_cost;
    double best_cost = kInf;
    std::vector<double> best_steps;
    for (int i = 0; i < ell; ++i) {
      std::vector<double> f = PathCosts(seg.instance, seg.paths[i]);
      double total = 0.0;
      for (double v : f) total += v;
      if (total < best_cost) {
        best_cost = total;
        best_steps = std::move(f);
      }
    }
    rec.heur_cum = Cumulative(best_steps);
    OfflineSolution off = OfflineOpt(seg.instance);
    std::vector<double> off_steps(seg.instance.horizon());
    int prev = seg.instance.start();
    for (int t = 1; t <= seg.instance.horizon(); ++t) {
      const int s = off.states[t - 1];
      off_steps[t - 1] =
          seg.instance.cost(t, s) + seg.instance.metric()(prev, s);
      prev = s;
    }
    rec.off_cum = Cumulative(off_steps);
  }
  return rec;
}

MeanStderr Summarize(std::span<const double> values) {
  MeanStderr out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / values.size();
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.stderr_ = std::sqrt(ss / (values.size() - 1) / values.size());
  }
  return out;
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  ExperimentReport report;
  report.config = config;
  report.trials.resize(config.trials);

  int workers = config.threads == 0
                    ? static_cast<int>(std::thread::hardware_concurrency())
                    : config.threads;
  workers = std::clamp(workers, 1, config.trials);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    while (true) {
      const int trial = next.fetch_add(1);
      if (trial >= config.trials) return;
      try {
        report.trials[trial] = RunTrial(config, trial);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(config.trials);
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SummaryRow& s = report.summary;
  s.scenario = ToString(config.scenario);
  s.trials = config.trials;
  auto column = [&](auto field) {
    std::vector<double> v;
    v.reserve(report.trials.size());
    for (const TrialRecord& r : report.trials) v.push_back(field(r));
    return v;
  };
  s.alg_cost = Summarize(column([](const TrialRecord& r) { return r.alg_cost; }));
  s.opt0 = Summarize(column([](const TrialRecord& r) { return r.opt0; }));
  s.optk = Summarize(column([](const TrialRecord& r) { return r.optk; }));
  s.off = Summarize(column([](const TrialRecord& r) { return r.off; }));
  s.regret0 = Summarize(column([](const TrialRecord& r) { return r.regret0; }));
  s.regretk = Summarize(column([](const TrialRecord& r) { return r.regretk; }));
  s.ratio0 = s.opt0.mean > 0.0 ? s.alg_cost.mean / s.opt0.mean : 0.0;
  s.epsilon =
      Summarize(column([](const TrialRecord& r) { return r.hyper.epsilon; })).mean;
  s.gamma =
      Summarize(column([](const TrialRecord& r) { return r.hyper.gamma; })).mean;
  s.alpha =
      Summarize(column([](const TrialRecord& r) { return r.hyper.alpha; })).mean;
  s.mean_epochs = Summarize(column([](const TrialRecord& r) {
                    return static_cast<double>(r.epochs);
                  })).mean;
  return report;
}

double FitLogLogSlope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("fit: size mismatch");
  if (x.size() < 3) throw ValidationError("fit: need at least 3 points");
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw ValidationError("fit: log-log fit needs positive values");
    }
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= x.size();
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (!(sxx > 0.0)) throw ValidationError("fit: axis values are all equal");
  return sxy / sxx;
}

ExperimentConfig ApplyAxis(const ExperimentConfig& config,
                           const std::string& axis, double value) {
  ExperimentConfig c = config;
  InstanceSpec& inst = c.instance;
  auto scaled = [value](int base) {
    return std::max(1, static_cast<int>(std::lround(base * value)));
  };
  const bool lb = c.scenario == Scenario::kLowerBound || inst.family == "lb";
  const bool segments = inst.family == "segments";
  if (axis == "opt_scale") {
    if (!(value > 0.0)) throw ValidationError("sweep: opt_scale must be > 0");
    if (lb) {
      inst.blocks = scaled(inst.blocks);
    } else if (segments && c.scenario != Scenario::kMab) {
      inst.segment_length = scaled(inst.segment_length);
    } else {
      inst.planted.horizon = inst.star.horizon = scaled(inst.planted.horizon);
    }
    if (c.algorithm.opt_guess) *c.algorithm.opt_guess *= value;
  } else if (axis == "T") {
    const int t = static_cast<int>(std::lround(value));
    if (t < 1) throw ValidationError("sweep: T must be >= 1");
    if (lb) {
      inst.blocks = t;
    } else if (segments && c.scenario != Scenario::kMab) {
      inst.segment_length = t;
    } else {
      inst.planted.horizon = inst.star.horizon = t;
    }
  } else if (axis == "ell") {
    const int ell = static_cast<int>(std::lround(value));
    if (ell < 1) throw ValidationError("sweep: ell must be >= 1");
    inst.planted.ell = inst.star.ell = ell;
  } else if (axis == "m") {
    const int m = static_cast<int>(std::lround(value));
    if (m < 2) throw ValidationError("sweep: m must be >= 2");
    c.algorithm.m = m;
  } else {
    throw ValidationError("sweep: unknown axis '" + axis +
                          "' (expected opt_scale, T, ell or m)");
  }
  c.Validate();
  return c;
}

std::vector<SummaryRow> Sweep(const ExperimentConfig& config,
                              const std::string& axis,
                              std::span<const double> values) {
  if (values.size() < 3) {
    throw ValidationError("sweep: need at least 3 axis values for a slope");
  }
  std::vector<SummaryRow> rows;
  for (double v : values) {
    ExperimentReport report = RunExperiment(ApplyAxis(config, axis, v));
    SummaryRow row = report.summary;
    row.axis = axis;
    row.value = v;
    rows.push_back(row);
  }
  std::vector<double> xs, ys;
  for (const SummaryRow& row : rows) {
    xs.push_back(row.value);
    ys.push_back(config.scenario == Scenario::kOptK ? row.regretk.mean
                                                    : row.regret0.mean);
  }
  try {
    const double slope = FitLogLogSlope(xs, ys);
    for (SummaryRow& row : rows) {
      row.slope = slope;
      row.has_slope = true;
    }
  } catch (const ValidationError&) {
    // Non-positive mean regret somewhere: the slope stays empty.
  }
  return rows;
}

void WriteTrialsCsv(std::ostream& out, const ExperimentReport& report) {
  const bool mab = report.config.scenario == Scenario::kMab;
  out << (mab ? "trial,alg_cost,best_fixed,regret,epsilon,gamma,alpha,seed,"
              : "trial,alg_cost,opt0,optk,off,regret0,regretk,epsilon,gamma,"
                "alpha,seed,")
      << "switches,explore_steps,epochs,tv_sum,fractional_cost,queries,"
         "one_per_step\n";
  for (const TrialRecord& r : report.trials) {
    out << r.trial << ',' << FormatDouble(r.alg_cost) << ',';
    if (mab) {
      out << FormatDouble(r.opt0) << ',' << FormatDouble(r.regret0) << ',';
    } else {
      out << FormatDouble(r.opt0) << ',' << FormatDouble(r.optk) << ','
          << FormatDouble(r.off) << ',' << FormatDouble(r.regret0) << ','
          << FormatDouble(r.regretk) << ',';
    }
    out << FormatDouble(r.hyper.epsilon) << ',' << FormatDouble(r.hyper.gamma)
        << ',' << FormatDouble(r.hyper.alpha) << ',' << r.seed << ','
        << r.switches << ',' << r.explore_steps << ',' << r.epochs << ','
        << FormatDouble(r.tv_sum) << ',' << FormatDouble(r.fractional_cost)
        << ',' << r.queries << ',' << (r.one_per_step ? "true" : "false")
        << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "scenario,axis,value,trials,mean_alg_cost,stderr_alg_cost,mean_opt0,"
         "mean_optk,mean_off,mean_regret0,stderr_regret0,mean_regretk,"
         "stderr_regretk,ratio0,epsilon,gamma,alpha,mean_epochs,slope\n";
  for (const SummaryRow& s : rows) {
    out << s.scenario << ',' << s.axis << ','
        << (s.axis.empty() ? std::string() : FormatDouble(s.value)) << ','
        << s.trials << ',' << FormatDouble(s.alg_cost.mean) << ','
        << FormatDouble(s.alg_cost.stderr_) << ',' << FormatDouble(s.opt0.mean)
        << ',' << FormatDouble(s.optk.mean) << ',' << FormatDouble(s.off.mean)
        << ',' << FormatDouble(s.regret0.mean) << ','
        << FormatDouble(s.regret0.stderr_) << ','
        << FormatDouble(s.regretk.mean) << ','
        << FormatDouble(s.regretk.stderr_) << ',' << FormatDouble(s.ratio0)
        << ',' << FormatDouble(s.epsilon) << ',' << FormatDouble(s.gamma)
        << ',' << FormatDouble(s.alpha) << ',' << FormatDouble(s.mean_epochs)
        << ',' << (s.has_slope ? FormatDouble(s.slope) : std::string())
        << '\n';
  }
}

void WriteTraceCsv(std::ostream& out, const ExperimentReport& report) {
  out << "trial,t,label,i_t,step_cost,cum_cost,heur_cum,off_cum\n";
  for (const TrialRecord& r : report.trials) {
    for (size_t t = 0; t < r.labels.size(); ++t) {
      out << r.trial << ',' << t + 1 << ',' << ToString(r.labels[t]) << ','
          << r.heuristics[t] + 1 << ',' << FormatDouble(r.step_cost[t]) << ','
          << FormatDouble(r.cum_cost[t]) << ',' << FormatDouble(r.heur_cum[t])
          << ',' << FormatDouble(r.off_cum[t]) << '\n';
    }
  }
}

namespace {

std::ofstream OpenOutput(const std::string& dir, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + dir +
                             "': " + ec.message());
  }
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

void CloseChecked(std::ofstream& out, const std::string& name) {
  out.close();
  if (!out) throw std::runtime_error("write failed for '" + name + "'");
}

}  // namespace

void WriteReport(const ExperimentReport& report) {
  const std::string& dir = report.config.out_dir;
  {
    std::ofstream out = OpenOutput(dir, "trials.csv");
    WriteTrialsCsv(out, report);
    CloseChecked(out, "trials.csv");
  }
  {
    std::ofstream out = OpenOutput(dir, "summary.csv");
    WriteSummaryCsv(out, std::span<const SummaryRow>(&report.summary, 1));
    CloseChecked(out, "summary.csv");
  }
  if (report.config.trace) {
    std::ofstream out = OpenOutput(dir, "trace.csv");
    WriteTraceCsv(out, report);
    CloseChecked(out, "trace.csv");
  }
}

void WriteSweep(const ExperimentConfig& config,
                std::span<const SummaryRow> rows) {
  std::ofstream out = OpenOutput(config.out_dir, "summary.csv");
  WriteSummaryCsv(out, rows);
  CloseChecked(out, "summary.csv");
}

}  // namespace mtsc
