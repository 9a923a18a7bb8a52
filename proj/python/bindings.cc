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

// Python bindings for the mtsc core. Functions take plain lists (or numpy
// arrays, which pybind11 converts) and return dicts for run results.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "mtsc/access.h"
#include "mtsc/combiner.h"
#include "mtsc/errors.h"
#include "mtsc/experiment.h"
#include "mtsc/experts.h"
#include "mtsc/instance.h"
#include "mtsc/mab.h"
#include "mtsc/metric.h"
#include "mtsc/oracles.h"
#include "mtsc/rng.h"
#include "mtsc/selfcheck.h"
#include "mtsc/transport.h"

namespace py = pybind11;

namespace mtsc {
namespace {

py::dict SummaryToDict(const SummaryRow& s) {
  py::dict d;
  d["scenario"] = s.scenario;
  d["trials"] = s.trials;
  d["alg_cost"] = s.alg_cost.mean;
  d["alg_cost_stderr"] = s.alg_cost.stderr_;
  d["opt0"] = s.opt0.mean;
  d["optk"] = s.optk.mean;
  d["off"] = s.off.mean;
  d["regret0"] = s.regret0.mean;
  d["regret0_stderr"] = s.regret0.stderr_;
  d["regretk"] = s.regretk.mean;
  d["regretk_stderr"] = s.regretk.stderr_;
  d["ratio0"] = s.ratio0;
  d["epsilon"] = s.epsilon;
  d["gamma"] = s.gamma;
  d["alpha"] = s.alpha;
  d["mean_epochs"] = s.mean_epochs;
  if (s.has_slope) d["slope"] = s.slope;
  return d;
}

py::dict TrialToDict(const TrialRecord& t) {
  py::dict d;
  d["trial"] = t.trial;
  d["seed"] = t.seed;
  d["alg_cost"] = t.alg_cost;
  d["opt0"] = t.opt0;
  d["optk"] = t.optk;
  d["off"] = t.off;
  d["regret0"] = t.regret0;
  d["regretk"] = t.regretk;
  d["epsilon"] = t.hyper.epsilon;
  d["gamma"] = t.hyper.gamma;
  d["alpha"] = t.hyper.alpha;
  d["switches"] = t.switches;
  d["explore_steps"] = t.explore_steps;
  d["epochs"] = t.epochs;
  d["tv_sum"] = t.tv_sum;
  d["queries"] = t.queries;
  d["one_per_step"] = t.one_per_step;
  return d;
}

py::dict RunResultToDict(const RunResult& r) {
  std::vector<std::string> labels;
  for (StepLabel l : r.labels) labels.push_back(ToString(l));
  py::dict d;
  d["labels"] = labels;
  d["heuristics"] = r.heuristics;
  d["states"] = r.states;
  d["step_cost"] = r.step_cost;
  d["cum_cost"] = r.cum_cost;
  d["alg_cost"] = r.alg_cost;
  d["fractional_cost"] = r.fractional_cost;
  d["tv_sum"] = r.tv_sum;
  d["initial_heuristic"] = r.initial_heuristic;
  d["switches"] = r.switches;
  d["explore_steps"] = r.explore_steps;
  d["queries"] = r.audit.queries;
  d["one_per_step"] = r.audit.one_per_step;
  d["opt0"] = r.bench.opt0;
  d["optk"] = r.bench.optk;
  d["off"] = r.bench.off;
  d["regret0"] = r.regret0;
  d["regretk"] = r.regretk;
  d["epsilon"] = r.hyper.epsilon;
  d["gamma"] = r.hyper.gamma;
  d["alpha"] = r.hyper.alpha;
  d["epochs"] = r.epochs;
  d["epoch_starts"] = r.epoch_starts;
  return d;
}

py::dict Hyper(const Hyperparams& h) {
  py::dict d;
  d["epsilon"] = h.epsilon;
  d["gamma"] = h.gamma;
  d["alpha"] = h.alpha;
  return d;
}

}  // namespace
}  // namespace mtsc

PYBIND11_MODULE(_mtscombine, m) {
  using namespace mtsc;
  m.doc() = "Combining MTS heuristics under m-delayed bandit access";

  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError",
                                          PyExc_RuntimeError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<InvariantError>(m, "InvariantError",
                                         PyExc_RuntimeError);

  py::class_<MetricSpace>(m, "Metric")
      .def_property_readonly("size", &MetricSpace::size)
      .def_property_readonly("diameter", &MetricSpace::diameter)
      .def("matrix", &MetricSpace::Matrix)
      .def("__call__", &MetricSpace::operator());
  m.def("uniform_metric", &UniformMetric, py::arg("n"), py::arg("scale") = 1.0);
  m.def("metric_from_matrix", &ValidateMetric, py::arg("dist"),
        py::arg("tolerance") = 1e-9);
  m.def("metric_closure", &MetricClosure, py::arg("edges"));

  py::class_<Instance>(m, "Instance")
      .def(py::init<MetricSpace, int, std::vector<CostVector>>(),
           py::arg("metric"), py::arg("start"), py::arg("costs"))
      .def_property_readonly("metric", &Instance::metric)
      .def_property_readonly("size", &Instance::size)
      .def_property_readonly("start", &Instance::start)
      .def_property_readonly("horizon", &Instance::horizon)
      .def("cost", py::overload_cast<int, int>(&Instance::cost, py::const_),
           py::arg("t"), py::arg("state"))
      .def("normalized", &Instance::Normalized)
      .def("is_normalized", &Instance::IsNormalized);

  py::class_<HeuristicPath>(m, "HeuristicPath")
      .def(py::init<std::vector<int>, bool>(), py::arg("states"),
           py::arg("bounded") = false)
      .def_property_readonly("states", &HeuristicPath::states)
      .def_property_readonly("bounded", &HeuristicPath::bounded)
      .def_property_readonly("horizon", &HeuristicPath::horizon);
  m.def("wrap_bounded", &WrapBounded, py::arg("path"), py::arg("instance"));
  m.def("path_costs", &PathCosts, py::arg("instance"), py::arg("path"));
  m.def(
      "solution_cost",
      [](const Instance& inst, const std::vector<int>& states) {
        return SolutionCost(inst, states);
      },
      py::arg("instance"), py::arg("states"));

  m.def(
      "offline_opt",
      [](const Instance& inst) {
        OfflineSolution s = OfflineOpt(inst);
        return py::make_tuple(s.cost, s.states);
      },
      py::arg("instance"), "Returns (cost, states s_1..s_T).");
  m.def(
      "opt_k",
      [](const Instance& inst, const std::vector<HeuristicPath>& paths,
         int k) {
        SwitchingSolution s = OptK(inst, paths, k);
        return py::make_tuple(s.cost, s.heuristics, s.switches);
      },
      py::arg("instance"), py::arg("paths"), py::arg("k"),
      "Returns (cost, heuristic indices i_1..i_T, switches).");
  m.def(
      "opt_zero",
      [](const Instance& inst, const std::vector<HeuristicPath>& paths) {
        return OptZero(inst, paths);
      },
      py::arg("instance"), py::arg("paths"));

  m.def(
      "tv_emd",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        return TvEmd(p, q);
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "transport_plan",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        TransportPlan plan = GreedyTransportPlan(p, q);
        std::vector<std::vector<double>> out(plan.size(),
                                             std::vector<double>(plan.size()));
        for (int i = 0; i < plan.size(); ++i) {
          for (int j = 0; j < plan.size(); ++j) out[i][j] = plan(i, j);
        }
        return out;
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "round_step",
      [](int i_prev, const std::vector<double>& p, const std::vector<double>& q,
         std::uint64_t seed) {
        Rng rng(seed);
        return RoundStep(i_prev, p, q, rng);
      },
      py::arg("i_prev"), py::arg("p"), py::arg("q"), py::arg("seed"));

  py::class_<ExpertState>(m, "ExpertState")
      .def_static(
          "init",
          [](int ell, double eta, double alpha, const std::string& kind) {
            return ExpertState::Init(ell, eta, alpha, ParseExpertKind(kind));
          },
          py::arg("ell"), py::arg("eta"), py::arg("alpha") = 0.0,
          py::arg("kind") = "hedge")
      .def_property_readonly("weights", &ExpertState::weights)
      .def_property_readonly("eta", &ExpertState::eta)
      .def_property_readonly("alpha", &ExpertState::alpha)
      .def_property_readonly(
          "kind", [](const ExpertState& s) { return ToString(s.kind()); })
      .def("distribution", &ExpertState::distribution)
      .def(
          "update",
          [](const ExpertState& s, const std::vector<double>& g) {
            return Update(s, g);
          },
          py::arg("g"));
  m.def("rate_from_gamma", &RateFromGamma, py::arg("gamma"));
  m.def(
      "check_stability",
      [](const std::vector<double>& x_prev, const std::vector<double>& x_next,
         const std::vector<double>& g, double eta) {
        return CheckStability(x_prev, x_next, g, eta);
      },
      py::arg("x_prev"), py::arg("x_next"), py::arg("g"), py::arg("eta"));
  m.def(
      "mass_moved",
      [](const std::vector<double>& x_prev, const std::vector<double>& x_next) {
        return MassMoved(x_prev, x_next);
      },
      py::arg("x_prev"), py::arg("x_next"));

  m.def(
      "hedge_hyperparams",
      [](double d, int ell, int mm, double opt) {
        return Hyper(HedgeHyperparams(d, ell, mm, opt));
      },
      py::arg("diameter"), py::arg("ell"), py::arg("m"), py::arg("opt_guess"));
  m.def(
      "share_hyperparams",
      [](double d, int ell, int mm, int k, double opt) {
        return Hyper(ShareHyperparams(d, ell, mm, k, opt));
      },
      py::arg("diameter"), py::arg("ell"), py::arg("m"), py::arg("k"),
      py::arg("opt_guess"));
  m.def(
      "mab_hyperparams",
      [](int ell, int mm, int horizon) {
        return Hyper(MabHyperparams(ell, mm, horizon));
      },
      py::arg("ell"), py::arg("m"), py::arg("horizon"));

  m.def(
      "run_combiner",
      [](const Instance& inst, const std::vector<HeuristicPath>& paths,
         const std::string& kind, int mm, double epsilon, double gamma,
         double alpha, std::uint64_t seed, int k) {
        CombinerConfig c;
        c.kind = ParseExpertKind(kind);
        c.m = mm;
        c.epsilon = epsilon;
        c.gamma = gamma;
        c.alpha = alpha;
        c.k = k;
        Rng rng(seed);
        RunOptions opts;
        opts.k = k;
        return RunResultToDict(RunCombiner(inst, paths, c, rng, opts));
      },
      py::arg("instance"), py::arg("paths"), py::arg("kind") = "hedge",
      py::arg("m") = 2, py::arg("epsilon") = 0.0, py::arg("gamma") = 0.5,
      py::arg("alpha") = 0.0, py::arg("seed") = 1, py::arg("k") = 0);
  m.def(
      "run_doubling",
      [](const Instance& inst, const std::vector<HeuristicPath>& paths,
         const std::string& kind, int mm, int k, double omega, double r,
         std::uint64_t seed) {
        DoublingConfig c;
        c.kind = ParseExpertKind(kind);
        c.m = mm;
        c.k = k;
        c.omega = omega;
        c.r = r;
        Rng rng(seed);
        return RunResultToDict(RunDoubling(inst, paths, c, rng));
      },
      py::arg("instance"), py::arg("paths"), py::arg("kind") = "hedge",
      py::arg("m") = 2, py::arg("k") = 1, py::arg("omega") = 1.0,
      py::arg("r") = 1.0, py::arg("seed") = 1);

  m.def(
      "run_experiment",
      [](const std::string& config_json, bool write) {
        ExperimentConfig c = ParseConfig(config_json);
        ExperimentReport report;
        {
          py::gil_scoped_release release;
          report = RunExperiment(c);
        }
        if (write) WriteReport(report);
        py::list trials;
        for (const TrialRecord& t : report.trials) trials.append(TrialToDict(t));
        std::ostringstream csv;
        WriteTrialsCsv(csv, report);
        py::dict d;
        d["summary"] = SummaryToDict(report.summary);
        d["trials"] = trials;
        d["trials_csv"] = csv.str();
        return d;
      },
      py::arg("config_json"), py::arg("write") = false,
      "Runs the experiment described by a JSON config string.");
  m.def(
      "sweep",
      [](const std::string& config_json, const std::string& axis,
         const std::vector<double>& values) {
        ExperimentConfig c = ParseConfig(config_json);
        std::vector<SummaryRow> rows;
        {
          py::gil_scoped_release release;
          rows = Sweep(c, axis, values);
        }
        py::list out;
        for (const SummaryRow& r : rows) {
          py::dict d = SummaryToDict(r);
          d["axis"] = r.axis;
          d["value"] = r.value;
          out.append(d);
        }
        return out;
      },
      py::arg("config_json"), py::arg("axis"), py::arg("values"));
  m.def(
      "fit_loglog_slope",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        return FitLogLogSlope(x, y);
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "self_check",
      [](int cases, std::uint64_t seed) {
        SelfCheckReport r = RunOracleSelfCheck(cases, seed);
        py::dict d;
        d["cases"] = r.cases;
        d["failures"] = r.failures;
        d["max_error"] = r.max_error;
        d["first_failure"] = r.first_failure;
        return d;
      },
      py::arg("cases") = 100, py::arg("seed") = 1);
  m.def("derive_seed", &DeriveSeed, py::arg("seed"), py::arg("trial"),
        py::arg("stream") = 0);
}
