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

#include "mtsc/instance_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mtsc/errors.h"

namespace mtsc {
namespace {

// Token reader that skips '#' comments.
class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  std::string Next() {
    std::string tok;
    while (in_ >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in_, rest);
        continue;
      }
      return tok;
    }
    throw ValidationError("instance file: unexpected end of input");
  }

  void Expect(const std::string& keyword) {
    std::string tok = Next();
    if (tok != keyword) {
      throw ValidationError("instance file: expected '" + keyword +
                            "', found '" + tok + "'");
    }
  }

  double Real() {
    std::string tok = Next();
    if (tok == "+inf" || tok == "inf") return kInf;
    try {
      size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("instance file: bad number '" + tok + "'");
    }
  }

  int Int() {
    std::string tok = Next();
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("instance file: bad integer '" + tok + "'");
    }
  }

 private:
  std::istream& in_;
};

}  // namespace

std::string FormatDouble(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void WriteInstance(std::ostream& out, const Instance& instance) {
  const int n = instance.size();
  out << "n " << n << "\nstart " << instance.start() << "\ndist\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out << (j ? " " : "") << FormatDouble(instance.metric()(i, j));
    }
    out << '\n';
  }
  out << "T " << instance.horizon() << "\ncosts\n";
  for (int t = 1; t <= instance.horizon(); ++t) {
    for (int s = 0; s < n; ++s) {
      out << (s ? " " : "") << FormatDouble(instance.cost(t, s));
    }
    out << '\n';
  }
}

Instance ReadInstance(std::istream& in) {
  Tokens tok(in);
  tok.Expect("n");
  const int n = tok.Int();
  if (n < 1) throw ValidationError("instance file: n must be >= 1");
  tok.Expect("start");
  const int start = tok.Int();
  tok.Expect("dist");
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  for (auto& row : dist) {
    for (double& v : row) v = tok.Real();
  }
  tok.Expect("T");
  const int horizon = tok.Int();
  if (horizon < 1) throw ValidationError("instance file: T must be >= 1");
  tok.Expect("costs");
  std::vector<double> flat(static_cast<size_t>(horizon) * n);
  for (double& v : flat) v = tok.Real();
  return Instance(ValidateMetric(dist), start, std::move(flat));
}

void WritePaths(std::ostream& out, const std::vector<HeuristicPath>& paths) {
  const int horizon = paths.empty() ? 0 : paths.front().horizon();
  bool bounded = !paths.empty();
  for (const HeuristicPath& p : paths) bounded = bounded && p.bounded();
  out << "paths " << paths.size() << ' ' << horizon << "\nbounded "
      << (bounded ? 1 : 0) << '\n';
  for (const HeuristicPath& p : paths) {
    for (int t = 0; t <= p.horizon(); ++t) out << (t ? " " : "") << p.state(t);
    out << '\n';
  }
}

std::vector<HeuristicPath> ReadPaths(std::istream& in) {
  Tokens tok(in);
  tok.Expect("paths");
  const int ell = tok.Int();
  const int horizon = tok.Int();
  if (ell < 1 || horizon < 1) {
    throw ValidationError("paths file: need ell >= 1 and T >= 1");
  }
  tok.Expect("bounded");
  const bool bounded = tok.Int() != 0;
  std::vector<HeuristicPath> paths;
  for (int i = 0; i < ell; ++i) {
    std::vector<int> states(horizon + 1);
    for (int& s : states) s = tok.Int();
    paths.emplace_back(std::move(states), bounded);
  }
  return paths;
}

void WriteLbSidecar(std::ostream& out, const LBInstance& lb) {
  out << "lb " << lb.ell << ' ' << lb.blocks << ' ' << lb.pad << ' '
      << (lb.finite_sentinel ? 1 : 0) << "\nsigma\n";
  for (const auto& row : lb.sigma) {
    for (int i = 0; i < lb.ell; ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  out << "losses\n";
  for (const auto& row : lb.losses) {
    for (int i = 0; i < lb.ell; ++i) {
      out << (i ? " " : "") << FormatDouble(row[i]);
    }
    out << '\n';
  }
}

LBInstance ReadLbSidecar(std::istream& in, Instance instance) {
  Tokens tok(in);
  tok.Expect("lb");
  LBInstance lb{0, 0, 0, false, {}, {}, std::move(instance)};
  lb.ell = tok.Int();
  lb.blocks = tok.Int();
  lb.pad = tok.Int();
  lb.finite_sentinel = tok.Int() != 0;
  if (lb.ell < 1 || lb.blocks < 1 || lb.pad < 0) {
    throw ValidationError("lb sidecar: bad header");
  }
  if (lb.instance.size() != 3 * lb.ell ||
      lb.instance.horizon() != 3 * lb.blocks + lb.pad) {
    throw ValidationError("lb sidecar: does not match the instance");
  }
  tok.Expect("sigma");
  lb.sigma.assign(lb.blocks, std::vector<int>(lb.ell));
  for (auto& row : lb.sigma) {
    for (int& v : row) v = tok.Int();
  }
  tok.Expect("losses");
  lb.losses.assign(lb.blocks, std::vector<double>(lb.ell));
  for (auto& row : lb.losses) {
    for (double& v : row) v = tok.Real();
  }
  return lb;
}

Instance LoadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  return ReadInstance(in);
}

void SaveInstanceFile(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  WriteInstance(out, instance);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace mtsc
