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

// Plain-text serialization. An instance file reads
//
//   n 3
//   start 0
//   dist
//   0 1 2
//   1 0 1
//   2 1 0
//   T 2
//   costs
//   0 +inf 1
//   3 0 0
//
// with whitespace-separated tokens, "+inf" for forbidden states and '#'
// starting a comment. Numbers are written with 17 significant digits so a
// round trip is exact.

#ifndef MTSC_INSTANCE_IO_H_
#define MTSC_INSTANCE_IO_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "mtsc/adversary.h"
#include "mtsc/instance.h"

namespace mtsc {

void WriteInstance(std::ostream& out, const Instance& instance);
Instance ReadInstance(std::istream& in);

// "paths <ell> <T>" then "bounded <0|1>" then one line of T+1 states per
// heuristic.
void WritePaths(std::ostream& out, const std::vector<HeuristicPath>& paths);
std::vector<HeuristicPath> ReadPaths(std::istream& in);

// Sidecar for a lower-bound instance: ell, blocks, pad, the sigma table and
// the loss table. The instance itself goes through WriteInstance.
void WriteLbSidecar(std::ostream& out, const LBInstance& lb);
LBInstance ReadLbSidecar(std::istream& in, Instance instance);

Instance LoadInstanceFile(const std::string& path);
void SaveInstanceFile(const std::string& path, const Instance& instance);

// Formats with 17 significant digits; infinities print as "+inf".
std::string FormatDouble(double v);

}  // namespace mtsc

#endif  // MTSC_INSTANCE_IO_H_
