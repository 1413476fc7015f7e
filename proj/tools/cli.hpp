// Copyright 2026 The qunc Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qunc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegativeVerdict = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line; argv[0] is the program name. UNCERT_TOL, when set,
// overrides the structural tolerance used to validate input files.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct BlochRow {
  double x, y, z;
  double u_var, u_s, u_f;
  bool max_uncertain;
  bool pure;
};

// Grid points of [-1, 1]^3 with `resolution` points per axis that lie in the
// Bloch ball, rho = (I + x sx + y sy + z sz) / 2.
std::vector<BlochRow> bloch_disc_rows(int resolution, double log_base = 2.0);

// 12 significant digits, the CSV float format.
std::string format_real(double v);

}  // namespace qunc::cli
