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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qunc/assist.hpp"
#include "qunc/channels.hpp"
#include "qunc/errors.hpp"
#include "qunc/io.hpp"
#include "qunc/linalg.hpp"
#include "qunc/measures.hpp"
#include "qunc/random.hpp"

namespace qunc::cli {

namespace {

using io::json;

// Input problems (bad files, unknown names) map to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

double structural_tolerance() {
  const char* env = std::getenv("UNCERT_TOL");
  if (env == nullptr || *env == '\0') return kTolStruct;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0)) {
    throw UsageError(std::string("UNCERT_TOL must be a positive number, got '") + env + "'");
  }
  return tol;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

DensityMatrix load_state(const std::string& path, double tol) {
  return io::density_from_json(io::read_json_file(path), tol);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  return out;
}

struct MeasureOptions {
  std::string state;
  std::string measures = "var,entropy,fidelity";
  double log_base = 2.0;
};

int cmd_measure(const MeasureOptions& o, std::ostream& out) {
  const double tol = structural_tolerance();
  const std::vector<std::string> names = split_list(o.measures);
  if (names.empty()) throw UsageError("--measures is empty");
  const FunctionCatalog catalog = FunctionCatalog::with_builtins(o.log_base);
  for (const auto& n : names) {
    if (!catalog.contains(n)) throw UsageError("unknown measure '" + n + "'");
  }
  const DensityMatrix rho = load_state(o.state, tol);
  json reports = json::array();
  for (const auto& n : names) {
    const std::string name = FunctionCatalog::canonical_name(n);
    if (name == "var") {
      for (const auto& r : u_var_both(rho)) reports.push_back(io::report_to_json(r));
    } else if (name == "entropy") {
      reports.push_back(io::report_to_json(u_entropy(rho, o.log_base)));
    } else {
      reports.push_back(io::report_to_json(u_geometric(rho)));
    }
  }
  out << reports.dump(2) << "\n";
  return kExitOk;
}

struct VerifyOptions {
  std::string kraus;
  std::string check = "certain";
  double tol = 1e-8;
};

int cmd_verify_channel(const VerifyOptions& o, std::ostream& out) {
  const KrausChannel channel = io::channel_from_json(io::read_json_file(o.kraus),
                                                     structural_tolerance());
  const bool preserving = o.check == "preserving";
  const ChannelVerdict v = preserving ? is_uncertainty_preserving(channel, o.tol)
                                      : is_certain_operation(channel, o.tol);
  json doc = io::verdict_to_json(v);
  doc["check"] = o.check;
  out << doc.dump(2) << "\n";
  const bool pass = preserving ? v.is_uncertainty_preserving : v.is_certain;
  return pass ? kExitOk : kExitNegativeVerdict;
}

struct CaOptions {
  std::string state;
  std::string measure = "entropy";
  int restarts = 32;
  std::uint64_t seed = 0;
  int ensemble_size = 0;
  double log_base = 2.0;
};

int cmd_ca(const CaOptions& o, std::ostream& out) {
  const FunctionCatalog catalog = FunctionCatalog::with_builtins(o.log_base);
  if (!catalog.contains(o.measure)) throw UsageError("unknown measure '" + o.measure + "'");
  const SymmetricConcaveFunction& f = catalog.get(o.measure);
  const DensityMatrix rho = load_state(o.state, structural_tolerance());
  AssistConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  cfg.ensemble_size = o.ensemble_size;
  const CaResult r = coherence_of_assistance(f, rho, cfg);
  json doc = io::ca_result_to_json(r);
  doc["seed"] = o.seed;
  doc["sandwich"] = io::sandwich_to_json(sandwich_check(f, rho, r));
  out << doc.dump(2) << "\n";
  return kExitOk;
}

struct SweepOptions {
  int dim = 2;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string out;
  int restarts = 32;
};

int cmd_sweep(const SweepOptions& o) {
  if (o.dim < 2 || o.dim > 8) throw UsageError("--dim must lie in [2, 8]");
  if (o.samples < 1) throw UsageError("--samples must be >= 1");
  std::ofstream csv = open_output(o.out);
  csv << "state_id,measure,total,quantum,classical,ca_lower,sandwich_ok\r\n";
  const FunctionCatalog catalog = FunctionCatalog::with_builtins();
  for (int id = 0; id < o.samples; ++id) {
    Rng rng(derive_seed(o.seed, static_cast<std::uint64_t>(id)));
    const DensityMatrix rho = random_mixed_state(o.dim, rng);
    const MeasureReport reports[] = {u_var(rho), u_entropy(rho), u_geometric(rho)};
    for (const MeasureReport& rep : reports) {
      AssistConfig cfg;
      cfg.restarts = o.restarts;
      cfg.seed = derive_seed(o.seed ^ 0x5eedULL, static_cast<std::uint64_t>(id));
      const SymmetricConcaveFunction& f = catalog.get(rep.measure);
      const CaResult ca = coherence_of_assistance(f, rho, cfg);
      // Sandwich against the report's own quantum part; it is the pinned
      // coherence for each measure.
      const bool ok = rep.quantum - 1e-6 <= ca.value && ca.value <= rep.total + 1e-6;
      csv << id << ',' << rep.measure << ',' << format_real(rep.total) << ','
          << format_real(rep.quantum) << ',' << format_real(rep.classical) << ','
          << format_real(ca.value) << ',' << (ok ? "true" : "false") << "\r\n";
    }
  }
  if (!csv) throw UsageError("write failed for " + o.out);
  return kExitOk;
}

struct BlochOptions {
  int resolution = 0;
  std::string out;
  double log_base = 2.0;
};

int cmd_bloch_disc(const BlochOptions& o) {
  if (o.resolution < 2) throw UsageError("--resolution must be >= 2");
  const std::vector<BlochRow> rows = bloch_disc_rows(o.resolution, o.log_base);
  std::ofstream csv = open_output(o.out);
  csv << "x,y,z,U_var,U_s,U_f,is_max_uncertain,pure\r\n";
  for (const BlochRow& r : rows) {
    csv << format_real(r.x) << ',' << format_real(r.y) << ',' << format_real(r.z) << ','
        << format_real(r.u_var) << ',' << format_real(r.u_s) << ',' << format_real(r.u_f) << ','
        << (r.max_uncertain ? "true" : "false") << ',' << (r.pure ? "true" : "false") << "\r\n";
  }
  if (!csv) throw UsageError("write failed for " + o.out);
  return kExitOk;
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<BlochRow> bloch_disc_rows(int resolution, double log_base) {
  constexpr double kEdge = 1e-12;
  const SymmetricConcaveFunction f_var = variance_function();
  const SymmetricConcaveFunction f_ent = entropy_function(log_base);
  const int n = resolution - 1;
  auto coord = [n](int k) { return static_cast<double>(2 * k - n) / n; };
  std::vector<BlochRow> rows;
  for (int ix = 0; ix <= n; ++ix) {
    for (int iy = 0; iy <= n; ++iy) {
      for (int iz = 0; iz <= n; ++iz) {
        const double x = coord(ix);
        const double y = coord(iy);
        const double z = coord(iz);
        const double r2 = x * x + y * y + z * z;
        if (r2 > 1.0 + kEdge) continue;
        ComplexMatrix m(2, 2);
        m << Complex(1.0 + z, 0.0), Complex(x, -y), Complex(x, y), Complex(1.0 - z, 0.0);
        const DensityMatrix rho(m / 2.0);
        rows.push_back({x, y, z, uncertainty(f_var, rho), uncertainty(f_ent, rho),
                        geometric_uncertainty(rho), is_maximally_uncertain(rho),
                        r2 >= 1.0 - kEdge});
      }
    }
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qunc: uncertainty of quantum states relative to a projective measurement"};
  app.require_subcommand(1);

  MeasureOptions mo;
  auto* measure = app.add_subcommand("measure", "Uncertainty reports for a state file");
  measure->add_option("--state", mo.state, "State JSON file")->required();
  measure->add_option("--measures", mo.measures, "Comma list of var, entropy, fidelity");
  measure->add_option("--log-base", mo.log_base, "Entropy log base (> 1)");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify-channel", "Certain / uncertainty-preserving check");
  verify->add_option("--kraus", vo.kraus, "Kraus JSON file")->required();
  verify->add_option("--check", vo.check, "certain or preserving")
      ->check(CLI::IsMember({"certain", "preserving"}));
  verify->add_option("--tol", vo.tol, "Verdict tolerance");

  CaOptions co;
  auto* ca = app.add_subcommand("ca", "Coherence of assistance lower bound");
  ca->add_option("--state", co.state, "State JSON file")->required();
  ca->add_option("--measure", co.measure, "var, ent or fidelity");
  ca->add_option("--restarts", co.restarts, "Independent restarts")->check(CLI::PositiveNumber);
  ca->add_option("--seed", co.seed, "Random seed");
  ca->add_option("--ensemble-size", co.ensemble_size, "Ensemble cardinality (0 = r^2, <= 16)")
      ->check(CLI::NonNegativeNumber);
  ca->add_option("--log-base", co.log_base, "Entropy log base (> 1)");

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "Random-state sweep to CSV");
  sweep->add_option("--dim", so.dim, "Dimension in [2, 8]");
  sweep->add_option("--samples", so.samples, "Number of states")->required();
  sweep->add_option("--seed", so.seed, "Random seed");
  sweep->add_option("--out", so.out, "Output CSV")->required();
  sweep->add_option("--restarts", so.restarts, "Restarts per optimizer run")
      ->check(CLI::PositiveNumber);

  BlochOptions bo;
  auto* bloch = app.add_subcommand("bloch-disc", "Qubit Bloch grid with maximal-uncertainty flag");
  bloch->add_option("--resolution", bo.resolution, "Grid points per axis (>= 2)")->required();
  bloch->add_option("--out", bo.out, "Output CSV")->required();
  bloch->add_option("--log-base", bo.log_base, "Entropy log base (> 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*measure) return cmd_measure(mo, out);
    if (*verify) return cmd_verify_channel(vo, out);
    if (*ca) return cmd_ca(co, out);
    if (*sweep) return cmd_sweep(so);
    if (*bloch) return cmd_bloch_disc(bo);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qunc::cli
