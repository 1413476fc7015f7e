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

#include "qunc/io.hpp"

#include <fstream>
#include <sstream>

#include "qunc/errors.hpp"

namespace qunc::io {

namespace {

int read_dim(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw InvariantError("document needs an integer \"dim\"");
  }
  const int d = doc["dim"].get<int>();
  if (d < 1) throw DimensionError("\"dim\" must be >= 1");
  return d;
}

std::vector<double> read_row(const json& row, int expected, const char* field) {
  if (!row.is_array() || static_cast<int>(row.size()) != expected) {
    std::ostringstream os;
    os << "\"" << field << "\" row must hold " << expected << " numbers";
    throw DimensionError(os.str());
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& x : row) {
    if (!x.is_number()) {
      throw InvariantError(std::string("non-numeric entry in \"") + field + "\"");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

ComplexMatrix read_matrix(const json& obj, int d) {
  if (!obj.contains("re")) throw InvariantError("matrix needs a \"re\" field");
  const json& re = obj["re"];
  if (!re.is_array() || static_cast<int>(re.size()) != d) {
    std::ostringstream os;
    os << "\"re\" must have " << d << " rows";
    throw DimensionError(os.str());
  }
  const bool has_im = obj.contains("im");
  if (has_im && (!obj["im"].is_array() || static_cast<int>(obj["im"].size()) != d)) {
    std::ostringstream os;
    os << "\"im\" must have " << d << " rows";
    throw DimensionError(os.str());
  }
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    const std::vector<double> r = read_row(re[i], d, "re");
    const std::vector<double> im = has_im ? read_row(obj["im"][i], d, "im") : std::vector<double>(d, 0.0);
    for (int j = 0; j < d; ++j) m(i, j) = Complex(r[j], im[j]);
  }
  return m;
}

json matrix_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ii = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ii.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"re", re}, {"im", im}};
}

}  // namespace

State state_from_json(const json& doc, double tol) {
  const int d = read_dim(doc);
  if (!doc.contains("re") || !doc["re"].is_array() || doc["re"].empty()) {
    throw InvariantError("state needs a nonempty \"re\" array");
  }
  if (doc["re"][0].is_array()) return DensityMatrix(read_matrix(doc, d), tol);

  const std::vector<double> re = read_row(doc["re"], d, "re");
  const std::vector<double> im =
      doc.contains("im") ? read_row(doc["im"], d, "im") : std::vector<double>(d, 0.0);
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(re[i], im[i]);
  return PureState(std::move(v), tol);
}

DensityMatrix density_from_json(const json& doc, double tol) {
  State s = state_from_json(doc, tol);
  if (auto* psi = std::get_if<PureState>(&s)) return DensityMatrix::from_pure(*psi);
  return std::get<DensityMatrix>(std::move(s));
}

json state_to_json(const DensityMatrix& rho) {
  json out = matrix_json(rho.matrix());
  out["dim"] = rho.dim();
  return out;
}

json state_to_json(const PureState& psi) {
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < psi.dim(); ++i) {
    re.push_back(psi[i].real());
    im.push_back(psi[i].imag());
  }
  return {{"dim", psi.dim()}, {"re", re}, {"im", im}};
}

KrausChannel channel_from_json(const json& doc, double tol) {
  const int d = read_dim(doc);
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty()) {
    throw InvariantError("channel needs a nonempty \"kraus\" array");
  }
  std::vector<ComplexMatrix> ops;
  for (const auto& k : doc["kraus"]) ops.push_back(read_matrix(k, d));
  return KrausChannel(std::move(ops), tol);
}

json channel_to_json(const KrausChannel& channel) {
  json ops = json::array();
  for (const auto& k : channel.ops()) ops.push_back(matrix_json(k));
  return {{"dim", channel.dim()}, {"kraus", ops}};
}

json report_to_json(const MeasureReport& report) {
  json meta = {{"decomposition", report.decomposition}};
  meta["log_base"] = report.log_base ? json(*report.log_base) : json(nullptr);
  return {{"measure", report.measure},
          {"total", report.total},
          {"quantum", report.quantum},
          {"classical", report.classical},
          {"meta", meta}};
}

json verdict_to_json(const ChannelVerdict& v) {
  json out = {{"is_certain", v.is_certain},
              {"is_uncertainty_preserving", v.is_uncertainty_preserving}};
  if (!v.reason.empty()) out["reason"] = v.reason;
  json structure = json::object();
  if (v.certain_structure) {
    const CertainStructure& s = *v.certain_structure;
    json weights = json::array();
    json phases = json::array();
    for (Eigen::Index i = 0; i < s.weights.rows(); ++i) {
      json wr = json::array();
      json pr = json::array();
      for (Eigen::Index l = 0; l < s.weights.cols(); ++l) {
        wr.push_back(s.weights(i, l));
        pr.push_back(s.phases(i, l));
      }
      weights.push_back(std::move(wr));
      phases.push_back(std::move(pr));
    }
    structure["certain"] = {{"g", s.g},
                            {"weights", weights},
                            {"phases", phases},
                            {"weight_residual", s.weight_residual},
                            {"cross_residual", s.cross_residual},
                            {"reconstruction_residual", s.reconstruction_residual}};
  }
  if (v.preserving_structure) {
    const PreservingStructure& s = *v.preserving_structure;
    json diags = json::array();
    for (const auto& dl : s.diagonals) {
      json re = json::array();
      json im = json::array();
      for (Eigen::Index i = 0; i < dl.size(); ++i) {
        re.push_back(dl(i).real());
        im.push_back(dl(i).imag());
      }
      diags.push_back({{"re", re}, {"im", im}});
    }
    structure["preserving"] = {{"permutation", s.permutation},
                               {"diagonals", diags},
                               {"completeness_residual", s.completeness_residual},
                               {"spot_check_change", s.spot_check_change}};
  }
  if (!structure.empty()) out["structure"] = structure;
  if (v.counterexample) out["counterexample"] = state_to_json(*v.counterexample);
  if (v.witness) {
    out["witness"] = {{"state", state_to_json(v.witness->state)},
                      {"uncertainty_change", v.witness->change}};
  }
  return out;
}

json ca_result_to_json(const CaResult& r) {
  json members = json::array();
  for (const auto& m : r.best_ensemble.members()) {
    json s = state_to_json(m.state);
    members.push_back({{"weight", m.weight}, {"state", s}});
  }
  return {{"measure", r.measure},
          {"value", r.value},
          {"value_is_lower_bound", true},
          {"uncertainty", r.uncertainty},
          {"gap_to_U", r.gap_to_u},
          {"ensemble_size", r.ensemble_size},
          {"restarts_used", r.restarts_used},
          {"converged", r.converged},
          {"best_ensemble", members}};
}

json sandwich_to_json(const SandwichReport& s) {
  return {{"measure", s.measure},
          {"coherence_measure", s.coherence_measure},
          {"coherence", s.coherence},
          {"assisted_lower_bound", s.assisted},
          {"uncertainty", s.uncertainty},
          {"lower_margin", s.lower_margin},
          {"upper_margin", s.upper_margin},
          {"ok", s.ok}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("invalid JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace qunc::io
