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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace qunc::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qunc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
  const fs::path dir = QUNC_TEST_TMPDIR;
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& body) {
  const fs::path p = tmp(name);
  std::ofstream(p) << body;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Minimal RFC-4180 reader: no quoted fields are ever emitted, CRLF line ends.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find("\r\n", pos);
    EXPECT_NE(end, std::string::npos) << "record without CRLF";
    if (end == std::string::npos) break;
    std::vector<std::string> fields;
    std::stringstream line(text.substr(pos, end - pos));
    std::string cell;
    while (std::getline(line, cell, ',')) fields.push_back(cell);
    rows.push_back(fields);
    pos = end + 2;
  }
  return rows;
}

const char* kPlus = R"({"dim": 2, "re": [0.7071067811865476, 0.7071067811865476]})";
const char* kZero = R"({"dim": 2, "re": [[1, 0], [0, 0]]})";
const char* kThird = R"({"dim": 3, "re": [[0.3333333333333333, 0, 0], [0, 0.3333333333333333, 0], [0, 0, 0.3333333333333334]]})";

std::map<std::string, double> totals(const json& reports) {
  std::map<std::string, double> t;
  for (const auto& r : reports) t[r["measure"].get<std::string>()] = r["total"].get<double>();
  return t;
}

TEST(CliMeasureTest, PlusStateTotals) {
  const Outcome o = run_cli({"measure", "--state", write_file("plus.json", kPlus)});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json reports = json::parse(o.out);
  ASSERT_EQ(reports.size(), 4u);  // var twice, one per decomposition
  const auto t = totals(reports);
  EXPECT_NEAR(t.at("var"), 0.5, 1e-12);
  EXPECT_NEAR(t.at("entropy"), 1.0, 1e-12);
  EXPECT_NEAR(t.at("fidelity"), 0.5, 1e-12);
  EXPECT_EQ(reports[0]["meta"]["decomposition"], "skew");
  EXPECT_EQ(reports[1]["meta"]["decomposition"], "linear_entropy");
}

TEST(CliMeasureTest, CertainStateAllZero) {
  const Outcome o = run_cli({"measure", "--state", write_file("zero.json", kZero)});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  for (const auto& r : json::parse(o.out)) EXPECT_EQ(r["total"].get<double>(), 0.0);
}

TEST(CliMeasureTest, MaximallyMixedQutritFidelity) {
  const Outcome o = run_cli(
      {"measure", "--state", write_file("third.json", kThird), "--measures", "fidelity"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json reports = json::parse(o.out);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_NEAR(reports[0]["total"].get<double>(), 2.0 / 3.0, 1e-12);
}

TEST(CliMeasureTest, ErrorsExitTwo) {
  const std::string bad = write_file("bad.json", R"({"dim": 2, "re": [[0.6, 0], [0, 0.6]]})");
  Outcome o = run_cli({"measure", "--state", bad});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("trace"), std::string::npos);
  o = run_cli({"measure", "--state", write_file("plus.json", kPlus), "--measures", "bogus"});
  EXPECT_EQ(o.code, kExitUsage);
  o = run_cli({"measure", "--state", tmp("missing.json").string()});
  EXPECT_EQ(o.code, kExitUsage);
  o = run_cli({"measure", "--state", write_file("junk.json", "{not json")});
  EXPECT_EQ(o.code, kExitUsage);
  o = run_cli({});
  EXPECT_EQ(o.code, kExitUsage);
}

TEST(CliMeasureTest, ToleranceFromEnvironment) {
  // trace off by 1e-6: rejected by default, accepted with a looser tolerance
  const std::string near = write_file(
      "near.json", R"({"dim": 2, "re": [[0.500001, 0], [0, 0.5]]})");
  EXPECT_EQ(run_cli({"measure", "--state", near}).code, kExitUsage);
  ::setenv("UNCERT_TOL", "1e-5", 1);
  EXPECT_EQ(run_cli({"measure", "--state", near}).code, kExitOk);
  ::setenv("UNCERT_TOL", "abc", 1);
  EXPECT_EQ(run_cli({"measure", "--state", near}).code, kExitUsage);
  ::unsetenv("UNCERT_TOL");
}

TEST(CliVerifyTest, Verdicts) {
  const std::string perm = write_file(
      "perm.json", R"({"dim": 3, "kraus": [{"re": [[0, 0, 1], [1, 0, 0], [0, 1, 0]]}]})");
  Outcome o = run_cli({"verify-channel", "--kraus", perm, "--check", "certain"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_TRUE(json::parse(o.out)["is_certain"].get<bool>());

  const std::string deph = write_file(
      "deph.json", R"({"dim": 2, "kraus": [{"re": [[1, 0], [0, 0]]}, {"re": [[0, 0], [0, 1]]}]})");
  o = run_cli({"verify-channel", "--kraus", deph, "--check", "preserving"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_TRUE(json::parse(o.out)["is_uncertainty_preserving"].get<bool>());

  const std::string had = write_file(
      "had.json",
      R"({"dim": 2, "kraus": [{"re": [[0.7071067811865476, 0.7071067811865476], [0.7071067811865476, -0.7071067811865476]]}]})");
  o = run_cli({"verify-channel", "--kraus", had});
  EXPECT_EQ(o.code, kExitNegativeVerdict);
  const json v = json::parse(o.out);
  EXPECT_FALSE(v["is_certain"].get<bool>());
  EXPECT_TRUE(v.contains("counterexample"));
}

TEST(CliVerifyTest, IncompleteChannelExitsTwoNamingResidual) {
  const std::string bad = write_file("incomplete.json", R"({"dim": 2, "kraus": [{"re": [[1, 0], [0, 0.5]]}]})");
  const Outcome o = run_cli({"verify-channel", "--kraus", bad});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("0.75"), std::string::npos) << o.err;
  EXPECT_EQ(run_cli({"verify-channel", "--kraus", bad, "--check", "maybe"}).code, kExitUsage);
}

TEST(CliCaTest, PureStateHasNoGapAndRunsAreDeterministic) {
  const std::string plus = write_file("plus.json", kPlus);
  const Outcome a = run_cli({"ca", "--state", plus, "--seed", "3"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const json doc = json::parse(a.out);
  EXPECT_LE(std::abs(doc["gap_to_U"].get<double>()), 1e-9);
  EXPECT_TRUE(doc["value_is_lower_bound"].get<bool>());
  EXPECT_TRUE(doc["sandwich"]["ok"].get<bool>());

  const std::string mixed = write_file(
      "qubit.json", R"({"dim": 2, "re": [[0.7, 0.1], [0.1, 0.3]], "im": [[0, 0.2], [-0.2, 0]]})");
  const Outcome b1 = run_cli({"ca", "--state", mixed, "--measure", "ent", "--seed", "9"});
  const Outcome b2 = run_cli({"ca", "--state", mixed, "--measure", "ent", "--seed", "9"});
  ASSERT_EQ(b1.code, kExitOk) << b1.err;
  EXPECT_EQ(b1.out, b2.out);
  EXPECT_LE(json::parse(b1.out)["gap_to_U"].get<double>(), 1e-3);
  EXPECT_EQ(run_cli({"ca", "--state", mixed, "--restarts", "0"}).code, kExitUsage);
}

TEST(CliSweepTest, RowsParseAndRepeatByteForByte) {
  const fs::path a = tmp("sweep_a.csv");
  const fs::path b = tmp("sweep_b.csv");
  const std::vector<std::string> base = {"sweep", "--dim", "2", "--samples", "10", "--seed", "17",
                                         "--restarts", "8", "--out"};
  std::vector<std::string> args = base;
  args.push_back(a.string());
  ASSERT_EQ(run_cli(args).code, kExitOk);
  args.back() = b.string();
  ASSERT_EQ(run_cli(args).code, kExitOk);
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));

  const auto rows = parse_csv(text);
  ASSERT_EQ(rows.size(), 31u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"state_id", "measure", "total", "quantum",
                                               "classical", "ca_lower", "sandwich_ok"}));
  std::map<std::string, int> per_measure;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), 7u);
    ++per_measure[rows[i][1]];
    EXPECT_EQ(rows[i][6], "true");
    const double total = std::stod(rows[i][2]);
    EXPECT_NEAR(total, std::stod(rows[i][3]) + std::stod(rows[i][4]), 1e-8);
  }
  EXPECT_EQ(per_measure.size(), 3u);
  for (const auto& [_, n] : per_measure) EXPECT_EQ(n, 10);
}

TEST(CliSweepTest, UsageErrors) {
  const std::string out = tmp("never.csv").string();
  EXPECT_EQ(run_cli({"sweep", "--samples", "0", "--out", out}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--dim", "9", "--samples", "1", "--out", out}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sweep", "--samples", "1", "--out", "/nonexistent/dir/x.csv"}).code, kExitUsage);
}

TEST(CliBlochTest, LandmarkRows) {
  const fs::path p = tmp("bloch.csv");
  ASSERT_EQ(run_cli({"bloch-disc", "--resolution", "3", "--out", p.string()}).code, kExitOk);
  const auto rows = parse_csv(slurp(p));
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0].size(), 8u);
  std::map<std::string, std::vector<std::string>> by_point;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    by_point[rows[i][0] + "," + rows[i][1] + "," + rows[i][2]] = rows[i];
  }
  // grid {-1, 0, 1}^3 inside the ball: the center plus six axis points
  EXPECT_EQ(by_point.size(), 7u);
  const auto& center = by_point.at("0,0,0");
  EXPECT_EQ(center[6], "true");
  EXPECT_EQ(center[7], "false");
  const auto& px = by_point.at("1,0,0");
  EXPECT_EQ(px[6], "true");
  EXPECT_EQ(px[7], "true");
  EXPECT_EQ(px[3], "0.5");
  EXPECT_EQ(px[4], "1");
  const auto& pz = by_point.at("0,0,1");
  EXPECT_EQ(pz[3], "0");
  EXPECT_EQ(pz[4], "0");
  EXPECT_EQ(pz[5], "0");
  EXPECT_EQ(pz[6], "false");

  EXPECT_EQ(run_cli({"bloch-disc", "--resolution", "1", "--out", p.string()}).code, kExitUsage);
}

TEST(CliBlochTest, MaxUncertainSetIsTheEquatorialDisc) {
  for (const BlochRow& r : bloch_disc_rows(21)) {
    EXPECT_EQ(r.max_uncertain, std::abs(r.z) <= 1e-9) << r.x << "," << r.y << "," << r.z;
  }
}

}  // namespace
}  // namespace qunc::cli
