//
// Copyright 2026 The rumap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixture.hpp"
#include "gtest/gtest.h"
#include "xml_check.hpp"

namespace rumap::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rumap");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Study(std::vector<std::string> tail) {
  std::vector<std::string> args = {"--config", fixture::path("study.json"), "--data", fixture::path("measures.csv")};
  args.insert(args.end(), tail.begin(), tail.end());
  return args;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rumap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& content) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, ValidatePrintsSummary) {
  const auto r = Invoke(Study({"validate"}));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("10 measures (5 risk, 5 utility)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("9 approaches"), std::string::npos);
  EXPECT_NE(r.out.find("ok"), std::string::npos);
}

TEST_F(CliTest, SubcommandsEmitJson) {
  for (const char* cmd : {"normalize", "pareto", "composite", "pca", "profiles"}) {
    const auto r = Invoke(Study({cmd}));
    ASSERT_EQ(r.code, 0) << cmd << ": " << r.err;
    EXPECT_TRUE(Json::accept(r.out)) << cmd;
  }
  const auto p = Json::parse(Invoke(Study({"pareto"})).out);
  EXPECT_FALSE(p["pareto_full"].empty());
  const auto n = Json::parse(Invoke(Study({"normalize"})).out);
  EXPECT_EQ(n["rows"].size(), 9u);
}

TEST_F(CliTest, PlotEachKindIsStandalone) {
  for (const char* k : {"heatmap", "dotplot", "composite_ru", "rays", "pcp", "origami", "biplot", "sdod", "blockwise"}) {
    const auto r = Invoke(Study({"plot", k}));
    ASSERT_EQ(r.code, 0) << k << ": " << r.err;
    EXPECT_EQ(r.out.rfind("<?xml", 0), 0u) << k;
    EXPECT_NE(r.out.find("</svg>"), std::string::npos) << k;
  }
  EXPECT_EQ(Invoke(Study({"plot", "pie"})).code, 1);
}

TEST_F(CliTest, HelpAndVersion) {
  EXPECT_EQ(Invoke({"--help"}).code, 0);
  const auto v = Invoke({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(kVersion), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Invoke(Study({"validate", "--no-such-flag"})).code, 1);
  EXPECT_EQ(Invoke({}).code, 1);
  EXPECT_EQ(Invoke(Study({"validate", "--linkage", "ward"})).code, 1);
  const auto missing = Invoke({"--config", (dir_ / "nope.json").string(), "--data", fixture::path("measures.csv"), "validate"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("--config"), std::string::npos) << missing.err;
  EXPECT_NE(missing.err.find("nope.json"), std::string::npos) << missing.err;
  const auto no_data = Invoke({"--config", fixture::path("study.json"), "validate"});
  EXPECT_EQ(no_data.code, 1);
  EXPECT_NE(no_data.err.find("--data"), std::string::npos);
}

TEST_F(CliTest, ConfigDataMismatchIsValidationError) {
  const auto csv = Write("short.csv", "approach,RepU,DiSCO\noriginal,1,2\nx,0,1\n");
  const auto r = Invoke({"--config", fixture::path("study.json"), "--data", csv, "validate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  const auto bad_json = Write("bad.json", "{\"measures\": [}");
  EXPECT_EQ(Invoke({"--config", bad_json, "--data", fixture::path("measures.csv"), "validate"}).code, 1);
  const auto r_aux = Invoke(Study({"--r-aux", "1.5", "profiles"}));
  EXPECT_EQ(r_aux.code, 1);
  EXPECT_NE(r_aux.err.find("r_aux"), std::string::npos) << r_aux.err;
}

TEST_F(CliTest, AnalysisFailureExitsTwo) {
  const auto cfg = Write("cfg.json", R"({"measures": [
    {"id": "r1", "block": "risk", "direction": "lower"},
    {"id": "r2", "block": "risk", "direction": "lower"},
    {"id": "u1", "block": "utility", "direction": "higher"},
    {"id": "u2", "block": "utility", "direction": "higher"}], "reference": "original"})");
  const auto csv = Write("d.csv", "approach,r1,r2,u1,u2\noriginal,1,1,1,1\na,0.2,0.5,0.4,0.1\nb,0.5,0.1,0.9,0.6\n");
  EXPECT_EQ(Invoke({"--config", cfg, "--data", csv, "pca"}).code, 0);
  const auto r = Invoke({"--config", cfg, "--data", csv, "--robust", "pca"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("analysis error"), std::string::npos) << r.err;
}

TEST_F(CliTest, ReportWritesArtifactsAndManifest) {
  const auto out = dir_ / "r1";
  const auto r = Invoke(Study({"--thresholds", fixture::path("thresholds.json"), "--out", out.string(), "report"}));
  ASSERT_EQ(r.code, 0) << r.err;
  std::set<std::string> svg, json;
  for (const auto& e : fs::directory_iterator(out)) {
    const auto name = e.path().filename().string();
    if (e.path().extension() == ".svg") svg.insert(name);
    if (e.path().extension() == ".json" && name != "manifest.json") json.insert(name);
  }
  EXPECT_EQ(svg.size(), 8u);
  EXPECT_EQ(json.size(), 5u);
  ASSERT_TRUE(fs::exists(out / "manifest.json"));
  const auto m = Json::parse(Slurp(out / "manifest.json"));
  EXPECT_EQ(m["artifacts"].size(), 13u);
  for (const auto& a : m["artifacts"]) {
    const auto content = Slurp(out / a["name"].get<std::string>());
    EXPECT_EQ(a["bytes"].get<std::size_t>(), content.size());
    EXPECT_EQ(a["sha256"].get<std::string>(), sha256_hex(content));
  }
  EXPECT_EQ(m["inputs"]["config_sha256"], sha256_hex(fixture::read("study.json")));
  EXPECT_TRUE(m["inputs"].contains("thresholds_sha256"));
  for (const auto& name : svg) {
    const auto s = Slurp(out / name);
    EXPECT_EQ(xml::svg_error(s), "") << name;
  }
}

TEST_F(CliTest, RepeatedReportsAreByteIdentical) {
  const auto a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(Invoke(Study({"--out", a.string(), "report"})).code, 0);
  ASSERT_EQ(Invoke(Study({"--out", b.string(), "report"})).code, 0);
  EXPECT_EQ(Slurp(a / "manifest.json"), Slurp(b / "manifest.json"));
  for (const auto& e : fs::directory_iterator(a))
    EXPECT_EQ(Slurp(e.path()), Slurp(b / e.path().filename())) << e.path().filename();
}

TEST_F(CliTest, FlagsOverrideConfig) {
  const auto base = Json::parse(Invoke(Study({"profiles"})).out);
  const auto over = Json::parse(Invoke(Study({"--r-aux", "0.3", "profiles"})).out);
  EXPECT_DOUBLE_EQ(base["r_aux"].get<double>(), 0.1);
  EXPECT_DOUBLE_EQ(over["r_aux"].get<double>(), 0.3);
  const auto lk = Json::parse(Invoke(Study({"--linkage", "single", "normalize"})).out);
  EXPECT_EQ(lk["heatmap"]["linkage"], "single");
}

TEST_F(CliTest, OutWritesSingleArtifact) {
  const auto r = Invoke(Study({"--out", dir_.string(), "plot", "biplot"}));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "biplot.svg"));
  EXPECT_NE(r.out.find("wrote"), std::string::npos);
}

}  // namespace
}  // namespace rumap::cli
