// Copyright 2026 The Fagnano Authors
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

#include "fagnano/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fagnano/dedal_map.hpp"
#include "fagnano/io.hpp"
#include "fagnano/svg.hpp"
#include "test_util.hpp"

namespace fagnano {
namespace {

using nlohmann::json;
using Command = RunConfig::Command;
using Format = RunConfig::Format;
using testing::kI;

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fagnano_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string WriteFile(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string WritePolygon(const std::string& name, const Polygon& p) {
    return WriteFile(name, PolygonToJson(p).dump());
  }

  int RunCommand(RunConfig config) {
    out_.str("");
    err_.str("");
    return fagnano::Run(config, out_, err_);
  }

  static RunConfig Config(Command command, const std::string& input) {
    RunConfig config;
    config.command = command;
    config.input_path = input;
    return config;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

int Count(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

const Polygon kTriangle{0.0, 1.0, kI};
const Polygon kSquare{0.0, 1.0, 1.0 + kI, kI};

TEST(ParseTest, CommandsAndFormats) {
  EXPECT_EQ(ParseCommand("dedal"), Command::kDedal);
  EXPECT_EQ(ParseCommand("bgs"), Command::kBgs);
  EXPECT_FALSE(ParseCommand("walk").has_value());
  EXPECT_EQ(ParseFormat("svg"), Format::kSvg);
  EXPECT_FALSE(ParseFormat("xml").has_value());
}

TEST(IoTest, PolygonJson) {
  const json doc = PolygonToJson(kTriangle);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(PolygonFromJson(doc), kTriangle);
  EXPECT_THROW(PolygonFromJson(json::parse(R"({"n": 2, "vertices": [[0,0],[1,0]]})")),
               ParseError);
  EXPECT_THROW(PolygonFromJson(json::parse(R"({"n": 4, "vertices": [[0,0],[1,0],[0,1]]})")),
               ParseError);
  EXPECT_THROW(PolygonFromJson(json::parse(R"({"n": 3, "vertices": [[0,0],[1],[0,1]]})")),
               ParseError);
  EXPECT_THROW(PolygonFromJson(json::parse("[1, 2, 3]")), ParseError);
}

TEST(IoTest, SpectralJsonRoundTrip) {
  Rng rng(61);
  const Polygon p = testing::RandomPolygon(rng, 7);
  const SpectralCoefficients c = Decompose(p);
  const json doc = json::parse(SpectralToJson(c).dump());
  EXPECT_EQ(SpectralFromJson(doc).coeffs, c.coeffs);
}

TEST(IoTest, FormatDoubleRoundTrips) {
  Rng rng(62);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = Uniform(rng, -1e6, 1e6) * std::pow(10.0, trial % 40 - 20);
    EXPECT_EQ(std::stod(FormatDouble(x)), x);
  }
  EXPECT_EQ(FormatDouble(0.5), "0.5");
}

TEST(IoTest, TraceAndOrbitCsv) {
  std::ostringstream trace_csv;
  WriteTraceCsv(trace_csv, Iterate(kTriangle, 2), 1);
  const auto lines = Lines(trace_csv.str());
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "step,x1,y1,x2,y2,x3,y3,class_distance");
  EXPECT_EQ(lines[1].substr(0, 2), "0,");

  std::ostringstream orbit_csv;
  WriteOrbitCsv(orbit_csv, Orbit(kSquare, Complex(2.3, 0.7), 20));
  const auto rows = Lines(orbit_csv.str());
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0], "step,re,im,support_vertex_index");
  EXPECT_EQ(rows.back().substr(rows.back().rfind(',')), ",0");
}

TEST_F(CliTest, DedalAndDevelopRoundTrip) {
  RunConfig config = Config(Command::kDedal, WritePolygon("p.json", kTriangle));
  config.self_check = true;
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  const Polygon q = PolygonFromJson(json::parse(out_.str()));
  EXPECT_LT(MaxVertexError(q, Polygon{Complex(-1, 1), Complex(1, -1),
                                      Complex(1, 1)}),
            1e-15);

  const std::string q_path = WriteFile("q.json", out_.str());
  ASSERT_EQ(RunCommand(Config(Command::kDevelop, q_path)), kExitOk);
  EXPECT_LT(MaxVertexError(PolygonFromJson(json::parse(out_.str())), kTriangle),
            1e-15);
}

TEST_F(CliTest, DedalEvenFamilyMember) {
  RunConfig config = Config(Command::kDedal, WritePolygon("p.json", kSquare));
  config.s = Complex(2.0, -3.0);
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  const Polygon member = PolygonFromJson(json::parse(out_.str()));
  EXPECT_LT(MaxVertexError(member, FamilyMember(DedalEven(kSquare), config.s)),
            1e-15);
  EXPECT_LT(MaxVertexError(Develop(member), kSquare), 1e-12);
}

TEST_F(CliTest, NoDedalReportsDefect) {
  const std::string path =
      WritePolygon("p.json", Polygon{0.0, 1.0, 1.0 + kI, 2.0 * kI});
  EXPECT_EQ(RunCommand(Config(Command::kDedal, path)), kExitDomainError);
  EXPECT_TRUE(out_.str().empty());
  const json err = json::parse(err_.str());
  EXPECT_EQ(err["error"], "no_dedal");
  EXPECT_EQ(err["defect"], json::array({0.0, -1.0}));
}

TEST_F(CliTest, InputErrorsExitWithTwo) {
  EXPECT_EQ(RunCommand(Config(Command::kDedal, (dir_ / "missing.json").string())),
            kExitIoError);
  EXPECT_EQ(json::parse(err_.str())["error"], "usage");

  const std::string small = WriteFile("small.json", R"({"n": 2, "vertices": [[0,0],[1,0]]})");
  EXPECT_EQ(RunCommand(Config(Command::kDedal, small)), kExitIoError);
  EXPECT_EQ(json::parse(err_.str())["error"], "parse");

  const std::string broken = WriteFile("broken.json", "{\"n\": 3, \"vert");
  EXPECT_EQ(RunCommand(Config(Command::kSpectrum, broken)), kExitIoError);
  EXPECT_EQ(json::parse(err_.str())["error"], "parse");

  RunConfig bad_tol = Config(Command::kDedal, WritePolygon("p.json", kTriangle));
  bad_tol.tol = 0.0;
  EXPECT_EQ(RunCommand(bad_tol), kExitIoError);
}

TEST_F(CliTest, IterateCsvAndJson) {
  Rng rng(63);
  const std::string path = WritePolygon("p.json", testing::RandomPolygon(rng, 5));
  RunConfig config = Config(Command::kIterate, path);
  config.format = Format::kCsv;
  config.steps = 12;
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  const auto lines = Lines(out_.str());
  ASSERT_EQ(lines.size(), 14u);
  EXPECT_EQ(lines[0].substr(0, 9), "step,x1,y");

  config.format = Format::kJson;
  config.steps = 40;
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  const json report = json::parse(out_.str());
  EXPECT_EQ(report["j"], 1);
  EXPECT_NEAR(report["predicted_rate"].get<double>(), 0.381966, 1e-6);
  EXPECT_EQ(report["distances"].size(), 41u);

  config.steps = 5;
  EXPECT_EQ(RunCommand(config), kExitIoError);
}

TEST_F(CliTest, ClassifyAndSpectrum) {
  const std::string path = WritePolygon("p.json", kTriangle);
  ASSERT_EQ(RunCommand(Config(Command::kClassify, path)), kExitOk) << err_.str();
  const json report = json::parse(out_.str());
  EXPECT_EQ(report["case"], "odd_affinely_regular");
  EXPECT_EQ(report["witness"]["shift_k"], 3);
  EXPECT_EQ(report["witness"]["orientation"], "same");

  Rng rng(64);
  const std::string generic = WritePolygon("g.json", testing::RandomPolygon(rng, 5));
  ASSERT_EQ(RunCommand(Config(Command::kClassify, generic)), kExitOk);
  EXPECT_EQ(json::parse(out_.str())["case"], "not_in_list");
  EXPECT_FALSE(json::parse(out_.str()).contains("witness"));

  ASSERT_EQ(RunCommand(Config(Command::kSpectrum, path)), kExitOk);
  const SpectralCoefficients c = SpectralFromJson(json::parse(out_.str()));
  EXPECT_LT(MaxVertexError(Reconstruct(c), kTriangle), 1e-15);

  const std::string point = WritePolygon("pt.json", Polygon::Constant(3, 1.0));
  EXPECT_EQ(RunCommand(Config(Command::kClassify, point)), kExitDomainError);
}

TEST_F(CliTest, OrbitOutputs) {
  RunConfig config = Config(Command::kOrbit, WritePolygon("sq.json", kSquare));
  config.steps = 50;
  EXPECT_EQ(RunCommand(config), kExitIoError);

  config.z = Complex(2.3, 0.7);
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  json doc = json::parse(out_.str());
  EXPECT_EQ(doc["termination"], "period_detected");
  EXPECT_EQ(doc["period"], 8);
  EXPECT_EQ(doc["points"].size(), 9u);

  config.format = Format::kCsv;
  config.output_path = (dir_ / "orbit.csv").string();
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  EXPECT_EQ(json::parse(out_.str())["period"], 8);
  std::ifstream csv(config.output_path);
  std::stringstream text;
  text << csv.rdbuf();
  EXPECT_EQ(Lines(text.str()).size(), 10u);

  config.output_path.clear();
  config.format = Format::kJson;
  config.z = Complex(2.0, 0.0);
  ASSERT_EQ(RunCommand(config), kExitOk);
  doc = json::parse(out_.str());
  EXPECT_EQ(doc["termination"], "singular_hit");
  EXPECT_EQ(doc["step"], 0);

  config.z = Complex(0.5, 0.5);
  EXPECT_EQ(RunCommand(config), kExitDomainError);
}

TEST_F(CliTest, FagnanoSearch) {
  ASSERT_EQ(RunCommand(Config(Command::kFagnano, WritePolygon("t.json", kTriangle))),
            kExitOk);
  json doc = json::parse(out_.str());
  EXPECT_TRUE(doc["found"]);
  EXPECT_EQ(doc["orbit"]["n"], 3);

  const Polygon pentagon{2.0, Complex(4, 2), Complex(3, 2.5), Complex(1, 2.5),
                         Complex(0, 2)};
  ASSERT_EQ(RunCommand(Config(Command::kFagnano, WritePolygon("p.json", pentagon))),
            kExitOk);
  doc = json::parse(out_.str());
  EXPECT_FALSE(doc["found"]);
  EXPECT_FALSE(doc.contains("orbit"));
}

TEST_F(CliTest, BgsIsDeterministic) {
  RunConfig config = Config(Command::kBgs, "");
  config.samples = 100;
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(RunCommand(config), kExitOk);
  EXPECT_EQ(out_.str(), first);

  const json doc = json::parse(first);
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["absorbing_violations"], 0);
  EXPECT_GE(doc["fraction"].get<double>(), 0.99);
  int total = 0;
  for (const auto& bin : doc["histogram"]) total += bin[1].get<int>();
  EXPECT_EQ(total, doc["converged"].get<int>());

  config.seed = 43;
  ASSERT_EQ(RunCommand(config), kExitOk);
  EXPECT_NE(out_.str(), first);

  config.n = 2;
  EXPECT_EQ(RunCommand(config), kExitIoError);
}

TEST_F(CliTest, RenderSvg) {
  RunConfig config = Config(Command::kRender, WritePolygon("t.json", kTriangle));
  config.format = Format::kSvg;
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  std::string svg = out_.str();
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
  EXPECT_EQ(Count(svg, "<polygon"), 2);
  EXPECT_EQ(Count(svg, "<text"), 6);
  EXPECT_EQ(Count(svg, "</svg>"), 1);

  config.input_path = WritePolygon("sq.json", kSquare);
  config.z = Complex(2.3, 0.7);
  config.steps = 50;
  ASSERT_EQ(RunCommand(config), kExitOk) << err_.str();
  svg = out_.str();
  EXPECT_EQ(Count(svg, "<circle"),
            static_cast<int>(Orbit(kSquare, *config.z, 50).points.size()));

  RunConfig family = Config(Command::kRender, "");
  family.regular_family = true;
  family.n = 7;
  ASSERT_EQ(RunCommand(family), kExitOk) << err_.str();
  EXPECT_EQ(Count(out_.str(), "<polygon"), 3);
}

TEST_F(CliTest, WritesToOutputPath) {
  RunConfig config = Config(Command::kDevelop, WritePolygon("t.json", kTriangle));
  config.output_path = (dir_ / "out.json").string();
  ASSERT_EQ(RunCommand(config), kExitOk);
  EXPECT_TRUE(out_.str().empty());
  std::ifstream in(config.output_path);
  EXPECT_EQ(PolygonFromJson(json::parse(in)), Develop(kTriangle));

  config.output_path = (dir_ / "no_such_dir" / "out.json").string();
  EXPECT_EQ(RunCommand(config), kExitIoError);
}

}  // namespace
}  // namespace fagnano
