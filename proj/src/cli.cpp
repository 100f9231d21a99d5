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

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fagnano/classify.hpp"
#include "fagnano/dedal_map.hpp"
#include "fagnano/dynamics.hpp"
#include "fagnano/io.hpp"
#include "fagnano/outer_billiard.hpp"
#include "fagnano/spectral.hpp"
#include "fagnano/svg.hpp"

namespace fagnano {
namespace {

using nlohmann::json;
using Command = RunConfig::Command;
using Format = RunConfig::Format;

// Bad flags, unreadable files and malformed input all exit with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfCheckError : public std::domain_error {
 public:
  explicit SelfCheckError(double error)
      : std::domain_error("develop(dedal(P)) differs from P"), error_(error) {}
  double error() const { return error_; }

 private:
  double error_;
};

Polygon ReadPolygon(const std::string& path) {
  if (path.empty()) throw UsageError("an input polygon file is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return PolygonFromJson(doc);
}

void Emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + config.output_path);
  file << text;
  if (!file) throw UsageError("cannot write " + config.output_path);
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

json WitnessToJson(const SimilarityWitness& w) {
  return {{"shift_k", w.shift_k},
          {"orientation",
           w.orientation == Orientation::kSame ? "same" : "reversed"},
          {"ell", ComplexToJson(w.scale_ell)}};
}

Polygon DedalMember(const Polygon& p, const RunConfig& config) {
  if (p.size() % 2 == 1) return DedalOdd(p);
  return FamilyMember(DedalEven(p, config.tol), config.s);
}

std::string RunDedal(const RunConfig& config) {
  const Polygon p = ReadPolygon(config.input_path);
  const Polygon q = DedalMember(p, config);
  if (config.self_check) {
    const double error = MaxVertexError(Develop(q), p);
    if (error > ExistenceThreshold(p, config.tol)) throw SelfCheckError(error);
  }
  return Dump(PolygonToJson(q));
}

std::string RunIterate(const RunConfig& config) {
  const Polygon p = ReadPolygon(config.input_path);
  if (config.format == Format::kCsv) {
    std::optional<int> j;
    try {
      j = AttractorIndex(p, config.tol);
    } catch (const std::domain_error&) {
    }
    std::ostringstream csv;
    WriteTraceCsv(csv, Iterate(p, config.steps), j);
    return csv.str();
  }
  return Dump(AttractorReportToJson(DecayReport(p, config.steps, config.tol)));
}

std::string RunClassify(const RunConfig& config) {
  const Polygon p = ReadPolygon(config.input_path);
  json report = ClassificationToJson(p, config.tol);
  if (auto w = PredictedWitness(p, config.tol)) {
    report["witness"] = WitnessToJson(*w);
  }
  return Dump(report);
}

std::string RunOrbit(const RunConfig& config, std::ostream& out) {
  if (!config.z) throw UsageError("orbit needs a start point (--z-re/--z-im)");
  const Polygon p = ReadPolygon(config.input_path);
  const OrbitTrace trace =
      Orbit(p, *config.z, config.steps, config.tol, config.convention);
  if (config.format == Format::kCsv) {
    std::ostringstream csv;
    WriteOrbitCsv(csv, trace);
    if (!config.output_path.empty()) out << TerminationToJson(trace.termination).dump() << '\n';
    return csv.str();
  }
  json points = json::array();
  for (Complex c : trace.points) points.push_back(ComplexToJson(c));
  json doc = TerminationToJson(trace.termination);
  doc["points"] = points;
  doc["support_vertices"] = trace.support_vertices;
  return Dump(doc);
}

std::string RunFagnano(const RunConfig& config) {
  const Polygon p = ReadPolygon(config.input_path);
  const Polygon q = DedalMember(p, config);
  const bool found = VerifyFagnano(p, q, config.tol);
  json doc = {{"found", found}};
  if (found) doc["orbit"] = PolygonToJson(q);
  return Dump(doc);
}

std::string RunBgs(const RunConfig& config) {
  if (config.n < 3) throw UsageError("n must be at least 3");
  if (config.samples < 0) throw UsageError("samples must be nonnegative");
  if (config.max_m < 1) throw UsageError("max-m must be at least 1");
  const auto trials = ConvexificationEnsemble(config.n, config.samples,
                                              config.seed, config.max_m,
                                              config.tol);
  std::map<int, int> histogram;
  int converged = 0;
  int violations = 0;
  for (const ConvexificationTrial& t : trials) {
    violations += t.absorbing_violations;
    if (!t.index) continue;
    ++converged;
    ++histogram[*t.index];
  }
  json hist = json::array();
  for (const auto& [m, count] : histogram) hist.push_back({m, count});
  return Dump({{"n", config.n},
               {"samples", config.samples},
               {"seed", config.seed},
               {"max_m", config.max_m},
               {"converged", converged},
               {"fraction", config.samples > 0
                                ? double(converged) / config.samples
                                : 0.0},
               {"absorbing_violations", violations},
               {"histogram", hist}});
}

std::string RunRender(const RunConfig& config) {
  if (config.regular_family) {
    if (config.n < 3) throw UsageError("n must be at least 3");
    std::vector<SvgScene> panels;
    for (int j = 1; 2 * j < config.n; ++j) {
      panels.push_back({{{BasisVector(config.n, j), false, "", "#1f77b4"}},
                        {},
                        ""});
    }
    SvgScene scene = SideBySide(panels);
    scene.title = "regular " + std::to_string(config.n) + "-gons";
    return RenderSvg(scene);
  }
  const Polygon p = ReadPolygon(config.input_path);
  SvgScene scene;
  scene.polygons.push_back({p, true, "z", "#1f77b4"});
  try {
    scene.polygons.push_back({DedalMember(p, config), false, "w", "#2ca02c"});
  } catch (const NoDedalError&) {
    // nothing to overlay
  }
  if (config.z) {
    const OrbitTrace trace =
        Orbit(p, *config.z, config.steps, config.tol, config.convention);
    scene.points = trace.points;
  }
  return RenderSvg(scene);
}

std::string Dispatch(const RunConfig& config, std::ostream& out) {
  if (!(config.tol > 0)) throw UsageError("tol must be positive");
  if (config.steps < 0) throw UsageError("steps must be nonnegative");
  switch (config.command) {
    case Command::kDedal:
      return RunDedal(config);
    case Command::kDevelop:
      return Dump(PolygonToJson(Develop(ReadPolygon(config.input_path))));
    case Command::kIterate:
      return RunIterate(config);
    case Command::kClassify:
      return RunClassify(config);
    case Command::kSpectrum:
      return Dump(SpectralToJson(Decompose(ReadPolygon(config.input_path))));
    case Command::kOrbit:
      return RunOrbit(config, out);
    case Command::kFagnano:
      return RunFagnano(config);
    case Command::kBgs:
      return RunBgs(config);
    case Command::kRender:
      return RunRender(config);
  }
  throw UsageError("unknown command");
}

void ReportError(std::ostream& err, json doc) { err << doc.dump() << '\n'; }

}  // namespace

std::optional<RunConfig::Command> ParseCommand(const std::string& name) {
  static const std::map<std::string, Command> kCommands = {
      {"dedal", Command::kDedal},       {"develop", Command::kDevelop},
      {"iterate", Command::kIterate},   {"classify", Command::kClassify},
      {"spectrum", Command::kSpectrum}, {"orbit", Command::kOrbit},
      {"fagnano", Command::kFagnano},   {"bgs", Command::kBgs},
      {"render", Command::kRender}};
  const auto it = kCommands.find(name);
  if (it == kCommands.end()) return std::nullopt;
  return it->second;
}

std::optional<RunConfig::Format> ParseFormat(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "svg") return Format::kSvg;
  return std::nullopt;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Emit(config, out, Dispatch(config, out));
    return kExitOk;
  } catch (const NoDedalError& e) {
    ReportError(err, {{"error", "no_dedal"},
                      {"message", e.what()},
                      {"defect", ComplexToJson(e.defect())}});
    return kExitDomainError;
  } catch (const SelfCheckError& e) {
    ReportError(err, {{"error", "self_check_failed"},
                      {"message", e.what()},
                      {"max_vertex_error", e.error()}});
    return kExitDomainError;
  } catch (const SingularPointError& e) {
    ReportError(err, {{"error", "singular_point"},
                      {"message", e.what()},
                      {"side_index", e.side_index()}});
    return kExitDomainError;
  } catch (const ParseError& e) {
    ReportError(err, {{"error", "parse"}, {"message", e.what()}});
    return kExitIoError;
  } catch (const UsageError& e) {
    ReportError(err, {{"error", "usage"}, {"message", e.what()}});
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    ReportError(err, {{"error", "usage"}, {"message", e.what()}});
    return kExitIoError;
  } catch (const std::logic_error& e) {
    // domain_error and out_of_range land here
    ReportError(err, {{"error", "domain"}, {"message", e.what()}});
    return kExitDomainError;
  } catch (const std::exception& e) {
    ReportError(err, {{"error", "internal"}, {"message", e.what()}});
    return kExitDomainError;
  }
}

}  // namespace fagnano
