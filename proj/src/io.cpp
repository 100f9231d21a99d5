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

#include "fagnano/io.hpp"

#include <charconv>
#include <ostream>

namespace fagnano {

using nlohmann::json;

std::string FormatDouble(double x) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

json ComplexToJson(Complex c) { return json::array({c.real(), c.imag()}); }

namespace {

Complex ComplexFromJson(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ParseError("expected a [re, im] pair, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::VectorXcd ComplexListFromJson(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains(key)) {
    throw ParseError(std::string("expected an object with \"n\" and \"") +
                     key + "\"");
  }
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an int");
  const auto n = doc["n"].get<long long>();
  const json& list = doc[key];
  if (!list.is_array()) throw ParseError(std::string(key) + " must be a list");
  if (static_cast<long long>(list.size()) != n) {
    throw ParseError("\"n\" is " + std::to_string(n) + " but " +
                     std::to_string(list.size()) + " entries were given");
  }
  if (n < 3) throw ParseError("n must be at least 3, got " + std::to_string(n));
  Eigen::VectorXcd v(n);
  for (long long i = 0; i < n; ++i) v[i] = ComplexFromJson(list[i]);
  return v;
}

}  // namespace

json PolygonToJson(const Polygon& p) {
  json vertices = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    vertices.push_back(ComplexToJson(p[i]));
  }
  return {{"n", p.size()}, {"vertices", vertices}};
}

Polygon PolygonFromJson(const json& j) {
  return Polygon(ComplexListFromJson(j, "vertices"));
}

json SpectralToJson(const SpectralCoefficients& c) {
  json coeffs = json::array();
  for (Eigen::Index i = 0; i < c.n(); ++i) coeffs.push_back(ComplexToJson(c[i]));
  return {{"n", c.n()}, {"coeffs", coeffs}};
}

SpectralCoefficients SpectralFromJson(const json& j) {
  return SpectralCoefficients{ComplexListFromJson(j, "coeffs")};
}

json ClassificationToJson(const Polygon& p, double tol) {
  const RegularityResult r = Regularity(p, tol);
  const Thm1Class cls = ClassifyThm1(p, tol);
  json out;
  switch (r.kind) {
    case RegularityResult::Kind::kRegular:
      out["kind"] = "regular";
      out["j"] = r.j;
      out["ell"] = ComplexToJson(r.ell);
      break;
    case RegularityResult::Kind::kAffinelyRegular:
      out["kind"] = "affinely_regular";
      out["j"] = r.j;
      break;
    case RegularityResult::Kind::kNone:
      out["kind"] = "none";
      break;
  }
  out["case"] = ToString(cls.kind);
  if (cls.kind == Thm1Class::Case::kEvenCaseII ||
      cls.kind == Thm1Class::Case::kEvenCaseIII) {
    out["k"] = cls.k;
  }
  if (cls.kind == Thm1Class::Case::kEvenCaseIII) out["sign"] = cls.sign;
  return out;
}

json AttractorReportToJson(const AttractorReport& r) {
  return {{"j", r.j},
          {"predicted_rate", r.predicted_rate},
          {"fitted_rate", r.fitted_rate},
          {"distances", r.distances}};
}

void WriteTraceCsv(std::ostream& out, const IterationTrace& trace,
                   std::optional<int> attractor_j) {
  const Eigen::Index n = trace.polygons.front().size();
  out << "step";
  for (Eigen::Index i = 1; i <= n; ++i) out << ",x" << i << ",y" << i;
  out << ",class_distance\n";
  for (std::size_t s = 0; s < trace.polygons.size(); ++s) {
    out << s;
    const Polygon& p = trace.polygons[s];
    for (Eigen::Index i = 0; i < n; ++i) {
      out << ',' << FormatDouble(p[i].real()) << ','
          << FormatDouble(p[i].imag());
    }
    out << ',';
    const auto& cls = trace.classes[s];
    if (cls && attractor_j) {
      try {
        out << FormatDouble(
            ClassDistance(*cls, TruncateToAttractor(*cls, *attractor_j)));
      } catch (const std::domain_error&) {
        // no component left in A_j; leave blank
      }
    }
    out << '\n';
  }
}

void WriteOrbitCsv(std::ostream& out, const OrbitTrace& trace) {
  out << "step,re,im,support_vertex_index\n";
  for (std::size_t s = 0; s < trace.points.size(); ++s) {
    const int v =
        s < trace.support_vertices.size() ? trace.support_vertices[s] : 0;
    out << s << ',' << FormatDouble(trace.points[s].real()) << ','
        << FormatDouble(trace.points[s].imag()) << ',' << v << '\n';
  }
}

json TerminationToJson(const OrbitTermination& t) {
  switch (t.kind) {
    case OrbitTermination::Kind::kStepCap:
      return {{"termination", "step_cap"}};
    case OrbitTermination::Kind::kSingularHit:
      return {{"termination", "singular_hit"},
              {"step", t.step},
              {"side_index", t.side_index}};
    case OrbitTermination::Kind::kPeriodDetected:
      return {{"termination", "period_detected"},
              {"period", t.period},
              {"start", t.start}};
  }
  return {};
}

}  // namespace fagnano
