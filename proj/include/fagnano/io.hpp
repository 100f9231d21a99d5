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

#ifndef FAGNANO_IO_HPP_
#define FAGNANO_IO_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fagnano/classify.hpp"
#include "fagnano/dynamics.hpp"
#include "fagnano/outer_billiard.hpp"
#include "fagnano/polygon.hpp"
#include "fagnano/spectral.hpp"

namespace fagnano {

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json ComplexToJson(Complex c);

/// {"n": int, "vertices": [[re, im], ...]}
nlohmann::json PolygonToJson(const Polygon& p);
/// Throws ParseError on a malformed document, a count mismatch or n < 3.
Polygon PolygonFromJson(const nlohmann::json& j);

/// {"n": int, "coeffs": [[re, im], ...]}, indices 0..n-1.
nlohmann::json SpectralToJson(const SpectralCoefficients& c);
SpectralCoefficients SpectralFromJson(const nlohmann::json& j);

/// {"kind", "j"?, "k"?, "ell"?, "case", "sign"?} for a polygon.
nlohmann::json ClassificationToJson(const Polygon& p, double tol);

/// {"j", "predicted_rate", "fitted_rate", "distances"}
nlohmann::json AttractorReportToJson(const AttractorReport& r);

/// Header `step,x1,y1,...,xn,yn,class_distance`. The distance is to Â_j
/// with j the attractor index of the first polygon, blank when undefined.
void WriteTraceCsv(std::ostream& out, const IterationTrace& trace,
                   std::optional<int> attractor_j);

/// Header `step,re,im,support_vertex_index`; the last point has index 0.
void WriteOrbitCsv(std::ostream& out, const OrbitTrace& trace);

nlohmann::json TerminationToJson(const OrbitTermination& t);

/// Shortest round-trip decimal form of a double.
std::string FormatDouble(double x);

}  // namespace fagnano

#endif  // FAGNANO_IO_HPP_
