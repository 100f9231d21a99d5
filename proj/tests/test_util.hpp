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

#ifndef FAGNANO_TESTS_TEST_UTIL_HPP_
#define FAGNANO_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>
#include <algorithm>

#include <Eigen/Dense>

#include "fagnano/polygon.hpp"
#include "fagnano/random.hpp"

namespace fagnano::testing {

inline constexpr Complex kI{0.0, 1.0};

inline Polygon RandomPolygon(Rng& rng, Eigen::Index n) {
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = UniformComplex(rng);
  return Polygon(std::move(v));
}

/// Removes the alternating-sum component so an even-n polygon has dedal
/// polygons: subtract (defect/n)·(1, -1, 1, ...).
inline Polygon ProjectToExistenceHyperplane(const Polygon& p) {
  const Eigen::Index n = p.size();
  Complex defect(0.0);
  for (Eigen::Index i = 0; i < n; ++i) defect += (i % 2 == 0) ? p[i] : -p[i];
  Eigen::VectorXcd v = p.vertices();
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i] -= (i % 2 == 0 ? 1.0 : -1.0) * defect / double(n);
  }
  return Polygon(std::move(v));
}

/// X_i built straight from exp(2πi·m·i/n), independent of the library.
inline Polygon OracleBasis(int n, int i) {
  Eigen::VectorXcd v(n);
  for (int m = 0; m < n; ++m) {
    v[m] = std::polar(1.0, 2.0 * std::numbers::pi * m * i / n);
  }
  return Polygon(std::move(v));
}

inline Complex OracleQ(int n, double power) {
  return std::polar(1.0, 2.0 * std::numbers::pi * power / n);
}

/// The developing map as an explicit n×n matrix (1/2 on the diagonal and on
/// the cyclic superdiagonal).
inline Eigen::MatrixXcd DevelopMatrix(int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 0.5;
    m(i, (i + 1) % n) = 0.5;
  }
  return m;
}

inline double Cross(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

/// Segment intersection by parametric solve; counts touching endpoints.
inline bool SegmentsIntersectOracle(Complex a, Complex b, Complex c,
                                    Complex d) {
  const Complex r = b - a;
  const Complex s = d - c;
  const double denom = Cross(r, s);
  if (std::abs(denom) < 1e-15) {
    // Parallel: intersect only if collinear and overlapping.
    if (std::abs(Cross(c - a, r)) > 1e-15) return false;
    const double rr = std::norm(r);
    const double t0 = (std::conj(r) * (c - a)).real() / rr;
    const double t1 = (std::conj(r) * (d - a)).real() / rr;
    return std::max(t0, t1) >= 0.0 && std::min(t0, t1) <= 1.0;
  }
  const double t = Cross(c - a, s) / denom;
  const double u = Cross(c - a, r) / denom;
  return t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0;
}

/// All vertex indices v (0-based) with every other vertex strictly left of
/// the ray z -> P[v]; assumes all vertices of P are extreme points.
inline std::vector<int> LeftOfRayCandidates(const Polygon& p, Complex z) {
  std::vector<int> out;
  for (Eigen::Index v = 0; v < p.size(); ++v) {
    bool ok = true;
    for (Eigen::Index u = 0; u < p.size(); ++u) {
      if (u != v && Cross(p[v] - z, p[u] - z) <= 0.0) ok = false;
    }
    if (ok) out.push_back(static_cast<int>(v));
  }
  return out;
}

/// Random strictly convex counterclockwise polygon: points on a random
/// ellipse at angles separated by random gaps.
inline Polygon RandomConvexPolygon(Rng& rng, int n) {
  std::vector<double> gaps(n);
  double total = 0.0;
  for (double& g : gaps) total += (g = Uniform(rng, 0.3, 1.0));
  const double rx = Uniform(rng, 0.5, 2.0);
  const double ry = Uniform(rng, 0.5, 2.0);
  const double start = Uniform(rng, 0.0, 2.0 * std::numbers::pi);
  const Complex shift = UniformComplex(rng);
  Eigen::VectorXcd v(n);
  double angle = start;
  for (int i = 0; i < n; ++i) {
    v[i] = Complex(rx * std::cos(angle), ry * std::sin(angle)) + shift;
    angle += 2.0 * std::numbers::pi * gaps[i] / total;
  }
  return Polygon(std::move(v));
}

}  // namespace fagnano::testing

#endif  // FAGNANO_TESTS_TEST_UTIL_HPP_
