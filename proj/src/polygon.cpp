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

#include "fagnano/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fagnano/spectral.hpp"

namespace fagnano {
namespace {

double Cross(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double PointSegmentDistance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t =
      std::clamp((std::conj(ab) * (p - a)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

bool SegmentsWithin(Complex a, Complex b, Complex c, Complex d, double tol) {
  const double d1 = Cross(b - a, c - a);
  const double d2 = Cross(b - a, d - a);
  const double d3 = Cross(d - c, a - c);
  const double d4 = Cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  const double gap = std::min({PointSegmentDistance(a, c, d),
                               PointSegmentDistance(b, c, d),
                               PointSegmentDistance(c, a, b),
                               PointSegmentDistance(d, a, b)});
  return gap <= tol;
}

std::optional<Complex> StarSimilarCoefficients(
    const SpectralCoefficients& p, const SpectralCoefficients& q, double tol) {
  Eigen::Index pivot = 0;
  const double q_max = q.coeffs.cwiseAbs().maxCoeff(&pivot);
  if (q_max == 0.0) throw std::invalid_argument("Q is identically zero");
  const Complex ell = p[pivot] / q[pivot];
  if (ell == Complex(0.0)) return std::nullopt;
  const double scale = p.coeffs.cwiseAbs().maxCoeff();
  const double residual = (p.coeffs - ell * q.coeffs).cwiseAbs().maxCoeff();
  if (residual > tol * scale) return std::nullopt;
  return ell;
}

}  // namespace

DegeneracyReport Degeneracy(const Polygon& p, double tol, double angle_tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const Eigen::Index n = p.size();
  DegeneracyReport report;
  auto side = [&](Eigen::Index i) { return p[(i + 1) % n] - p[i]; };
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(side(i)) <= tol) {
      report.zero_side_indices.push_back(static_cast<int>(i + 1));
    }
    if (p[(i + 1) % n] == p[i]) {
      report.coincident_consecutive.push_back(static_cast<int>(i + 1));
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex in = side((i + n - 1) % n);
    const Complex out = side(i);
    if (std::abs(in) <= tol || std::abs(out) <= tol) continue;
    const double turning = std::abs(std::arg(out / in));
    if (turning <= angle_tol) {
      report.pi_angle_indices.push_back(static_cast<int>(i + 1));
    } else if (std::numbers::pi - turning <= angle_tol) {
      report.two_pi_angle_indices.push_back(static_cast<int>(i + 1));
    }
  }
  return report;
}

bool IsSimple(const Polygon& p, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const Eigen::Index n = p.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex a = p[i];
    const Complex b = p[(i + 1) % n];
    // Vertices off this edge must stay clear of it.
    for (Eigen::Index v = 0; v < n; ++v) {
      if (v == i || v == (i + 1) % n) continue;
      if (PointSegmentDistance(p[v], a, b) <= tol) return false;
    }
    for (Eigen::Index j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      if (SegmentsWithin(a, b, p[j], p[(j + 1) % n], tol)) return false;
    }
  }
  return true;
}

bool IsConvex(const Polygon& p, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const Eigen::Index n = p.size();
  int sign = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex in = p[i] - p[(i + n - 1) % n];
    const Complex out = p[(i + 1) % n] - p[i];
    const double c = Cross(in, out);
    const int s = c > tol ? 1 : (c < -tol ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
  }
  return IsSimple(p, tol);
}

double SignedDoubleArea(const Polygon& p) {
  const Eigen::Index n = p.size();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) sum += Cross(p[i], p[(i + 1) % n]);
  return sum;
}

std::optional<Complex> StarSimilar(const Polygon& p, const Polygon& q,
                                   double tol) {
  if (p.size() != q.size()) throw std::invalid_argument("size mismatch");
  return StarSimilarCoefficients(Decompose(p), Decompose(q), tol);
}

Polygon ApplyWitness(const SimilarityWitness& w, const Polygon& q) {
  return w.scale_ell * (w.orientation == Orientation::kSame
                            ? CyclicShift(q, w.shift_k)
                            : ReversedShift(q, w.shift_k));
}

std::optional<SimilarityWitness> Similar(const Polygon& p, const Polygon& q,
                                         double tol) {
  if (p.size() != q.size()) throw std::invalid_argument("size mismatch");
  const SpectralCoefficients cp = Decompose(p);
  const SpectralCoefficients cq = Decompose(q);
  const int n = static_cast<int>(p.size());
  for (int k = 1; k <= n; ++k) {
    if (auto ell = StarSimilarCoefficients(cp, ShiftCoefficients(cq, k), tol)) {
      return SimilarityWitness{k, Orientation::kSame, *ell};
    }
    if (auto ell = StarSimilarCoefficients(
            cp, ReversedShiftCoefficients(cq, k), tol)) {
      return SimilarityWitness{k, Orientation::kReversed, *ell};
    }
  }
  return std::nullopt;
}

}  // namespace fagnano
