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

#include "fagnano/spectral.hpp"

#include <cmath>
#include <limits>

namespace fagnano {

SpectralCoefficients ShiftCoefficients(const SpectralCoefficients& c, int k) {
  const Eigen::Index n = c.n();
  if (k < 1 || k > n) throw std::out_of_range("shift index out of range");
  SpectralCoefficients out{SpectralCoefficients::Vector(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out[i] = c[i] * RootOfUnity(n, i * (k - 1));
  }
  return out;
}

SpectralCoefficients ReversedShiftCoefficients(const SpectralCoefficients& c,
                                               int k) {
  const Eigen::Index n = c.n();
  if (k < 1 || k > n) throw std::out_of_range("shift index out of range");
  SpectralCoefficients out{SpectralCoefficients::Vector(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out[i] = c[(n - i) % n] * RootOfUnity(n, -i * (k - 1));
  }
  return out;
}

ProjectiveClass ProjectiveClass::FromCoefficients(const Vector& a) {
  if (a.size() < 2) throw std::invalid_argument("n must be at least 3");
  const double norm = a.norm();
  if (!(norm > std::numeric_limits<double>::min()) || !std::isfinite(norm)) {
    throw std::domain_error("polygon is a point: no projective class");
  }
  Vector unit = a / norm;
  const double max_abs = unit.cwiseAbs().maxCoeff();
  // Near-ties resolve to the lowest index so that rounding in the input does
  // not flip the pivot between two equally large coefficients.
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < unit.size(); ++i) {
    if (std::abs(unit[i]) >= max_abs * (1.0 - 1e-9)) {
      pivot = i;
      break;
    }
  }
  const Complex phase = std::conj(unit[pivot]) / std::abs(unit[pivot]);
  unit *= phase;
  unit[pivot] = Complex(std::abs(unit[pivot]), 0.0);
  return ProjectiveClass(std::move(unit), pivot + 1);
}

Polygon ProjectiveClass::Representative() const {
  SpectralCoefficients c{SpectralCoefficients::Vector::Zero(n())};
  c.coeffs.tail(n() - 1) = coeffs_;
  return Reconstruct(c);
}

ProjectiveClass ProjectClass(const Polygon& p) {
  if (IsPoint(p)) throw std::domain_error("polygon is a point: no projective class");
  const SpectralCoefficients c = Decompose(p);
  return ProjectiveClass::FromCoefficients(c.coeffs.tail(c.n() - 1));
}

double ClassDistance(const ProjectiveClass& a, const ProjectiveClass& b) {
  if (a.n() != b.n()) throw std::invalid_argument("class size mismatch");
  const Complex inner = b.coeffs().dot(a.coeffs());  // Σ conj(b_i) a_i
  const double mag = std::abs(inner);
  if (mag == 0.0) return std::sqrt(2.0);
  return (a.coeffs() - (inner / mag) * b.coeffs()).norm();
}

}  // namespace fagnano
