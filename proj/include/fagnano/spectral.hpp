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

#ifndef FAGNANO_SPECTRAL_HPP_
#define FAGNANO_SPECTRAL_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

#include "fagnano/polygon.hpp"

namespace fagnano {

/// q^m with q = exp(2πi/n). The exponent is reduced mod n first so that
/// large exponents do not lose phase accuracy.
template <typename Scalar = double>
std::complex<Scalar> RootOfUnity(Eigen::Index n, long long m) {
  const long long r = ((m % n) + n) % n;
  // Quarter turns are returned exactly so that X_{n/2} = (1, -1, ...).
  if (r == 0) return {Scalar(1), Scalar(0)};
  if (2 * r == n) return {Scalar(-1), Scalar(0)};
  if (4 * r == n) return {Scalar(0), Scalar(1)};
  if (4 * r == 3 * n) return {Scalar(0), Scalar(-1)};
  const Scalar angle = Scalar(2) * std::numbers::pi_v<Scalar> *
                       static_cast<Scalar>(r) / static_cast<Scalar>(n);
  return std::polar(Scalar(1), angle);
}

/// q^x for a real exponent x (used with half-integer exponents).
template <typename Scalar = double>
std::complex<Scalar> RootOfUnityPow(Eigen::Index n, Scalar x) {
  const Scalar nn = static_cast<Scalar>(n);
  Scalar r = std::fmod(x, nn);
  if (r < 0) r += nn;
  return std::polar(Scalar(1), Scalar(2) * std::numbers::pi_v<Scalar> * r / nn);
}

namespace internal {

inline void CheckSpectralIndex(Eigen::Index n, Eigen::Index i) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (i < 0 || i >= n) throw std::out_of_range("spectral index out of range");
}

/// Table of q^0, q^1, ..., q^{n-1}.
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> Roots(Eigen::Index n) {
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> r(n);
  for (Eigen::Index m = 0; m < n; ++m) r[m] = RootOfUnity<Scalar>(n, m);
  return r;
}

}  // namespace internal

/// X_i = (1, q^i, q^{2i}, ..., q^{(n-1)i}).
template <typename Scalar = double>
BasicPolygon<Scalar> BasisVector(Eigen::Index n, Eigen::Index i) {
  internal::CheckSpectralIndex(n, i);
  const auto roots = internal::Roots<Scalar>(n);
  typename BasicPolygon<Scalar>::Vertices v(n);
  for (Eigen::Index m = 0; m < n; ++m) v[m] = roots[(m * i) % n];
  return BasicPolygon<Scalar>(std::move(v));
}

/// Eigenvalue (1 + q^i)/2 of the developing map on X_i.
template <typename Scalar = double>
std::complex<Scalar> Eigenvalue(Eigen::Index n, Eigen::Index i) {
  internal::CheckSpectralIndex(n, i);
  return (Scalar(1) + RootOfUnity<Scalar>(n, i)) / Scalar(2);
}

/// Coefficients a_0..a_{n-1} of a polygon in the eigenbasis {X_i}.
template <typename Scalar>
struct BasicSpectralCoefficients {
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  Vector coeffs;

  Eigen::Index n() const { return coeffs.size(); }
  const Complex& operator[](Eigen::Index i) const { return coeffs[i]; }
  Complex& operator[](Eigen::Index i) { return coeffs[i]; }
};

using SpectralCoefficients = BasicSpectralCoefficients<double>;

/// a_i = (1/n) Σ_k z_k q^{-(k-1)i}, evaluated directly in O(n²).
template <typename Scalar>
BasicSpectralCoefficients<Scalar> Decompose(const BasicPolygon<Scalar>& p) {
  const Eigen::Index n = p.size();
  const auto roots = internal::Roots<Scalar>(n);
  BasicSpectralCoefficients<Scalar> out{
      BasicSpectralCoefficients<Scalar>::Vector::Zero(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    std::complex<Scalar> sum(0);
    for (Eigen::Index m = 0; m < n; ++m) {
      sum += p[m] * std::conj(roots[(m * i) % n]);
    }
    out[i] = sum / static_cast<Scalar>(n);
  }
  return out;
}

/// Σ a_i X_i.
template <typename Scalar>
BasicPolygon<Scalar> Reconstruct(const BasicSpectralCoefficients<Scalar>& c) {
  const Eigen::Index n = c.n();
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  const auto roots = internal::Roots<Scalar>(n);
  typename BasicPolygon<Scalar>::Vertices v(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    std::complex<Scalar> sum(0);
    for (Eigen::Index i = 0; i < n; ++i) sum += c[i] * roots[(m * i) % n];
    v[m] = sum;
  }
  return BasicPolygon<Scalar>(std::move(v));
}

/// Coefficients of Q^{(k)} given those of Q: a_i·q^{i(k-1)}.
SpectralCoefficients ShiftCoefficients(const SpectralCoefficients& c, int k);

/// Coefficients of Q̄^{(k)} given those of Q: a_{n-i}·q^{-i(k-1)}.
SpectralCoefficients ReversedShiftCoefficients(const SpectralCoefficients& c,
                                               int k);

/// A point of the quotient of centered polygons by nonzero complex scaling.
///
/// Stored as the coefficient vector (a_1, ..., a_{n-1}) scaled to unit
/// Euclidean norm, with the phase fixed so that the pivot coefficient (the
/// largest in magnitude, lowest index on ties) is real and positive.
class ProjectiveClass {
 public:
  using Vector = Eigen::VectorXcd;

  /// Normalizes a raw coefficient vector for indices 1..n-1 (length n-1).
  /// Throws std::domain_error for the zero vector.
  static ProjectiveClass FromCoefficients(const Vector& a1_to_nm1);

  Eigen::Index n() const { return coeffs_.size() + 1; }
  /// Coefficient of X_i, 1 <= i <= n-1.
  Complex coeff(Eigen::Index i) const { return coeffs_[i - 1]; }
  const Vector& coeffs() const { return coeffs_; }
  /// 1-based index of the pivot coefficient.
  Eigen::Index pivot() const { return pivot_; }

  /// The unit-norm centered representative Σ a_i X_i.
  Polygon Representative() const;

 private:
  ProjectiveClass(Vector coeffs, Eigen::Index pivot)
      : coeffs_(std::move(coeffs)), pivot_(pivot) {}

  Vector coeffs_;
  Eigen::Index pivot_;
};

/// Canonical class of center(P). Throws std::domain_error if P is a point.
ProjectiveClass ProjectClass(const Polygon& p);

/// inf of |P0 - Q0| over unit representatives, i.e. sqrt(2 - 2|<a, b>|).
///
/// Evaluated as |a - e^{iθ} b| with the optimal phase θ, which equals the
/// closed form but keeps full relative precision for nearby classes.
double ClassDistance(const ProjectiveClass& a, const ProjectiveClass& b);

}  // namespace fagnano

#endif  // FAGNANO_SPECTRAL_HPP_
