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

#ifndef FAGNANO_POLYGON_HPP_
#define FAGNANO_POLYGON_HPP_

#include <complex>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace fagnano {

/// Absolute tolerance on complex magnitudes used when a caller does not
/// supply one.
inline constexpr double kDefaultTol = 1e-9;

/// An oriented, marked n-gon in the complex plane (n >= 3).
///
/// Vertex order is meaningful and never normalized. Self-intersecting,
/// multiply-traced and degenerate polygons are all valid values. Indexing
/// through operator[] is 0-based; the free functions below that take a
/// vertex or shift index use 1-based indices, matching the usual
/// mathematical labelling z_1, ..., z_n.
template <typename Scalar>
class BasicPolygon {
 public:
  using Complex = std::complex<Scalar>;
  using Vertices = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  explicit BasicPolygon(Vertices vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
      throw std::invalid_argument("polygon needs at least 3 vertices, got " +
                                  std::to_string(vertices_.size()));
    }
  }

  BasicPolygon(std::initializer_list<Complex> vertices)
      : BasicPolygon(FromList(vertices)) {}

  /// The constant polygon (c, c, ..., c).
  static BasicPolygon Constant(Eigen::Index n, Complex c) {
    return BasicPolygon(Vertices::Constant(n, c));
  }

  Eigen::Index size() const { return vertices_.size(); }
  const Vertices& vertices() const { return vertices_; }
  const Complex& operator[](Eigen::Index i) const { return vertices_[i]; }

  template <typename NewScalar>
  BasicPolygon<NewScalar> cast() const {
    return BasicPolygon<NewScalar>(
        vertices_.template cast<std::complex<NewScalar>>());
  }

  BasicPolygon& operator+=(const BasicPolygon& other) {
    CheckSameSize(other);
    vertices_ += other.vertices_;
    return *this;
  }
  BasicPolygon& operator-=(const BasicPolygon& other) {
    CheckSameSize(other);
    vertices_ -= other.vertices_;
    return *this;
  }
  BasicPolygon& operator*=(Complex s) {
    vertices_ *= s;
    return *this;
  }

  friend BasicPolygon operator+(BasicPolygon a, const BasicPolygon& b) {
    return a += b;
  }
  friend BasicPolygon operator-(BasicPolygon a, const BasicPolygon& b) {
    return a -= b;
  }
  friend BasicPolygon operator*(Complex s, BasicPolygon p) { return p *= s; }
  friend BasicPolygon operator*(BasicPolygon p, Complex s) { return p *= s; }
  friend BasicPolygon operator-(BasicPolygon p) { return p *= Complex(-1); }

  friend bool operator==(const BasicPolygon& a, const BasicPolygon& b) {
    return a.size() == b.size() && a.vertices_ == b.vertices_;
  }

 private:
  static Vertices FromList(std::initializer_list<Complex> list) {
    Vertices v(static_cast<Eigen::Index>(list.size()));
    Eigen::Index i = 0;
    for (const Complex& c : list) v[i++] = c;
    return v;
  }

  void CheckSameSize(const BasicPolygon& other) const {
    if (other.size() != size()) {
      throw std::invalid_argument("polygon size mismatch");
    }
  }

  Vertices vertices_;
};

using Polygon = BasicPolygon<double>;
using Complex = std::complex<double>;

/// Largest vertex-wise distance between two polygons of equal size.
template <typename Scalar>
Scalar MaxVertexError(const BasicPolygon<Scalar>& a,
                      const BasicPolygon<Scalar>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("polygon size mismatch");
  }
  return (a.vertices() - b.vertices()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
std::complex<Scalar> Centroid(const BasicPolygon<Scalar>& p) {
  return p.vertices().mean();
}

/// Translates p so that its centroid is the origin.
template <typename Scalar>
BasicPolygon<Scalar> Center(const BasicPolygon<Scalar>& p) {
  const std::complex<Scalar> c = Centroid(p);
  if (c == std::complex<Scalar>(0)) return p;
  return BasicPolygon<Scalar>(p.vertices().array() - c);
}

/// All vertices coincide exactly.
template <typename Scalar>
bool IsPoint(const BasicPolygon<Scalar>& p) {
  return (p.vertices().array() == p[0]).all();
}

/// Q^{(k)} = (w_k, w_{k+1}, ..., w_{k-1}), 1 <= k <= n.
template <typename Scalar>
BasicPolygon<Scalar> CyclicShift(const BasicPolygon<Scalar>& q, int k) {
  const Eigen::Index n = q.size();
  if (k < 1 || k > n) throw std::out_of_range("shift index out of range");
  typename BasicPolygon<Scalar>::Vertices out(n);
  for (Eigen::Index m = 0; m < n; ++m) out[m] = q[(k - 1 + m) % n];
  return BasicPolygon<Scalar>(std::move(out));
}

/// Q̄^{(k)} = (w_k, w_{k-1}, ..., w_{k+1}), 1 <= k <= n.
template <typename Scalar>
BasicPolygon<Scalar> ReversedShift(const BasicPolygon<Scalar>& q, int k) {
  const Eigen::Index n = q.size();
  if (k < 1 || k > n) throw std::out_of_range("shift index out of range");
  typename BasicPolygon<Scalar>::Vertices out(n);
  for (Eigen::Index m = 0; m < n; ++m) out[m] = q[((k - 1 - m) % n + n) % n];
  return BasicPolygon<Scalar>(std::move(out));
}

/// Degenerate features of a polygon. All indices are 1-based.
///
/// Side i joins z_i to z_{i+1}. Angle flags refer to the interior angle at
/// z_i and are only evaluated when both sides at z_i are longer than tol:
/// an angle of π is a straight continuation, 2π a reversal.
struct DegeneracyReport {
  std::vector<int> zero_side_indices;
  std::vector<int> pi_angle_indices;
  std::vector<int> two_pi_angle_indices;
  /// Sides whose endpoints are bitwise identical; a subset of the zero sides.
  std::vector<int> coincident_consecutive;

  bool empty() const {
    return zero_side_indices.empty() && pi_angle_indices.empty() &&
           two_pi_angle_indices.empty() && coincident_consecutive.empty();
  }
};

/// `angle_tol` is in radians.
DegeneracyReport Degeneracy(const Polygon& p, double tol = kDefaultTol,
                            double angle_tol = 1e-9);

bool IsSimple(const Polygon& p, double tol = kDefaultTol);

/// Strictly convex and simple, in either orientation.
bool IsConvex(const Polygon& p, double tol = kDefaultTol);

/// Twice the signed area (positive for counterclockwise polygons).
double SignedDoubleArea(const Polygon& p);

/// Returns ℓ with P = ℓ·Q when such a nonzero ℓ exists within tol.
///
/// Both polygons are expected centered. The test runs on spectral
/// coefficients: ℓ is read off at the largest coefficient of Q and every
/// other coefficient must agree to within tol relative to the largest
/// coefficient of P.
std::optional<Complex> StarSimilar(const Polygon& p, const Polygon& q,
                                   double tol = kDefaultTol);

enum class Orientation { kSame, kReversed };

struct SimilarityWitness {
  int shift_k = 1;
  Orientation orientation = Orientation::kSame;
  Complex scale_ell{1.0, 0.0};
};

/// The polygon the witness claims to equal: ℓ·Q^{(k)} or ℓ·Q̄^{(k)}.
Polygon ApplyWitness(const SimilarityWitness& w, const Polygon& q);

/// Searches the 2n candidates ℓ·Q^{(k)} and ℓ·Q̄^{(k)} for P. Returns the
/// first hit by ascending k, same orientation before reversed.
std::optional<SimilarityWitness> Similar(const Polygon& p, const Polygon& q,
                                         double tol = kDefaultTol);

}  // namespace fagnano

#endif  // FAGNANO_POLYGON_HPP_
