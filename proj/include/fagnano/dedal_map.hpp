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

#ifndef FAGNANO_DEDAL_MAP_HPP_
#define FAGNANO_DEDAL_MAP_HPP_

#include <complex>
#include <stdexcept>
#include <string>

#include "fagnano/polygon.hpp"

namespace fagnano {

/// The developing map: z_i = (w_i + w_{i+1})/2 with wraparound.
template <typename Scalar>
BasicPolygon<Scalar> Develop(const BasicPolygon<Scalar>& q) {
  const Eigen::Index n = q.size();
  typename BasicPolygon<Scalar>::Vertices z(n);
  z.head(n - 1) = (q.vertices().head(n - 1) + q.vertices().tail(n - 1)) /
                  Scalar(2);
  z[n - 1] = (q[n - 1] + q[0]) / Scalar(2);
  return BasicPolygon<Scalar>(std::move(z));
}

/// Raised when an even-n polygon has no dedal polygon. Carries the
/// alternating vertex sum that should have vanished.
class NoDedalError : public std::domain_error {
 public:
  explicit NoDedalError(Complex defect)
      : std::domain_error("no dedal polygon: alternating sum is (" +
                          std::to_string(defect.real()) + ", " +
                          std::to_string(defect.imag()) + ")"),
        defect_(defect) {}

  Complex defect() const { return defect_; }

 private:
  Complex defect_;
};

/// The unique dedal polygon of an odd-n polygon, from the alternating sums
/// w_i = z_i - z_{i+1} + z_{i+2} - ... + z_{i-1}.
Polygon DedalOdd(const Polygon& p);

/// z_1 - z_2 + z_3 - ... - z_n for even n.
Complex ExistenceDefect(const Polygon& p);

/// Default acceptance threshold for ExistenceDefect: tol·(1 + max|z_i|).
double ExistenceThreshold(const Polygon& p, double tol = kDefaultTol);

/// All dedal polygons of an even-n polygon: {Q_0 + s·X_{n/2} : s ∈ ℂ}.
struct DedalFamily {
  /// The member with no X_{n/2} component.
  Polygon base_q0;
  /// (1, -1, 1, -1, ...).
  Polygon kernel;

  Eigen::Index n() const { return base_q0.size(); }
};

/// Builds the family by inverting the developing map coefficient-wise,
/// a_i = 2 b_i / (1 + q^i) for i != n/2 and a_{n/2} = 0.
/// Throws NoDedalError if |defect| exceeds ExistenceThreshold(p, tol).
DedalFamily DedalEven(const Polygon& p, double tol = kDefaultTol);

Polygon FamilyMember(const DedalFamily& family, Complex s);

/// The member whose i-th vertex (1-based) is w.
Polygon DedalThroughVertex(const DedalFamily& family, int i, Complex w);

/// DedalOdd for odd n, the base member Q_0 of DedalEven for even n.
Polygon Dedal(const Polygon& p, double tol = kDefaultTol);

}  // namespace fagnano

#endif  // FAGNANO_DEDAL_MAP_HPP_
