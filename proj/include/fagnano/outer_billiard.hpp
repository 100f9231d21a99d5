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

#ifndef FAGNANO_OUTER_BILLIARD_HPP_
#define FAGNANO_OUTER_BILLIARD_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fagnano/polygon.hpp"

namespace fagnano {

/// Which of the two support lines through z is used. With kCounterClockwise
/// every other hull vertex lies strictly left of the ray from z through the
/// support vertex (the right support line as seen from z), so orbits wind
/// counterclockwise around the table.
enum class Convention { kCounterClockwise, kClockwise };

/// z lies inside the convex hull of the table or on its boundary.
class InsideTableError : public std::domain_error {
 public:
  InsideTableError() : std::domain_error("point is not outside the table") {}
};

/// z lies on the continuation of a side of the convex hull, where the dual
/// billiard map is undefined.
class SingularPointError : public std::domain_error {
 public:
  explicit SingularPointError(int side_index)
      : std::domain_error("point is on the continuation of side " +
                          std::to_string(side_index)),
        side_index_(side_index) {}

  /// 1-based index (into the table polygon) of the side's first vertex.
  int side_index() const { return side_index_; }

 private:
  int side_index_;
};

/// A polygon prepared for the dual billiard map: its convex hull in
/// counterclockwise order, keeping extreme points only, with each hull
/// vertex mapped back to its index in the original polygon.
class BilliardTable {
 public:
  explicit BilliardTable(const Polygon& p, double tol = kDefaultTol);

  const Polygon& polygon() const { return polygon_; }
  /// 0-based indices into polygon(), counterclockwise.
  const std::vector<int>& hull() const { return hull_; }
  double diameter() const { return diameter_; }
  /// Absolute distance below which a point counts as on a side line.
  double singular_eps() const { return tol_ * diameter_; }

  /// 1-based index of the support vertex of z.
  int SupportVertex(Complex z,
                    Convention convention = Convention::kCounterClockwise) const;

  Complex DualMap(Complex z,
                  Convention convention = Convention::kCounterClockwise) const;

 private:
  Polygon polygon_;
  std::vector<int> hull_;
  double diameter_ = 0.0;
  double tol_;
};

int SupportVertex(const Polygon& p, Complex z, double tol = kDefaultTol,
                  Convention convention = Convention::kCounterClockwise);

Complex DualMap(const Polygon& p, Complex z, double tol = kDefaultTol,
                Convention convention = Convention::kCounterClockwise);

struct OrbitTermination {
  enum class Kind { kStepCap, kSingularHit, kPeriodDetected };
  Kind kind = Kind::kStepCap;
  /// kSingularHit: index of the point that could not be mapped.
  int step = 0;
  /// kSingularHit: see SingularPointError::side_index().
  int side_index = 0;
  /// kPeriodDetected: points[start + period] returned to points[start].
  int period = 0;
  int start = 0;
};

struct OrbitTrace {
  Polygon table;
  /// z, Tz, T²z, ...
  std::vector<Complex> points;
  /// support_vertices[k] is the 1-based vertex that maps points[k] to
  /// points[k+1]; one shorter than points.
  std::vector<int> support_vertices;
  OrbitTermination termination;
};

/// Iterates the dual billiard map up to `steps` times. Stops at a singular
/// point or when a point returns within tol·diameter of an earlier one.
/// Throws InsideTableError if z is not outside the table.
OrbitTrace Orbit(const Polygon& p, Complex z, int steps,
                 double tol = kDefaultTol,
                 Convention convention = Convention::kCounterClockwise);

/// Whether the vertices of Q form a Fagnano dual billiard orbit of P.
///
/// Q must be a dedal polygon of P (midpoint condition) and the dual billiard
/// map must really send each w_i to w_{i+1} through z_i. A clockwise table
/// is traversed in the opposite order (w_{i+1} to w_i through z_i), so both
/// labelling directions are accepted.
bool VerifyFagnano(const Polygon& p, const Polygon& q,
                   double tol = kDefaultTol);

/// The dedal polygon of P if it is a Fagnano orbit. For even n only the
/// base member Q_0 of the dedal family is tried.
std::optional<Polygon> FindFagnano(const Polygon& p, double tol = kDefaultTol);

}  // namespace fagnano

#endif  // FAGNANO_OUTER_BILLIARD_HPP_
