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

#ifndef FAGNANO_DYNAMICS_HPP_
#define FAGNANO_DYNAMICS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "fagnano/polygon.hpp"
#include "fagnano/spectral.hpp"

namespace fagnano {

/// The orbit Q, μ(Q), ..., μ^m(Q) together with its image in the
/// projective quotient.
struct IterationTrace {
  std::vector<Polygon> polygons;
  /// classes[s] is empty when polygons[s] has collapsed to a point.
  std::vector<std::optional<ProjectiveClass>> classes;
  int steps = 0;
};

IterationTrace Iterate(const Polygon& q, int m);

/// The j with center(Q) in B_j \ B_{j+1}: the smallest min(i, n-i) over the
/// present spectral indices, ignoring n/2. Throws std::domain_error when
/// the only present index is n/2 or Q is a point.
int AttractorIndex(const Polygon& q, double tol = kDefaultTol);

/// Nearest point of Â_j to a class, found by dropping every coefficient
/// outside {j, n-j} and renormalizing.
ProjectiveClass TruncateToAttractor(const ProjectiveClass& c, int j);

struct AttractorReport {
  int j = 0;
  /// Largest |(1+q^i)/(1+q^j)| over present middle-band indices; 0 when the
  /// middle band is empty.
  double predicted_rate = 0.0;
  /// distances[s] = dist(μ̂^s[Q], Â_j), s = 0..m.
  std::vector<double> distances;
  /// exp of the least-squares slope of log(distances) over the tail half.
  double fitted_rate = 0.0;
};

/// The quotient orbit is advanced on the coefficient vector, where μ̂ acts
/// diagonally, and renormalized every step.
AttractorReport DecayReport(const Polygon& q, int m, double tol = kDefaultTol);

/// ((1+q^j)/2)^n, the scalar with μ^n = scalar·Id on A_j.
Complex MuNScalar(int n, int j);

/// μ^n(Q) = MuNScalar(n, j)·Q and μ̂^n[Q] = [Q], for affinely regular Q.
/// Throws std::invalid_argument if center(Q) is not affinely regular.
bool VerifyNPeriodicity(const Polygon& q, double tol = kDefaultTol);

/// Smallest M <= max_m with μ^M(Q) convex; 0 if Q is already convex. A hit
/// only counts once the next ten iterates are convex as well.
std::optional<int> ConvexificationIndex(const Polygon& q, int max_m,
                                        double tol = kDefaultTol);

struct ConvexificationTrial {
  std::optional<int> index;
  /// Steps along the computed orbit with μ^m(Q) convex but μ^{m+1}(Q) not.
  int absorbing_violations = 0;
};

/// Convexification of random polygons. Trial t draws n vertices uniformly
/// from the unit square using TrialRng(seed, t) and centers them; results
/// are ordered by trial index and independent of how trials are scheduled.
std::vector<ConvexificationTrial> ConvexificationEnsemble(
    int n, int samples, std::uint64_t seed, int max_m,
    double tol = kDefaultTol);

}  // namespace fagnano

#endif  // FAGNANO_DYNAMICS_HPP_
