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

#include "fagnano/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "fagnano/classify.hpp"
#include "fagnano/dedal_map.hpp"
#include "fagnano/random.hpp"

namespace fagnano {
namespace {

bool InMiddleBand(int i, int j, int n) {
  return i > j && i < n - j && 2 * i != n;
}

// Centered copy scaled to max|z| = 1; empty for a point.
std::optional<Polygon> Normalized(const Polygon& p) {
  const Polygon centered = Center(p);
  const double scale = centered.vertices().cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) return std::nullopt;
  return Polygon(centered.vertices() / scale);
}

}  // namespace

IterationTrace Iterate(const Polygon& q, int m) {
  if (m < 0) throw std::invalid_argument("step count must be nonnegative");
  IterationTrace trace;
  trace.steps = m;
  trace.polygons.reserve(m + 1);
  trace.classes.reserve(m + 1);
  trace.polygons.push_back(q);
  for (int s = 1; s <= m; ++s) {
    trace.polygons.push_back(Develop(trace.polygons.back()));
  }
  for (const Polygon& p : trace.polygons) {
    try {
      trace.classes.emplace_back(ProjectClass(p));
    } catch (const std::domain_error&) {
      trace.classes.emplace_back(std::nullopt);
    }
  }
  return trace;
}

int AttractorIndex(const Polygon& q, double tol) {
  if (IsPoint(q)) throw std::domain_error("polygon is a point");
  const SpectralCoefficients c = Decompose(q);
  const int n = static_cast<int>(c.n());
  const double max_abs = c.coeffs.tail(n - 1).cwiseAbs().maxCoeff();
  if (max_abs == 0.0) throw std::domain_error("polygon is a point");
  int best = n;
  for (int i = 1; i < n; ++i) {
    if (2 * i == n || std::abs(c[i]) <= tol * max_abs) continue;
    best = std::min(best, std::min(i, n - i));
  }
  if (best == n) {
    throw std::domain_error("only the segment direction X_{n/2} is present");
  }
  return best;
}

ProjectiveClass TruncateToAttractor(const ProjectiveClass& c, int j) {
  const int n = static_cast<int>(c.n());
  ProjectiveClass::Vector kept = ProjectiveClass::Vector::Zero(n - 1);
  kept[j - 1] = c.coeff(j);
  kept[n - j - 1] = c.coeff(n - j);
  return ProjectiveClass::FromCoefficients(kept);
}

AttractorReport DecayReport(const Polygon& q, int m, double tol) {
  if (m < 10) throw std::invalid_argument("decay report needs m >= 10");
  const int n = static_cast<int>(q.size());
  AttractorReport report;
  report.j = AttractorIndex(q, tol);
  const int j = report.j;

  const SpectralCoefficients c = Decompose(q);
  Eigen::VectorXcd a = c.coeffs.tail(n - 1);
  const double norm = a.norm();
  for (int i = 1; i < n; ++i) {
    if (!InMiddleBand(i, j, n) || std::abs(a[i - 1]) <= 1e-12 * norm) continue;
    report.predicted_rate =
        std::max(report.predicted_rate,
                 std::abs(Eigenvalue(n, i)) / std::abs(Eigenvalue(n, j)));
  }

  Eigen::VectorXcd lambda(n - 1);
  for (int i = 1; i < n; ++i) lambda[i - 1] = Eigenvalue(n, i);

  report.distances.reserve(m + 1);
  for (int s = 0; s <= m; ++s) {
    a /= a.norm();
    // For unit a, the truncated class is at distance
    // sqrt(2 - 2 sqrt(1 - r²)) with r the norm of the dropped part; this
    // form keeps full precision as r -> 0.
    double r2 = 0.0;
    for (int i = 1; i < n; ++i) {
      if (i != j && i != n - j) r2 += std::norm(a[i - 1]);
    }
    report.distances.push_back(
        std::sqrt(2.0 * r2 / (1.0 + std::sqrt(std::max(0.0, 1.0 - r2)))));
    a = a.cwiseProduct(lambda);
  }

  // Least-squares slope of log d over the tail half.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int s = m / 2; s <= m; ++s) {
    const double d = report.distances[s];
    if (!(d > 0.0)) continue;
    const double y = std::log(d);
    sx += s;
    sy += y;
    sxx += double(s) * s;
    sxy += s * y;
    ++count;
  }
  if (count >= 2) {
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    report.fitted_rate = std::exp(slope);
  }
  return report;
}

Complex MuNScalar(int n, int j) {
  if (n < 3 || j < 1 || j > n - 1 || 2 * j == n) {
    throw std::out_of_range("index out of range for the n-fold scalar");
  }
  const Complex lambda = Eigenvalue(n, j);
  Complex out(1.0);
  for (int s = 0; s < n; ++s) out *= lambda;
  return out;
}

bool VerifyNPeriodicity(const Polygon& q, double tol) {
  const Polygon centered = Center(q);
  const std::optional<int> j = IsAffinelyRegular(centered, tol);
  if (!j) throw std::invalid_argument("polygon is not affinely regular");
  const int n = static_cast<int>(q.size());

  Polygon image = centered;
  for (int s = 0; s < n; ++s) image = Develop(image);

  const double scale = centered.vertices().cwiseAbs().maxCoeff();
  const bool scalar_ok =
      MaxVertexError(image, MuNScalar(n, *j) * centered) <= tol * scale;
  const bool class_ok =
      ClassDistance(ProjectClass(image), ProjectClass(centered)) <= tol;
  return scalar_ok && class_ok;
}

namespace {

constexpr int kConfirm = 10;

// Centered, max-normalized iterates μ^0..μ^steps; shorter if the orbit
// collapses to a point. The orbit is advanced on the spectral coefficients
// with the centroid and modes below 1e-12·‖a‖ dropped, so an eigenpolygon
// stays one instead of drifting toward X_1 through rounding.
std::vector<Polygon> NormalizedOrbit(const Polygon& q, int steps) {
  std::vector<Polygon> orbit;
  if (IsPoint(q)) return orbit;
  SpectralCoefficients c = Decompose(q);
  const Eigen::Index n = c.n();
  c[0] = 0.0;
  const double norm = c.coeffs.norm();
  Eigen::VectorXcd lambda(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(c[i]) <= 1e-12 * norm) c[i] = 0.0;
    lambda[i] = Eigenvalue(static_cast<int>(n), static_cast<int>(i));
  }
  orbit.reserve(steps + 1);
  for (int s = 0; s <= steps; ++s) {
    const std::optional<Polygon> current = Normalized(Reconstruct(c));
    if (!current) break;
    orbit.push_back(*current);
    c.coeffs = c.coeffs.cwiseProduct(lambda);
    const double next = c.coeffs.norm();
    if (!(next > 0.0)) break;
    c.coeffs /= next;
  }
  return orbit;
}

std::optional<int> FirstAbsorbedConvex(const std::vector<Polygon>& orbit,
                                       int max_m, double tol) {
  const int last = static_cast<int>(orbit.size()) - 1;
  for (int big_m = 0; big_m <= std::min(max_m, last); ++big_m) {
    if (!IsConvex(orbit[big_m], tol)) continue;
    bool stays = true;
    for (int s = big_m + 1; s <= std::min(big_m + kConfirm, last); ++s) {
      if (!IsConvex(orbit[s], tol)) {
        stays = false;
        break;
      }
    }
    if (stays) return big_m;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> ConvexificationIndex(const Polygon& q, int max_m,
                                        double tol) {
  if (max_m < 1) throw std::invalid_argument("max_m must be at least 1");
  return FirstAbsorbedConvex(NormalizedOrbit(q, max_m + kConfirm), max_m, tol);
}

std::vector<ConvexificationTrial> ConvexificationEnsemble(
    int n, int samples, std::uint64_t seed, int max_m, double tol) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (samples < 0) throw std::invalid_argument("samples must be nonnegative");
  if (max_m < 1) throw std::invalid_argument("max_m must be at least 1");
  std::vector<ConvexificationTrial> trials(samples);
  for (int t = 0; t < samples; ++t) {
    Rng rng = TrialRng(seed, static_cast<std::uint64_t>(t));
    const std::vector<Polygon> orbit =
        NormalizedOrbit(RandomPolygonInUnitSquare(rng, n), max_m + kConfirm);
    std::vector<bool> convex(orbit.size());
    for (std::size_t s = 0; s < orbit.size(); ++s) {
      convex[s] = IsConvex(orbit[s], tol);
    }
    ConvexificationTrial& trial = trials[t];
    for (std::size_t s = 0; s + 1 < orbit.size(); ++s) {
      if (convex[s] && !convex[s + 1]) ++trial.absorbing_violations;
    }
    trial.index = FirstAbsorbedConvex(orbit, max_m, tol);
  }
  return trials;
}

}  // namespace fagnano
