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

#include "fagnano/outer_billiard.hpp"

#include <algorithm>
#include <numeric>

#include "fagnano/dedal_map.hpp"

namespace fagnano {
namespace {

double Cross(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

// Andrew's monotone chain; collinear and repeated points are dropped.
std::vector<int> ConvexHull(const Polygon& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (p[a].real() != p[b].real()) return p[a].real() < p[b].real();
    return p[a].imag() < p[b].imag();
  });
  std::vector<int> hull(2 * n);
  int size = 0;
  auto turn = [&](int a, int b, int c) { return Cross(p[b] - p[a], p[c] - p[a]); };
  for (int idx : order) {
    while (size >= 2 && turn(hull[size - 2], hull[size - 1], idx) <= 0) --size;
    hull[size++] = idx;
  }
  const int lower = size + 1;
  for (int t = n - 2; t >= 0; --t) {
    const int idx = order[t];
    while (size >= lower && turn(hull[size - 2], hull[size - 1], idx) <= 0) {
      --size;
    }
    hull[size++] = idx;
  }
  hull.resize(std::max(size - 1, 0));
  return hull;
}

}  // namespace

BilliardTable::BilliardTable(const Polygon& p, double tol)
    : polygon_(p), hull_(ConvexHull(p)), tol_(tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (hull_.size() < 3) {
    throw std::invalid_argument("table has an empty interior");
  }
  for (int a : hull_) {
    for (int b : hull_) diameter_ = std::max(diameter_, std::abs(p[a] - p[b]));
  }
}

int BilliardTable::SupportVertex(Complex z, Convention convention) const {
  const int h = static_cast<int>(hull_.size());
  const double eps = singular_eps();
  bool outside = false;
  for (int e = 0; e < h; ++e) {
    const Complex a = polygon_[hull_[e]];
    const Complex b = polygon_[hull_[(e + 1) % h]];
    if (Cross(b - a, z - a) / std::abs(b - a) < -eps) outside = true;
  }
  if (!outside) throw InsideTableError();
  for (int e = 0; e < h; ++e) {
    const Complex a = polygon_[hull_[e]];
    const Complex b = polygon_[hull_[(e + 1) % h]];
    if (std::abs(Cross(b - a, z - a)) / std::abs(b - a) <= eps) {
      throw SingularPointError(hull_[e] + 1);
    }
  }
  const double orient = convention == Convention::kCounterClockwise ? 1 : -1;
  for (int v : hull_) {
    const Complex ray = polygon_[v] - z;
    bool all_left = true;
    for (int u : hull_) {
      if (u != v && orient * Cross(ray, polygon_[u] - z) <= 0) {
        all_left = false;
        break;
      }
    }
    if (all_left) return v + 1;
  }
  // Only reachable through rounding right at a side continuation.
  throw SingularPointError(hull_.front() + 1);
}

Complex BilliardTable::DualMap(Complex z, Convention convention) const {
  return 2.0 * polygon_[SupportVertex(z, convention) - 1] - z;
}

int SupportVertex(const Polygon& p, Complex z, double tol,
                  Convention convention) {
  return BilliardTable(p, tol).SupportVertex(z, convention);
}

Complex DualMap(const Polygon& p, Complex z, double tol,
                Convention convention) {
  return BilliardTable(p, tol).DualMap(z, convention);
}

OrbitTrace Orbit(const Polygon& p, Complex z, int steps, double tol,
                 Convention convention) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  const BilliardTable table(p, tol);
  const double eps = table.singular_eps();
  OrbitTrace trace{p, {z}, {}, {}};
  for (int s = 0; s < steps; ++s) {
    const Complex current = trace.points.back();
    int v = 0;
    try {
      v = table.SupportVertex(current, convention);
    } catch (const SingularPointError& e) {
      trace.termination = {OrbitTermination::Kind::kSingularHit, s,
                           e.side_index(), 0, 0};
      return trace;
    }
    const Complex next = 2.0 * p[v - 1] - current;
    trace.support_vertices.push_back(v);
    trace.points.push_back(next);
    for (int t = 0; t <= s; ++t) {
      if (std::abs(next - trace.points[t]) <= eps) {
        trace.termination = {OrbitTermination::Kind::kPeriodDetected, 0, 0,
                             s + 1 - t, t};
        return trace;
      }
    }
  }
  return trace;
}

bool VerifyFagnano(const Polygon& p, const Polygon& q, double tol) {
  if (p.size() != q.size()) throw std::invalid_argument("size mismatch");
  const double scale = 1.0 + p.vertices().cwiseAbs().maxCoeff();
  if (MaxVertexError(Develop(q), p) > tol * scale) return false;

  std::optional<BilliardTable> table;
  try {
    table.emplace(p, tol);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const int n = static_cast<int>(p.size());
  // forward: T(w_i) = w_{i+1} through z_i; backward: T(w_{i+1}) = w_i.
  auto holds = [&](bool forward) {
    for (int i = 0; i < n; ++i) {
      const Complex start = forward ? q[i] : q[(i + 1) % n];
      try {
        if (table->SupportVertex(start) != i + 1) return false;
      } catch (const std::domain_error&) {
        return false;
      }
    }
    return true;
  };
  return holds(true) || holds(false);
}

std::optional<Polygon> FindFagnano(const Polygon& p, double tol) {
  std::optional<Polygon> q;
  if (p.size() % 2 == 1) {
    q = DedalOdd(p);
  } else {
    try {
      q = DedalEven(p, tol).base_q0;
    } catch (const NoDedalError&) {
      return std::nullopt;
    }
  }
  if (VerifyFagnano(p, *q, tol)) return q;
  return std::nullopt;
}

}  // namespace fagnano
