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

#ifndef FAGNANO_RANDOM_HPP_
#define FAGNANO_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "fagnano/polygon.hpp"

namespace fagnano {

/// Ensemble runs draw from std::mt19937_64, whose output sequence is fixed
/// by the C++ standard. Doubles are formed from the top 53 bits instead of
/// std::uniform_real_distribution, whose algorithm is implementation
/// defined, so results are reproducible across platforms.
using Rng = std::mt19937_64;

/// Independent stream for trial `index` of an experiment seeded with `seed`.
inline Rng TrialRng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return Rng(x ^ (x >> 31));
}

/// Uniform in [0, 1).
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double Uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * UniformUnit(rng);
}

inline Complex UniformComplex(Rng& rng, double lo = -1.0, double hi = 1.0) {
  const double re = Uniform(rng, lo, hi);
  return {re, Uniform(rng, lo, hi)};
}

/// n vertices drawn independently and uniformly from the unit square.
inline Polygon RandomPolygonInUnitSquare(Rng& rng, Eigen::Index n) {
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = UniformComplex(rng, 0.0, 1.0);
  return Polygon(std::move(v));
}

}  // namespace fagnano

#endif  // FAGNANO_RANDOM_HPP_
