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

#ifndef FAGNANO_CLASSIFY_HPP_
#define FAGNANO_CLASSIFY_HPP_

#include <optional>
#include <string>

#include "fagnano/polygon.hpp"

namespace fagnano {

// A spectral coefficient of center(P) counts as present when its magnitude
// exceeds tol times the largest coefficient among indices 1..n-1. Every
// function here throws std::domain_error for a polygon that is a point.

struct RegularMatch {
  /// Index of the single eigenpolygon, 1 <= j <= n-1, j != n/2.
  int j = 0;
  Complex ell;
};

/// center(P) = ℓ·X_j for a single j.
std::optional<RegularMatch> IsRegular(const Polygon& p,
                                      double tol = kDefaultTol);

/// Returns j in 1..⌊(n-1)/2⌋ when the spectral support of center(P) lies in
/// {j, n-j}.
std::optional<int> IsAffinelyRegular(const Polygon& p,
                                     double tol = kDefaultTol);

struct RegularityResult {
  enum class Kind { kRegular, kAffinelyRegular, kNone };
  Kind kind = Kind::kNone;
  /// Unfolded index for kRegular, folded for kAffinelyRegular.
  int j = 0;
  /// Only meaningful for kRegular.
  Complex ell;
};

RegularityResult Regularity(const Polygon& p, double tol = kDefaultTol);

/// Whether center(P) has a dedal polygon ⋆-similar to it. Even-n polygons
/// without a dedal polygon, and points, give false.
bool Thm0Verify(const Polygon& p, double tol = kDefaultTol);

/// Membership in the list of polygons that are similar to their dedal
/// polygon.
struct Thm1Class {
  enum class Case {
    kOddAffinelyRegular,
    kEvenRegular,
    /// P ∈ A_j and n | j(2k-1) for some k != n/2.
    kEvenCaseII,
    /// P ∈ A_j and b_j / b_{n-j} = sign·q^{j(k+3/2)}.
    kEvenCaseIII,
    kNotInList,
  };
  Case kind = Case::kNotInList;
  int j = 0;
  int k = 0;
  int sign = 0;

  bool in_list() const { return kind != Case::kNotInList; }
};

std::string ToString(Thm1Class::Case c);

/// Odd n: affinely regular or not. Even n: regular first, then case ii over
/// ascending k (k != n/2), then case iii over ascending k with the + sign
/// tried before the - sign.
Thm1Class ClassifyThm1(const Polygon& p, double tol = kDefaultTol);

/// The similarity between center(P) and its dedal polygon predicted by the
/// class of P, checked against Dedal(center(P)) before it is returned.
/// Empty when P is not in the list. Throws std::logic_error if the
/// predicted witness does not reproduce P.
std::optional<SimilarityWitness> PredictedWitness(const Polygon& p,
                                                  double tol = kDefaultTol);

}  // namespace fagnano

#endif  // FAGNANO_CLASSIFY_HPP_
