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

#include "fagnano/classify.hpp"

#include <vector>

#include "fagnano/dedal_map.hpp"
#include "fagnano/spectral.hpp"

namespace fagnano {
namespace {

// Present indices among 1..n-1 of the centered decomposition.
std::vector<int> Support(const Polygon& p, const SpectralCoefficients& c,
                         double tol) {
  if (IsPoint(p)) throw std::domain_error("polygon is a point");
  const Eigen::Index n = c.n();
  const double max_abs = c.coeffs.tail(n - 1).cwiseAbs().maxCoeff();
  if (max_abs == 0.0) throw std::domain_error("polygon is a point");
  std::vector<int> support;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (std::abs(c[i]) > tol * max_abs) support.push_back(static_cast<int>(i));
  }
  return support;
}

std::optional<int> AffineIndex(const std::vector<int>& support, int n) {
  const int j = support.front();
  if (2 * j == n) return std::nullopt;
  if (support.size() == 1) return std::min(j, n - j);
  if (support.size() == 2 && support[1] == n - j) return j;
  return std::nullopt;
}

}  // namespace

std::optional<RegularMatch> IsRegular(const Polygon& p, double tol) {
  const SpectralCoefficients c = Decompose(p);
  const std::vector<int> support = Support(p, c, tol);
  const int n = static_cast<int>(p.size());
  if (support.size() != 1 || 2 * support.front() == n) return std::nullopt;
  return RegularMatch{support.front(), c[support.front()]};
}

std::optional<int> IsAffinelyRegular(const Polygon& p, double tol) {
  return AffineIndex(Support(p, Decompose(p), tol), static_cast<int>(p.size()));
}

RegularityResult Regularity(const Polygon& p, double tol) {
  if (auto r = IsRegular(p, tol)) {
    return {RegularityResult::Kind::kRegular, r->j, r->ell};
  }
  if (auto j = IsAffinelyRegular(p, tol)) {
    return {RegularityResult::Kind::kAffinelyRegular, *j, Complex(0.0)};
  }
  return {};
}

bool Thm0Verify(const Polygon& p, double tol) {
  const Polygon centered = Center(p);
  if (p.size() % 2 == 0 &&
      std::abs(ExistenceDefect(centered)) > ExistenceThreshold(centered, tol)) {
    return false;
  }
  const Polygon q = Dedal(centered, tol);
  if (Decompose(q).coeffs.cwiseAbs().maxCoeff() == 0.0) return false;
  return StarSimilar(centered, q, tol).has_value();
}

std::string ToString(Thm1Class::Case c) {
  switch (c) {
    case Thm1Class::Case::kOddAffinelyRegular:
      return "odd_affinely_regular";
    case Thm1Class::Case::kEvenRegular:
      return "even_regular";
    case Thm1Class::Case::kEvenCaseII:
      return "even_case_ii";
    case Thm1Class::Case::kEvenCaseIII:
      return "even_case_iii";
    case Thm1Class::Case::kNotInList:
      return "not_in_list";
  }
  return "unknown";
}

Thm1Class ClassifyThm1(const Polygon& p, double tol) {
  using Case = Thm1Class::Case;
  const int n = static_cast<int>(p.size());
  const SpectralCoefficients b = Decompose(p);
  const std::vector<int> support = Support(p, b, tol);
  const std::optional<int> affine = AffineIndex(support, n);

  if (n % 2 == 1) {
    if (affine) return {Case::kOddAffinelyRegular, *affine, 0, 0};
    return {};
  }
  if (support.size() == 1 && 2 * support.front() != n) {
    return {Case::kEvenRegular, support.front(), 0, 0};
  }
  if (!affine) return {};
  const int j = *affine;
  for (int k = 1; k <= n; ++k) {
    if (2 * k != n && (j * (2 * k - 1)) % n == 0) {
      return {Case::kEvenCaseII, j, k, 0};
    }
  }
  const Complex bj = b[j];
  const Complex bnj = b[n - j];
  const double scale = std::max(std::abs(bj), std::abs(bnj));
  for (int k = 1; k <= n; ++k) {
    const Complex target = RootOfUnityPow<double>(n, j * (k + 1.5));
    for (int sign : {1, -1}) {
      if (std::abs(bj - double(sign) * target * bnj) <= tol * scale) {
        return {Case::kEvenCaseIII, j, k, sign};
      }
    }
  }
  return {};
}

std::optional<SimilarityWitness> PredictedWitness(const Polygon& p,
                                                  double tol) {
  using Case = Thm1Class::Case;
  const Thm1Class cls = ClassifyThm1(p, tol);
  if (!cls.in_list()) return std::nullopt;

  const int n = static_cast<int>(p.size());
  const int j = cls.j;
  const Complex qj = RootOfUnity(n, j);
  SimilarityWitness w;
  switch (cls.kind) {
    case Case::kOddAffinelyRegular:
      w.shift_k = (n + 3) / 2;
      w.scale_ell = (1.0 + qj) / (2.0 * RootOfUnity(n, j * (n + 1) / 2));
      break;
    case Case::kEvenRegular:
      w.scale_ell = Eigenvalue(n, j);
      break;
    case Case::kEvenCaseII:
      w.shift_k = cls.k % n + 1;
      w.scale_ell = (1.0 + qj) / (2.0 * RootOfUnity(n, cls.k * j));
      break;
    case Case::kEvenCaseIII:
      // The reversed shift whose coefficients are a_{n-i}·q^{i(k+1)}.
      w.orientation = Orientation::kReversed;
      w.shift_k = (n - cls.k % n) % n == 0 ? n : (n - cls.k % n);
      w.scale_ell = double(cls.sign) *
                    (RootOfUnityPow<double>(n, 0.5 * j) +
                     RootOfUnityPow<double>(n, -0.5 * j)) /
                    2.0;
      break;
    case Case::kNotInList:
      return std::nullopt;
  }

  const Polygon centered = Center(p);
  const Polygon q = Dedal(centered, tol);
  const double scale = centered.vertices().cwiseAbs().maxCoeff();
  if (MaxVertexError(centered, ApplyWitness(w, q)) > tol * scale) {
    throw std::logic_error("predicted similarity witness does not hold for " +
                           ToString(cls.kind));
  }
  return w;
}

}  // namespace fagnano
