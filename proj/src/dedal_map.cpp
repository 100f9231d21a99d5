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

#include "fagnano/dedal_map.hpp"

#include "fagnano/spectral.hpp"

namespace fagnano {

Polygon DedalOdd(const Polygon& p) {
  const Eigen::Index n = p.size();
  if (n % 2 == 0) throw std::invalid_argument("DedalOdd needs odd n");
  Eigen::VectorXcd w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex sum(0.0);
    for (Eigen::Index t = 0; t < n; ++t) {
      const Complex z = p[(i + t) % n];
      sum += (t % 2 == 0) ? z : -z;
    }
    w[i] = sum;
  }
  return Polygon(std::move(w));
}

Complex ExistenceDefect(const Polygon& p) {
  const Eigen::Index n = p.size();
  if (n % 2 != 0) throw std::invalid_argument("ExistenceDefect needs even n");
  Complex sum(0.0);
  for (Eigen::Index i = 0; i < n; ++i) sum += (i % 2 == 0) ? p[i] : -p[i];
  return sum;
}

double ExistenceThreshold(const Polygon& p, double tol) {
  return tol * (1.0 + p.vertices().cwiseAbs().maxCoeff());
}

DedalFamily DedalEven(const Polygon& p, double tol) {
  const Eigen::Index n = p.size();
  const Complex defect = ExistenceDefect(p);
  if (std::abs(defect) > ExistenceThreshold(p, tol)) throw NoDedalError(defect);

  SpectralCoefficients c = Decompose(p);
  for (Eigen::Index i = 0; i < n; ++i) {
    c[i] = (2 * i == n) ? Complex(0.0) : c[i] / Eigenvalue(n, i);
  }
  return DedalFamily{Reconstruct(c), BasisVector(n, n / 2)};
}

Polygon FamilyMember(const DedalFamily& family, Complex s) {
  return family.base_q0 + s * family.kernel;
}

Polygon DedalThroughVertex(const DedalFamily& family, int i, Complex w) {
  if (i < 1 || i > family.n()) throw std::out_of_range("vertex index");
  const double sign = (i % 2 == 1) ? 1.0 : -1.0;
  return FamilyMember(family, (w - family.base_q0[i - 1]) * sign);
}

Polygon Dedal(const Polygon& p, double tol) {
  if (p.size() % 2 == 1) return DedalOdd(p);
  return DedalEven(p, tol).base_q0;
}

}  // namespace fagnano
