// Copyright 2026 The entfb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <random>

#include "entfb/types.hpp"

namespace entfb::testing {

inline Operator random_operator(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Operator m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(n(rng), n(rng));
  return m;
}

inline Operator random_hermitian(std::mt19937_64& rng) {
  const Operator g = random_operator(rng);
  return 0.5 * (g + g.adjoint());
}

/// G G^dagger / tr, full rank with probability one.
inline Operator random_density(std::mt19937_64& rng) {
  const Operator g = random_operator(rng);
  const Operator rho = g * g.adjoint();
  return rho / rho.trace();
}

inline StateVector random_pure(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  StateVector v;
  for (int k = 0; k < 4; ++k) v(k) = Complex(n(rng), n(rng));
  return v.normalized();
}

/// Haar-ish unitary from the QR of a Gaussian matrix.
template <int N>
Eigen::Matrix<Complex, N, N> random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Matrix<Complex, N, N> g;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) g(r, c) = Complex(n(rng), n(rng));
  Eigen::HouseholderQR<Eigen::Matrix<Complex, N, N>> qr(g);
  return qr.householderQ();
}

/// Embeds a single-site operator given in the (e, g) basis by explicit index
/// arithmetic: index = s1 + 2 s2 with e = 0, g = 1.
inline Operator embed_by_index(const Eigen::Matrix2cd& op, int site) {
  Operator m = Operator::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int si1 = i % 2, si2 = i / 2, sj1 = j % 2, sj2 = j / 2;
      if (site == 1 && si2 == sj2) m(i, j) = op(si1, sj1);
      if (site == 2 && si1 == sj1) m(i, j) = op(si2, sj2);
    }
  return m;
}

template <typename M>
double max_abs(const M& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace entfb::testing
