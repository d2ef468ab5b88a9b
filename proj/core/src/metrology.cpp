// Copyright 2026 The openqfi Authors
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

#include "openqfi/metrology.hpp"

#include <cmath>
#include <stdexcept>

namespace openqfi {

QfiResult qfi_closed(const InitialCondition& init, cplx x) {
  validate(init);
  const double w = std::norm(init.a0) * std::norm(init.b0);
  return {4.0 * w * std::norm(x), QfiMethod::closed_form};
}

QfiResult qfi_amplitude(const AmplitudeState& s) {
  const double lam1 = std::norm(s.a) + std::norm(s.b);
  if (lam1 <= 1e-14) return {0.0, QfiMethod::amplitude_formula};
  const cplx num = s.b * s.da_dtheta - s.a * s.db_dtheta;
  return {4.0 * std::norm(num) / lam1, QfiMethod::amplitude_formula};
}

DensityMatrix4 density_theta_derivative(const AmplitudeState& s) {
  const double d22 = 2.0 * std::real(std::conj(s.a) * s.da_dtheta);
  const double d33 = 2.0 * std::real(std::conj(s.b) * s.db_dtheta);
  DensityMatrix4 d;
  d(1, 1) = d22;
  d(1, 2) = s.da_dtheta * std::conj(s.b) + s.a * std::conj(s.db_dtheta);
  d(2, 1) = std::conj(d(1, 2));
  d(2, 2) = d33;
  d(3, 3) = -d22 - d33;
  return d;
}

QfiResult qfi_spectral(const DensityMatrix4& rho, const DensityMatrix4& drho) {
  if (hermiticity_defect(drho) > 1e-10)
    throw std::invalid_argument("qfi_spectral: derivative is not Hermitian");
  if (std::abs(trace(drho)) > 1e-10)
    throw std::invalid_argument("qfi_spectral: derivative is not traceless");

  const EigenDecomposition<4> ed = eigh(rho);

  // Matrix elements <v_i| drho |v_j> in the eigenbasis.
  CMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx acc{};
      for (int r = 0; r < 4; ++r) {
        const cplx vir = ed.eigenvectors(r, i);
        if (vir == cplx{}) continue;
        cplx row{};
        for (int c = 0; c < 4; ++c) row += drho(r, c) * ed.eigenvectors(c, j);
        acc += std::conj(vir) * row;
      }
      m(i, j) = acc;
    }

  constexpr double kRankThreshold = 1e-12;
  double f = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double denom = ed.eigenvalues[static_cast<std::size_t>(i)] +
                           ed.eigenvalues[static_cast<std::size_t>(j)];
      if (denom < kRankThreshold) continue;
      f += 2.0 * std::norm(m(i, j)) / denom;
    }
  return {f, QfiMethod::spectral};
}

double cramer_rao(const QfiResult& f, std::uint64_t n_repeats) {
  if (n_repeats == 0) throw std::domain_error("cramer_rao: n_repeats must be positive");
  if (!(f.value > 0.0))
    throw std::domain_error("cramer_rao: zero QFI gives an unbounded variance");
  return 1.0 / std::sqrt(static_cast<double>(n_repeats) * f.value);
}

}  // namespace openqfi
