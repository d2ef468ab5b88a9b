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

// Quantum Fisher information for the embedded phase, by three routes:
//   closed_form        F = 4 |a0 b0|^2 |x|^2
//   amplitude_formula  F = 4 |b da/dtheta - a db/dtheta|^2 / (|a|^2 + |b|^2)
//   spectral           eigendecomposition of rho with the analytic d rho/d theta
// plus the Cramer-Rao precision bound 1/sqrt(N F).

#ifndef OPENQFI_METROLOGY_HPP
#define OPENQFI_METROLOGY_HPP

#include <cstdint>

#include "openqfi/dynamics.hpp"

namespace openqfi {

enum class QfiMethod { closed_form, amplitude_formula, spectral };

struct QfiResult {
  double value;  // >= 0; bounded by 4 for any state of this family
  QfiMethod method;
};

QfiResult qfi_closed(const InitialCondition& init, cplx x);

// Returns 0 for a fully decayed state (|a|^2 + |b|^2 <= 1e-14), by continuity.
QfiResult qfi_amplitude(const AmplitudeState& s);

// Analytic d rho / d theta assembled from da_dtheta and db_dtheta.
DensityMatrix4 density_theta_derivative(const AmplitudeState& s);

// General spectral formula: sum over eigenpairs (i, j) of
// 2 |<v_i| drho |v_j>|^2 / (lambda_i + lambda_j), skipping pairs with
// lambda_i + lambda_j < 1e-12 (the state is rank <= 2 analytically; the
// threshold rejects round-off eigenvalues). Diagonal terms reproduce
// (d lambda_i)^2 / lambda_i. Throws if drho is not Hermitian and traceless
// within 1e-10.
QfiResult qfi_spectral(const DensityMatrix4& rho, const DensityMatrix4& drho);

// 1 / sqrt(n_repeats * F). Throws std::domain_error when F <= 0 (the bound
// is unbounded) or n_repeats == 0.
double cramer_rao(const QfiResult& f, std::uint64_t n_repeats);

}  // namespace openqfi

#endif  // OPENQFI_METROLOGY_HPP
