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

// Exact single-excitation dynamics of two resonant qubits, each coupled to
// its own Lorentzian reservoir, with hopping J between the qubits. Everything
// is expressed in the rotating frame at the qubit frequency; gamma0 sets the
// time unit. The whole reduced state factors through one complex survival
// amplitude x(t).

#ifndef OPENQFI_DYNAMICS_HPP
#define OPENQFI_DYNAMICS_HPP

#include "openqfi/linalg.hpp"

namespace openqfi {

struct ModelParams {
  double gamma0 = 1.0;  // decay rate, the global time unit
  double lambda = 0.0;  // spectral width; 1/lambda is the reservoir memory time
  double J = 0.0;       // inter-qubit hopping, >= 0
};

// Throws std::invalid_argument unless gamma0 > 0, lambda > 0, J >= 0, all finite.
void validate(const ModelParams& p);

struct InitialCondition {
  cplx a0;       // amplitude of |eg>
  cplx b0;       // amplitude of |ge>
  double theta;  // embedded phase, multiplies a0 as e^{i theta}
};

// Throws std::invalid_argument unless |a0|^2 + |b0|^2 = 1 within 1e-12.
void validate(const InitialCondition& init);

// Real a0 in [0, 1], b0 = sqrt(1 - a0^2).
InitialCondition make_init(double a0, double theta);
InitialCondition bell_init(double theta);

struct AmplitudeState {
  double t;
  cplx a;          // amplitude of |eg>
  cplx b;          // amplitude of |ge>
  cplx x;          // survival amplitude; |a|^2 + |b|^2 = |x|^2
  cplx da_dtheta;
  cplx db_dtheta;
};

// 4x4 density matrix in the basis {|ee>, |eg>, |ge>, |gg>}.
using DensityMatrix4 = CMat4;

// d = sqrt(-J^2 - 2iJ*lambda + lambda*(lambda - 2*gamma0)), principal branch.
// The solution below is even in d, so the branch choice is immaterial.
cplx compute_d(const ModelParams& p);

// h = cosh(d t/2) + (lambda - iJ)/d * sinh(d t/2), with sinh(z)/d evaluated
// by series when |d t| < 1e-6 so the d -> 0 limit h = 1 + (lambda - iJ) t/2
// is exact. Exposed with an explicit d for branch-invariance checks.
cplx compute_h(const ModelParams& p, double t, cplx d);

// x(t) = e^{-(lambda + iJ) t / 2} h(t). Requires t >= 0.
cplx compute_x(const ModelParams& p, double t);

// a(t) = Re(x) a0 e^{i theta} + i Im(x) b0, b(t) = i Im(x) a0 e^{i theta} + Re(x) b0,
// plus the analytic theta-derivatives. Requires t >= 0 and a normalized init.
AmplitudeState propagate(const ModelParams& p, const InitialCondition& init, double t);

// rho with rho22 = |a|^2, rho23 = a b*, rho33 = |b|^2, rho44 = 1 - |a|^2 - |b|^2.
DensityMatrix4 reduced_density(const AmplitudeState& s);

}  // namespace openqfi

#endif  // OPENQFI_DYNAMICS_HPP
