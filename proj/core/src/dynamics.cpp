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

#include "openqfi/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace openqfi {

void validate(const ModelParams& p) {
  if (!(std::isfinite(p.gamma0) && std::isfinite(p.lambda) && std::isfinite(p.J)))
    throw std::invalid_argument("ModelParams: non-finite value");
  if (!(p.gamma0 > 0.0)) throw std::invalid_argument("ModelParams: gamma0 must be > 0");
  if (!(p.lambda > 0.0)) throw std::invalid_argument("ModelParams: lambda must be > 0");
  if (!(p.J >= 0.0)) throw std::invalid_argument("ModelParams: J must be >= 0");
}

void validate(const InitialCondition& init) {
  const double n = std::norm(init.a0) + std::norm(init.b0);
  if (!std::isfinite(n) || !std::isfinite(init.theta))
    throw std::invalid_argument("InitialCondition: non-finite value");
  if (std::abs(n - 1.0) > 1e-12)
    throw std::invalid_argument("InitialCondition: |a0|^2 + |b0|^2 must equal 1");
}

InitialCondition make_init(double a0, double theta) {
  if (!(a0 >= 0.0 && a0 <= 1.0))
    throw std::invalid_argument("make_init: a0 must lie in [0, 1]");
  return InitialCondition{a0, std::sqrt(1.0 - a0 * a0), theta};
}

InitialCondition bell_init(double theta) {
  const double r = std::sqrt(0.5);  // correctly rounded 1/sqrt(2)
  return InitialCondition{r, r, theta};
}

cplx compute_d(const ModelParams& p) {
  validate(p);
  // The +0.0 turns the -0.0 imaginary part at J = 0 into +0.0 so that the
  // principal square root lands on the +i side of the branch cut. The
  // dynamics is even in d, so only reported values care.
  const cplx radicand{-p.J * p.J + p.lambda * (p.lambda - 2.0 * p.gamma0),
                      -2.0 * p.J * p.lambda + 0.0};
  return std::sqrt(radicand);
}

cplx compute_h(const ModelParams& p, double t, cplx d) {
  const cplx z = 0.5 * d * t;
  cplx sinh_over_d;  // sinh(d t/2)/d, even in d
  if (std::abs(d) * t < 1e-6) {
    const cplx z2 = z * z;
    sinh_over_d = 0.5 * t * (1.0 + z2 / 6.0 + z2 * z2 / 120.0);
  } else {
    sinh_over_d = std::sinh(z) / d;
  }
  return std::cosh(z) + cplx{p.lambda, -p.J} * sinh_over_d;
}

cplx compute_x(const ModelParams& p, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("compute_x: t must be >= 0");
  const cplx d = compute_d(p);
  return std::exp(cplx{-0.5 * p.lambda * t, -0.5 * p.J * t}) * compute_h(p, t, d);
}

AmplitudeState propagate(const ModelParams& p, const InitialCondition& init, double t) {
  validate(init);
  if (!(t >= 0.0)) throw std::invalid_argument("propagate: t must be >= 0");

  const cplx x = compute_x(p, t);
  const double re = x.real();
  const double im = x.imag();
  const cplx a0_rot = init.a0 * std::exp(cplx{0.0, init.theta});

  AmplitudeState s;
  s.t = t;
  s.x = x;
  s.a = re * a0_rot + cplx{0.0, im} * init.b0;
  s.b = cplx{0.0, im} * a0_rot + re * init.b0;
  s.da_dtheta = cplx{0.0, 1.0} * re * a0_rot;
  s.db_dtheta = -im * a0_rot;
  return s;
}

DensityMatrix4 reduced_density(const AmplitudeState& s) {
  const double pa = std::norm(s.a);
  const double pb = std::norm(s.b);
  DensityMatrix4 rho;
  rho(1, 1) = pa;
  rho(1, 2) = s.a * std::conj(s.b);
  rho(2, 1) = std::conj(rho(1, 2));
  rho(2, 2) = pb;
  rho(3, 3) = 1.0 - pa - pb;
  return rho;
}

}  // namespace openqfi
