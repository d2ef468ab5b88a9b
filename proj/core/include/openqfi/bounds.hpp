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

// QFI-LQU inequality analysis: delta1 = F - U and delta2 = 2U - F, the J = 0
// closed-form surfaces over (m, n) = (|a0|^2, |x0|^2), grid extremization,
// seeded Monte Carlo scans, and the precision bound 1/sqrt(U).

#ifndef OPENQFI_BOUNDS_HPP
#define OPENQFI_BOUNDS_HPP

#include <cstdint>
#include <numbers>
#include <vector>

#include "openqfi/dynamics.hpp"

namespace openqfi {

struct BoundSample {
  ModelParams params;
  InitialCondition init;
  double t;
  double qfi;
  double lqu;
  double delta1;  // qfi - lqu
  double delta2;  // 2 lqu - qfi
};

enum class ScanConstraint { j_zero, bell_init, unconstrained };

struct ParamRanges {
  double lambda_min = 0.01, lambda_max = 2.0;
  double t_min = 0.0, t_max = 20.0;
  double a0_min = 0.0, a0_max = 1.0;
  double theta_min = 0.0, theta_max = 2.0 * std::numbers::pi;
  double j_min = 0.0, j_max = 3.0;
};

struct ScanConfig {
  std::uint64_t n_samples = 10000;
  std::uint64_t seed = 1;
  ParamRanges ranges;
  ScanConstraint constraint = ScanConstraint::unconstrained;
};

void validate(const ScanConfig& cfg);

// propagate + closed-form QFI and LQU, assembled into one record.
BoundSample evaluate_sample(const ModelParams& p, const InitialCondition& init, double t);

// J = 0 closed-form surfaces. LQU selects the smaller of
// U1 = 1 - 2 m sqrt(n (1-n)) and U2 = 4 m (1-m) n = F; u1_active reports
// which branch the deltas were evaluated on.
struct DeltaSurfacePoint {
  double m;
  double n;
  double delta1;
  double delta2;
  bool u1_active;
};

DeltaSurfacePoint delta_surface(double m, double n);

struct GridExtrema {
  double max_delta1;
  double argmax_m, argmax_n;
  double min_delta2;
  double argmin_m, argmin_n;
};

// Branch-aware extremization of delta1, delta2 over a resolution^2 grid on
// [0,1]^2. Requires resolution >= 2.
GridExtrema delta_grid_extrema(int resolution);

// Seeded deterministic scan; gamma0 = 1 fixed, draws (lambda, t, a0, theta, J)
// per sample from a per-sample splitmix64 stream, then applies the constraint
// (j_zero: J = 0; bell_init: a0 = b0 = 1/sqrt(2), theta kept random).
// Identical config => identical output, independent of evaluation order.
std::vector<BoundSample> monte_carlo_scan(const ScanConfig& cfg);

// 1/sqrt(lqu). Throws std::domain_error when lqu <= 0 (bound vacuous).
// For J = 0 samples additionally checks the chain 1/sqrt(F) <= 1/sqrt(U) + 1e-12
// and throws std::logic_error on violation.
double precision_bound(const BoundSample& sample);

}  // namespace openqfi

#endif  // OPENQFI_BOUNDS_HPP
