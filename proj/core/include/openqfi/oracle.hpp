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

// Two independent numerical solvers validating the analytic amplitudes:
//  1. pseudomode ODE: the memory integral with the exponential kernel
//     f(s) = (gamma0 lambda / 2) e^{-lambda s} is exactly equivalent to one
//     auxiliary local variable per amplitude (z' = (gamma0 lambda/2) a - lambda z),
//     so this oracle has no discretization error beyond the integrator's.
//  2. discretized bath: the full single-excitation Schroedinger equation with
//     n_modes sampled from the Lorentzian spectral density, integrated in the
//     interaction picture. Valid below the recurrence time 2 pi / delta_omega.
// Both use fixed-step classical RK4; steps always land exactly on record
// times (the step is shrunk per segment, never interpolated).

#ifndef OPENQFI_ORACLE_HPP
#define OPENQFI_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "openqfi/dynamics.hpp"

namespace openqfi {

// I(omega0 + delta) = (gamma0 lambda^2 / 2 pi) / (lambda^2 + delta^2).
double lorentzian_spectral_density(const ModelParams& p, double detuning);

// f(s) = (gamma0 lambda / 2) e^{-lambda s}, the whole-line Fourier transform
// of the Lorentzian spectral density. Requires s >= 0.
cplx lorentzian_kernel(const ModelParams& p, double s);

struct OdeState {
  cplx a, b;
  cplx z_a, z_b;  // memory integrals; zero at t = 0
};

struct PseudomodeTrajectory {
  std::vector<double> times;      // uniform grid including t = 0 and t_end
  std::vector<OdeState> states;
};

// RK4 with step t_end / ceil(t_end / dt) <= dt, one record per step.
// Throws on dt <= 0 or a non-finite state.
PseudomodeTrajectory pseudomode_evolve(const ModelParams& p,
                                       const InitialCondition& init,
                                       double t_end, double dt);

// Uniform midpoint frequency grid over [-W, W] around the qubit frequency
// (stored as detunings omega_k - omega0; the absolute frequency never enters
// the rotating-frame dynamics), couplings g_k = sqrt(I(omega_k) d_omega).
struct BathDiscretization {
  std::size_t n_modes;
  double half_width;               // W = window_mult * lambda
  std::vector<double> detunings;
  std::vector<double> couplings;

  double mode_spacing() const { return 2.0 * half_width / static_cast<double>(n_modes); }
  double recurrence_time() const;  // 2 pi / mode spacing
};

BathDiscretization make_bath(const ModelParams& p, std::size_t n_modes,
                             double window_mult);

struct FullState {
  cplx a, b;
  std::vector<cplx> c, d;  // interaction-picture mode amplitudes

  double norm_sq() const;  // conserved at 1 by the unitary dynamics
};

struct BathTrajectory {
  std::vector<double> times;
  std::vector<FullState> states;
  bool recurrence_warning;  // t_end exceeded the recurrence-time estimate
};

// RK4 on the (2 + 2 n_modes)-dimensional linear system, recording n_records
// uniformly spaced snapshots (including t = 0 and t_end). Throws on dt <= 0
// or a non-finite state.
BathTrajectory discretized_bath_evolve(const ModelParams& p,
                                       const InitialCondition& init,
                                       const BathDiscretization& disc,
                                       double t_end, double dt,
                                       std::size_t n_records = 101);

struct OracleOptions {
  double pseudomode_dt = 1e-3;
  double bath_dt = 1e-3;
  std::size_t n_modes = 4000;
  double window_mult = 40.0;
  bool run_bath = true;  // when false the bath fields of the report are NaN
};

struct OracleReport {
  double max_analytic_pseudomode, rms_analytic_pseudomode;
  double max_analytic_bath, rms_analytic_bath;
  double max_pseudomode_bath, rms_pseudomode_bath;
  bool recurrence_warning;
};

// Deviations of (a, b) among {analytic, pseudomode, bath} over t_grid
// (ascending, nonnegative). Per-point deviation is max(|da|, |db|); the
// report carries the max and RMS of that over the grid.
OracleReport compare_oracles(const ModelParams& p, const InitialCondition& init,
                             const std::vector<double>& t_grid,
                             const OracleOptions& opts);

}  // namespace openqfi

#endif  // OPENQFI_ORACLE_HPP
