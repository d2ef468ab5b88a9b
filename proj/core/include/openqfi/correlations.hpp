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

// Local quantum uncertainty: the minimum Wigner-Yanase skew information
// -1/2 Tr[sqrt(rho), K]^2 over local observables K = n.sigma on qubit A.
// Three routes: the closed form 1 - max(W1, W2), the definitional
// 1 - lambda_max(W) with the full 3x3 W matrix, and brute-force grid
// minimization over Bloch directions.

#ifndef OPENQFI_CORRELATIONS_HPP
#define OPENQFI_CORRELATIONS_HPP

#include <array>

#include "openqfi/dynamics.hpp"

namespace openqfi {

enum class LquMethod { closed_form, w_matrix, brute_force };

struct LquResult {
  double value;  // in [0, 1]
  double w1;
  double w2;
  LquMethod method;
};

// Unit Bloch vector n; the observable is K = n.sigma (x) I with spectrum {+1, -1}.
struct LocalObservable {
  std::array<double, 3> bloch;
};

// Throws std::invalid_argument unless ||n|| = 1 within 1e-12.
void validate(const LocalObservable& k);

// n.sigma (x) I in the basis {|ee>, |eg>, |ge>, |gg>} (A is the first factor).
CMat4 observable_matrix(const LocalObservable& k);

// I(rho, K) = Tr(rho K^2) - Tr(sqrt(rho) K sqrt(rho) K), clamped to >= 0.
double skew_information(const DensityMatrix4& rho, const LocalObservable& k);

// (W)_ij = Tr(sqrt(rho) sigma_i(x)I sqrt(rho) sigma_j(x)I), symmetrized.
// Entries are real; returned as a 3x3 matrix compatible with eigh.
CMat3 w_matrix(const DensityMatrix4& rho);

// 1 - lambda_max(W). Reports w1 = lambda_max, w2 = lambda_min.
LquResult lqu_w_matrix(const DensityMatrix4& rho);

// W1 = 2 |a|^2 sqrt(lambda2/lambda1), W2 = 1 - 4 |a b|^2 / lambda1,
// U = 1 - max(W1, W2). Returns 0 for a fully decayed state (lambda1 <= 1e-14,
// the state being the pure product |gg>).
LquResult lqu_closed(const AmplitudeState& s);

// Minimum skew information over a deterministic Fibonacci-sphere grid of
// grid_resolution^2 Bloch directions; an upper bound on the true LQU.
// Requires grid_resolution >= 32.
LquResult lqu_brute_force(const DensityMatrix4& rho, int grid_resolution);

}  // namespace openqfi

#endif  // OPENQFI_CORRELATIONS_HPP
