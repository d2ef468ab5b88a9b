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

#include "openqfi/correlations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace openqfi {

namespace {

// T = S * (n.sigma (x) I) for Hermitian S, exploiting the two-entries-per-row
// sparsity of the observable. w = nx + i ny.
CMat4 times_observable(const CMat4& s, double nx, double ny, double nz) {
  const cplx w{nx, ny};
  const cplx wc = std::conj(w);
  CMat4 t;
  for (int r = 0; r < 4; ++r) {
    t(r, 0) = s(r, 0) * nz + s(r, 2) * w;
    t(r, 1) = s(r, 1) * nz + s(r, 3) * w;
    t(r, 2) = s(r, 0) * wc - s(r, 2) * nz;
    t(r, 3) = s(r, 1) * wc - s(r, 3) * nz;
  }
  return t;
}

double trace_product_real(const CMat4& u, const CMat4& v) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += std::real(u(i, j) * v(j, i));
  return acc;
}

}  // namespace

void validate(const LocalObservable& k) {
  const double n2 = k.bloch[0] * k.bloch[0] + k.bloch[1] * k.bloch[1] +
                    k.bloch[2] * k.bloch[2];
  if (!std::isfinite(n2) || std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    throw std::invalid_argument("LocalObservable: Bloch vector must be unit length");
}

CMat4 observable_matrix(const LocalObservable& k) {
  const double nx = k.bloch[0], ny = k.bloch[1], nz = k.bloch[2];
  const cplx w{nx, ny};
  CMat4 m;
  m(0, 0) = nz;
  m(0, 2) = std::conj(w);
  m(1, 1) = nz;
  m(1, 3) = std::conj(w);
  m(2, 0) = w;
  m(2, 2) = -nz;
  m(3, 1) = w;
  m(3, 3) = -nz;
  return m;
}

double skew_information(const DensityMatrix4& rho, const LocalObservable& k) {
  validate(k);
  const CMat4 s = psd_sqrt(rho);
  const CMat4 kk = observable_matrix(k);
  const CMat4 rk = rho * kk;
  const double tr_rho_k2 = trace_product_real(rk, kk);
  const CMat4 sk = s * kk;
  const double tr_sksk = trace_product_real(sk, sk);
  const double v = tr_rho_k2 - tr_sksk;
  return v > 0.0 ? v : 0.0;
}

CMat3 w_matrix(const DensityMatrix4& rho) {
  const CMat4 s = psd_sqrt(rho);
  const std::array<std::array<double, 3>, 3> axes{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::array<CMat4, 3> t;
  for (int i = 0; i < 3; ++i)
    t[static_cast<std::size_t>(i)] =
        times_observable(s, axes[static_cast<std::size_t>(i)][0],
                         axes[static_cast<std::size_t>(i)][1],
                         axes[static_cast<std::size_t>(i)][2]);

  CMat3 w;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const double v = trace_product_real(t[static_cast<std::size_t>(i)],
                                          t[static_cast<std::size_t>(j)]);
      w(i, j) = v;
      w(j, i) = v;
    }
  return w;
}

LquResult lqu_w_matrix(const DensityMatrix4& rho) {
  const EigenDecomposition<3> ed = eigh(w_matrix(rho));
  const double wmax = ed.eigenvalues[2];
  const double wmin = ed.eigenvalues[0];
  return {1.0 - wmax, wmax, wmin, LquMethod::w_matrix};
}

LquResult lqu_closed(const AmplitudeState& s) {
  // The nonzero eigenvalue of the coherence block equals |x|^2 by the norm
  // identity; forming it from |a|^2 + |b|^2 instead would turn the exact
  // x = 1 at t = 0 into 1 - eps, and sqrt(1 - lam1) amplifies that to 1e-8.
  const double lam1 = std::norm(s.x);
  if (lam1 <= 1e-14) return {0.0, 1.0, 1.0, LquMethod::closed_form};
  const double lam2 = 1.0 - lam1;
  const double w1 = 2.0 * std::norm(s.a) * std::sqrt(std::max(lam2, 0.0) / lam1);
  const double w2 = 1.0 - 4.0 * std::norm(s.a) * std::norm(s.b) / lam1;
  return {1.0 - std::max(w1, w2), w1, w2, LquMethod::closed_form};
}

LquResult lqu_brute_force(const DensityMatrix4& rho, int grid_resolution) {
  if (grid_resolution < 32)
    throw std::invalid_argument("lqu_brute_force: grid_resolution must be >= 32");

  const CMat4 s = psd_sqrt(rho);
  const long n = static_cast<long>(grid_resolution) * grid_resolution;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));

  double best = 2.0;
  for (long i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(i);
    const double nx = r * std::cos(phi);
    const double ny = r * std::sin(phi);

    // K^2 = I for a unit Bloch vector, so Tr(rho K^2) = 1 and the skew
    // information reduces to 1 - Tr((S K)^2).
    const CMat4 t = times_observable(s, nx, ny, z);
    const double skew = 1.0 - trace_product_real(t, t);
    if (skew < best) best = skew;
  }
  best = best > 0.0 ? best : 0.0;
  return {best, 1.0 - best, 1.0 - best, LquMethod::brute_force};
}

}  // namespace openqfi
