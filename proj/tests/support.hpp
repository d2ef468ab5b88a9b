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

// Shared draw protocol and numeric helpers for the unit and acceptance
// suites. Header is doctest-free so the acceptance binary can include it.

#ifndef OPENQFI_TESTS_SUPPORT_HPP
#define OPENQFI_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "openqfi/dynamics.hpp"
#include "openqfi/linalg.hpp"
#include "openqfi/rng.hpp"

namespace testsupport {

// Relative difference with an absolute floor so that exact zeros compare
// equal instead of dividing by zero.
inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
}

struct Draw {
  openqfi::ModelParams p;
  openqfi::InitialCondition init;
  double t;
};

// One (params, init, t) draw from the per-sample stream. min_x2 > 0 rejects
// draws whose survival probability |x|^2 has collapsed below it (the spectral
// QFI route divides by eigenvalue sums of that size); rejected draws redraw
// from the same stream, so the protocol stays deterministic per (seed, index).
inline Draw draw_sample(std::uint64_t seed, std::uint64_t index,
                        double min_x2 = 0.0) {
  openqfi::SplitMix64 rng = openqfi::sample_stream(seed, index);
  for (;;) {
    const double lambda = rng.next_in(0.01, 2.0);
    const double t = rng.next_in(0.0, 20.0);
    const double a0 = rng.next_in(0.0, 1.0);
    const double theta = rng.next_in(0.0, 2.0 * std::numbers::pi);
    const double J = rng.next_in(0.0, 3.0);
    const openqfi::ModelParams p{1.0, lambda, J};
    if (min_x2 > 0.0 && std::norm(openqfi::compute_x(p, t)) <= min_x2) continue;
    return Draw{p, openqfi::make_init(a0, theta), t};
  }
}

inline double gaussian(openqfi::SplitMix64& rng) {
  // Box-Muller; u1 in (0,1] to keep the log finite.
  const double u1 = 1.0 - rng.next_double();
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
// Quality is irrelevant here; the tests only need exact unitarity.
template <int N>
openqfi::CMat<N> random_unitary(openqfi::SplitMix64& rng) {
  openqfi::CMat<N> u;
  for (int j = 0; j < N; ++j) {
    std::array<openqfi::cplx, N> col;
    for (int i = 0; i < N; ++i) col[i] = {gaussian(rng), gaussian(rng)};
    for (int k = 0; k < j; ++k) {
      openqfi::cplx proj = 0.0;
      for (int i = 0; i < N; ++i) proj += std::conj(u(i, k)) * col[i];
      for (int i = 0; i < N; ++i) col[i] -= proj * u(i, k);
    }
    double nrm = 0.0;
    for (int i = 0; i < N; ++i) nrm += std::norm(col[i]);
    nrm = std::sqrt(nrm);
    for (int i = 0; i < N; ++i) u(i, j) = col[i] / nrm;
  }
  return u;
}

inline std::string cli_path() {
  const char* p = std::getenv("OPENQFI_CLI");
  return p == nullptr ? std::string{} : std::string{p};
}

// Runs the CLI with the given argument string; returns the process exit code
// or -1 when the process did not terminate normally.
inline int run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args;
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return (status & 0x7f) == 0 ? (status >> 8) & 0xff : -1;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace testsupport

#endif  // OPENQFI_TESTS_SUPPORT_HPP
