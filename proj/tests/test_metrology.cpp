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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "openqfi/dynamics.hpp"
#include "openqfi/metrology.hpp"
#include "support.hpp"

using openqfi::cplx;
using openqfi::ModelParams;

namespace {

openqfi::AmplitudeState evolved(const testsupport::Draw& d) {
  return openqfi::propagate(d.p, d.init, d.t);
}

}  // namespace

TEST_CASE("qfi_closed: checkpoints") {
  // Bell state before any decay carries one unit of Fisher information.
  CHECK(openqfi::qfi_closed(openqfi::bell_init(0.7), cplx{1.0, 0.0}).value ==
        doctest::Approx(1.0).epsilon(1e-14));
  // Product states carry none (b0 = 0 exactly, so the product is exact).
  CHECK(openqfi::qfi_closed(openqfi::make_init(1.0, 0.3), cplx{0.9, 0.1}).value ==
        0.0);
  // At t = 0 the QFI is 4|a0 b0|^2 for any admissible split.
  const auto init = openqfi::make_init(0.6, 1.1);
  CHECK(openqfi::qfi_closed(init, cplx{1.0, 0.0}).value ==
        doctest::Approx(4.0 * 0.36 * 0.64).epsilon(1e-14));
}

TEST_CASE("qfi_amplitude: agrees with the closed form on random draws") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto d = testsupport::draw_sample(0xF15Bu, i);
    const auto s = evolved(d);
    const double f_closed = openqfi::qfi_closed(d.init, s.x).value;
    const double f_amp = openqfi::qfi_amplitude(s).value;
    CHECK(testsupport::rel_diff(f_closed, f_amp) < 1e-10);
  }
}

TEST_CASE("qfi_amplitude: defined as zero on a fully decayed state") {
  const openqfi::AmplitudeState dead{5.0, cplx{0.0, 0.0}, cplx{0.0, 0.0},
                                     cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}};
  CHECK(openqfi::qfi_amplitude(dead).value == 0.0);
}

TEST_CASE("qfi_spectral: agrees with the closed form on random draws") {
  // The spectral route conditions on |x|^2 staying above the rank threshold;
  // draws below it are rejected (redrawn), matching its documented domain.
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto d = testsupport::draw_sample(0x5BECu, i, 1e-10);
    const auto s = evolved(d);
    const auto rho = openqfi::reduced_density(s);
    const auto drho = openqfi::density_theta_derivative(s);
    const double f_spec = openqfi::qfi_spectral(rho, drho).value;
    const double f_closed = openqfi::qfi_closed(d.init, s.x).value;
    CHECK(testsupport::rel_diff(f_spec, f_closed) < 1e-8);
  }
}

TEST_CASE("qfi_spectral: zero derivative gives zero information") {
  const auto s = openqfi::propagate(ModelParams{1.0, 0.2, 1.0},
                                    openqfi::bell_init(0.0), 1.0);
  const auto rho = openqfi::reduced_density(s);
  const openqfi::DensityMatrix4 zero{};
  CHECK(openqfi::qfi_spectral(rho, zero).value == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("qfi_spectral: input validation") {
  const auto s = openqfi::propagate(ModelParams{1.0, 0.2, 1.0},
                                    openqfi::bell_init(0.0), 1.0);
  const auto rho = openqfi::reduced_density(s);

  openqfi::DensityMatrix4 skew{};
  skew(1, 2) = cplx{0.0, 0.25};  // not Hermitian
  CHECK_THROWS_AS(openqfi::qfi_spectral(rho, skew), std::invalid_argument);

  openqfi::DensityMatrix4 traced{};
  traced(1, 1) = 0.5;  // Hermitian but not traceless
  CHECK_THROWS_AS(openqfi::qfi_spectral(rho, traced), std::invalid_argument);
}

TEST_CASE("density_theta_derivative: traceless Hermitian, matches finite differences") {
  const ModelParams p{1.0, 0.15, 1.5};
  const double eps = 1e-5;
  const double theta = 0.9;
  const auto mid = openqfi::propagate(p, openqfi::make_init(0.6, theta), 2.0);
  const auto drho = openqfi::density_theta_derivative(mid);
  CHECK(openqfi::hermiticity_defect(drho) < 1e-14);
  CHECK(std::abs(openqfi::trace(drho)) < 1e-14);

  const auto lo = openqfi::reduced_density(
      openqfi::propagate(p, openqfi::make_init(0.6, theta - eps), 2.0));
  const auto hi = openqfi::reduced_density(
      openqfi::propagate(p, openqfi::make_init(0.6, theta + eps), 2.0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx fd = (hi(i, j) - lo(i, j)) / (2.0 * eps);
      CHECK(std::abs(drho(i, j) - fd) < 1e-8);
    }
}

TEST_CASE("qfi is independent of the phase being estimated") {
  // Shifting theta rotates the coherences but cannot change the information.
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto d = testsupport::draw_sample(0x7E7Au, i, 1e-10);
    double f[4];
    int k = 0;
    for (double theta : {0.0, std::numbers::pi / 4.0, std::numbers::pi}) {
      openqfi::InitialCondition init = d.init;
      init.theta = theta;
      const auto s = openqfi::propagate(d.p, init, d.t);
      f[k++] = openqfi::qfi_spectral(openqfi::reduced_density(s),
                                     openqfi::density_theta_derivative(s)).value;
    }
    CHECK(std::abs(f[0] - f[1]) < 1e-10);
    CHECK(std::abs(f[0] - f[2]) < 1e-10);
  }
}

TEST_CASE("cramer_rao: scaling and domain") {
  CHECK(openqfi::cramer_rao({1.0, openqfi::QfiMethod::closed_form}, 1) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(openqfi::cramer_rao({4.0, openqfi::QfiMethod::closed_form}, 1) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(openqfi::cramer_rao({0.64, openqfi::QfiMethod::closed_form}, 1) ==
        doctest::Approx(1.25).epsilon(1e-14));
  // N independent repetitions tighten the bound by 1/sqrt(N).
  CHECK(openqfi::cramer_rao({1.0, openqfi::QfiMethod::closed_form}, 100) ==
        doctest::Approx(0.1).epsilon(1e-14));
  CHECK_THROWS_AS(openqfi::cramer_rao({1.0, openqfi::QfiMethod::closed_form}, 0),
                  std::domain_error);
  CHECK_THROWS_AS(openqfi::cramer_rao({0.0, openqfi::QfiMethod::closed_form}, 1),
                  std::domain_error);
}
