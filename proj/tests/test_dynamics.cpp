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
#include "openqfi/linalg.hpp"
#include "support.hpp"

using openqfi::cplx;
using openqfi::ModelParams;

TEST_CASE("compute_d: closed-form checkpoints") {
  // Uncoupled, narrow line: d^2 = lambda(lambda - 2 gamma0) < 0.
  const cplx d1 = openqfi::compute_d(ModelParams{1.0, 0.1, 0.0});
  CHECK(std::abs(d1 - cplx{0.0, std::sqrt(0.19)}) < 1e-14);

  // lambda = 2 gamma0, J = 0 is the exceptional point: d = 0.
  const cplx d2 = openqfi::compute_d(ModelParams{1.0, 2.0, 0.0});
  CHECK(std::abs(d2) < 1e-14);

  // Coupled case: check the radicand itself.
  const cplx d3 = openqfi::compute_d(ModelParams{1.0, 0.15, 1.5});
  CHECK(std::abs(d3 * d3 - cplx{-2.25 - 0.2775, -0.45}) < 1e-14);
}

TEST_CASE("compute_x: survival amplitude starts at one") {
  for (const auto& p : {ModelParams{1.0, 0.1, 0.0}, ModelParams{1.0, 2.0, 0.0},
                        ModelParams{1.0, 0.15, 1.5}, ModelParams{1.0, 1.0, 3.0}}) {
    CHECK(std::abs(openqfi::compute_x(p, 0.0) - cplx{1.0, 0.0}) < 1e-15);
  }
}

TEST_CASE("compute_x: real for an uncoupled pair") {
  const ModelParams p{1.0, 0.3, 0.0};
  for (double t : {0.5, 2.0, 7.5, 19.0}) {
    CHECK(std::abs(openqfi::compute_x(p, t).imag()) < 1e-14);
  }
}

TEST_CASE("compute_x: exceptional point matches e^{-t}(1+t)") {
  // d = 0 forces the series branch of sinh(d t/2)/d.
  const ModelParams p{1.0, 2.0, 0.0};
  for (double t : {0.5, 1.0, 5.0, 12.0}) {
    const double want = std::exp(-t) * (1.0 + t);
    const cplx got = openqfi::compute_x(p, t);
    CHECK(testsupport::rel_diff(got.real(), want) < 1e-12);
    CHECK(std::abs(got.imag()) < 1e-14);
  }
}

TEST_CASE("compute_h: invariant under the branch choice of d") {
  // h is an even function of d; |h| grows like e^{lambda t/2}, so the
  // comparison must be relative.
  const ModelParams p{1.0, 2.0, 3.0};
  const cplx d = openqfi::compute_d(p);
  for (double t : {0.1, 1.0, 10.0, 20.0}) {
    const cplx hp = openqfi::compute_h(p, t, d);
    const cplx hm = openqfi::compute_h(p, t, -d);
    CHECK(std::abs(hp - hm) / std::abs(hp) < 1e-12);
  }
}

TEST_CASE("propagate: norm identity |a|^2 + |b|^2 = |x|^2") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto d = testsupport::draw_sample(0xD15Cu, i);
    const auto s = openqfi::propagate(d.p, d.init, d.t);
    const double lhs = std::norm(s.a) + std::norm(s.b);
    CHECK(std::abs(lhs - std::norm(s.x)) < 1e-10);
  }
}

TEST_CASE("propagate: contractivity |x| <= 1") {
  for (const auto& p : {ModelParams{1.0, 0.05, 0.0}, ModelParams{1.0, 0.5, 1.5},
                        ModelParams{1.0, 2.0, 3.0}}) {
    for (int i = 0; i <= 100; ++i) {
      const double t = 50.0 * i / 100.0;
      CHECK(std::abs(openqfi::compute_x(p, t)) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("propagate: analytic theta derivative matches finite differences") {
  const ModelParams p{1.0, 0.15, 1.5};
  const double eps = 1e-5;
  for (double theta : {0.0, 1.0, 2.5}) {
    const auto mid = openqfi::propagate(p, openqfi::make_init(0.6, theta), 3.0);
    const auto lo = openqfi::propagate(p, openqfi::make_init(0.6, theta - eps), 3.0);
    const auto hi = openqfi::propagate(p, openqfi::make_init(0.6, theta + eps), 3.0);
    const cplx fd_a = (hi.a - lo.a) / (2.0 * eps);
    const cplx fd_b = (hi.b - lo.b) / (2.0 * eps);
    CHECK(std::abs(mid.da_dtheta - fd_a) < 1e-8);
    CHECK(std::abs(mid.db_dtheta - fd_b) < 1e-8);
  }
}

TEST_CASE("propagate: input validation") {
  const ModelParams p{1.0, 0.5, 1.0};
  const auto init = openqfi::bell_init(0.0);
  CHECK_THROWS_AS(openqfi::propagate(p, init, -0.1), std::invalid_argument);

  openqfi::InitialCondition bad{cplx{0.9, 0.0}, cplx{0.9, 0.0}, 0.0};
  CHECK_THROWS_AS(openqfi::propagate(p, bad, 1.0), std::invalid_argument);

  CHECK_THROWS_AS(openqfi::validate(ModelParams{1.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(openqfi::validate(ModelParams{0.0, 0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(openqfi::validate(ModelParams{1.0, 0.5, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(openqfi::make_init(1.2, 0.0), std::invalid_argument);
}

TEST_CASE("reduced_density: Bell state at t = 0 is the pure projector") {
  const auto s = openqfi::propagate(ModelParams{1.0, 0.15, 1.5},
                                    openqfi::bell_init(0.0), 0.0);
  const auto rho = openqfi::reduced_density(s);
  CHECK(std::abs(rho(1, 1) - cplx{0.5, 0.0}) < 1e-14);
  CHECK(std::abs(rho(1, 2) - cplx{0.5, 0.0}) < 1e-14);
  CHECK(std::abs(rho(2, 2) - cplx{0.5, 0.0}) < 1e-14);
  CHECK(std::abs(rho(3, 3)) < 1e-14);
  CHECK(std::abs(openqfi::trace(rho) - cplx{1.0, 0.0}) < 1e-14);

  const auto dec = openqfi::eigh<4>(rho);
  CHECK(std::abs(dec.eigenvalues[3] - 1.0) < 1e-12);
  CHECK(std::abs(dec.eigenvalues[2]) < 1e-12);
}

TEST_CASE("reduced_density: fully decayed state is |gg><gg|") {
  const auto s = openqfi::propagate(ModelParams{1.0, 2.0, 0.0},
                                    openqfi::bell_init(0.0), 30.0);
  const auto rho = openqfi::reduced_density(s);
  CHECK(std::abs(rho(3, 3) - cplx{1.0, 0.0}) < 1e-9);
  CHECK(std::abs(rho(1, 1)) < 1e-9);
  CHECK(std::abs(rho(2, 2)) < 1e-9);
}

TEST_CASE("reduced_density: spectrum is {0, 0, 1-|x|^2, |x|^2}") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto d = testsupport::draw_sample(0xABBAu, i);
    const auto s = openqfi::propagate(d.p, d.init, d.t);
    const auto rho = openqfi::reduced_density(s);
    const auto dec = openqfi::eigh<4>(rho);
    const double x2 = std::norm(s.x);
    const double big = std::max(x2, 1.0 - x2);
    const double small = std::min(x2, 1.0 - x2);
    CHECK(std::abs(dec.eigenvalues[0]) < 1e-12);
    CHECK(std::abs(dec.eigenvalues[1]) < 1e-12);
    CHECK(std::abs(dec.eigenvalues[2] - small) < 1e-10);
    CHECK(std::abs(dec.eigenvalues[3] - big) < 1e-10);
  }
}

TEST_CASE("bell_init: equal weights and embedded phase bookkeeping") {
  const auto init = openqfi::bell_init(std::numbers::pi / 3.0);
  CHECK(std::abs(init.a0 - cplx{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(std::abs(init.b0 - cplx{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(init.theta == doctest::Approx(std::numbers::pi / 3.0));
  openqfi::validate(init);
}
