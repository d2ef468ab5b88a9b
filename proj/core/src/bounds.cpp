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

#include "openqfi/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "openqfi/correlations.hpp"
#include "openqfi/metrology.hpp"
#include "openqfi/rng.hpp"

namespace openqfi {

void validate(const ScanConfig& cfg) {
  if (cfg.n_samples == 0)
    throw std::invalid_argument("ScanConfig: n_samples must be >= 1");
  const ParamRanges& r = cfg.ranges;
  const bool ok = r.lambda_min > 0.0 && r.lambda_max >= r.lambda_min &&
                  r.t_min >= 0.0 && r.t_max >= r.t_min && r.a0_min >= 0.0 &&
                  r.a0_max <= 1.0 && r.a0_max >= r.a0_min &&
                  r.theta_max >= r.theta_min && r.j_min >= 0.0 &&
                  r.j_max >= r.j_min;
  if (!ok) throw std::invalid_argument("ScanConfig: empty or invalid ranges");
}

BoundSample evaluate_sample(const ModelParams& p, const InitialCondition& init,
                            double t) {
  const AmplitudeState s = propagate(p, init, t);
  const double f = qfi_closed(init, s.x).value;
  const double u = lqu_closed(s).value;
  return {p, init, t, f, u, f - u, 2.0 * u - f};
}

DeltaSurfacePoint delta_surface(double m, double n) {
  if (!(m >= 0.0 && m <= 1.0 && n >= 0.0 && n <= 1.0))
    throw std::invalid_argument("delta_surface: m, n must lie in [0, 1]");
  const double f = 4.0 * m * (1.0 - m) * n;
  const double u1 = 1.0 - 2.0 * m * std::sqrt(n * (1.0 - n));
  const double u2 = f;
  const bool u1_active = u1 <= u2;
  const double u = u1_active ? u1 : u2;
  return {m, n, f - u, 2.0 * u - f, u1_active};
}

GridExtrema delta_grid_extrema(int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("delta_grid_extrema: resolution must be >= 2");
  GridExtrema ext{-2.0, 0.0, 0.0, 3.0, 0.0, 0.0};
  const double step = 1.0 / static_cast<double>(resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    const double m = static_cast<double>(i) * step;
    for (int j = 0; j < resolution; ++j) {
      const double n = static_cast<double>(j) * step;
      const DeltaSurfacePoint pt = delta_surface(m, n);
      if (pt.delta1 > ext.max_delta1) {
        ext.max_delta1 = pt.delta1;
        ext.argmax_m = m;
        ext.argmax_n = n;
      }
      if (pt.delta2 < ext.min_delta2) {
        ext.min_delta2 = pt.delta2;
        ext.argmin_m = m;
        ext.argmin_n = n;
      }
    }
  }
  return ext;
}

std::vector<BoundSample> monte_carlo_scan(const ScanConfig& cfg) {
  validate(cfg);
  const ParamRanges& r = cfg.ranges;
  std::vector<BoundSample> out;
  out.reserve(cfg.n_samples);
  for (std::uint64_t i = 0; i < cfg.n_samples; ++i) {
    SplitMix64 g = sample_stream(cfg.seed, i);
    ModelParams p;
    p.gamma0 = 1.0;
    p.lambda = g.next_in(r.lambda_min, r.lambda_max);
    const double t = g.next_in(r.t_min, r.t_max);
    double a0 = g.next_in(r.a0_min, r.a0_max);
    const double theta = g.next_in(r.theta_min, r.theta_max);
    p.J = g.next_in(r.j_min, r.j_max);

    switch (cfg.constraint) {
      case ScanConstraint::j_zero:
        p.J = 0.0;
        break;
      case ScanConstraint::bell_init:
        a0 = 1.0 / std::sqrt(2.0);
        break;
      case ScanConstraint::unconstrained:
        break;
    }
    out.push_back(evaluate_sample(p, make_init(a0, theta), t));
  }
  return out;
}

double precision_bound(const BoundSample& sample) {
  if (!(sample.lqu > 0.0))
    throw std::domain_error("precision_bound: lqu <= 0, bound vacuous");
  const double bound = 1.0 / std::sqrt(sample.lqu);
  if (sample.params.J == 0.0 && sample.qfi > 0.0) {
    const double best = 1.0 / std::sqrt(sample.qfi);
    if (best > bound + 1e-12)
      throw std::logic_error("precision_bound: J = 0 chain violated");
  }
  return bound;
}

}  // namespace openqfi
