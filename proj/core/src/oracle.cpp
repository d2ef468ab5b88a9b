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

#include "openqfi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace openqfi {

namespace {

// Integer step count so the integrator lands exactly on the segment end.
std::size_t steps_for(double span, double dt) {
  if (span <= 0.0) return 0;
  const double raw = span / dt;
  return static_cast<std::size_t>(std::max(1.0, std::ceil(raw - 1e-12)));
}

void check_dt(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("oracle: dt must be positive and finite");
}

struct PmDeriv {
  double gamma0, lambda, J;

  OdeState operator()(const OdeState& s) const {
    const cplx i{0.0, 1.0};
    OdeState d;
    d.a = -i * J * s.b - s.z_a;
    d.b = -i * J * s.a - s.z_b;
    d.z_a = 0.5 * gamma0 * lambda * s.a - lambda * s.z_a;
    d.z_b = 0.5 * gamma0 * lambda * s.b - lambda * s.z_b;
    return d;
  }
};

OdeState axpy(const OdeState& y, double h, const OdeState& k) {
  return {y.a + h * k.a, y.b + h * k.b, y.z_a + h * k.z_a, y.z_b + h * k.z_b};
}

void rk4_pm_step(const PmDeriv& f, OdeState& y, double h) {
  const OdeState k1 = f(y);
  const OdeState k2 = f(axpy(y, 0.5 * h, k1));
  const OdeState k3 = f(axpy(y, 0.5 * h, k2));
  const OdeState k4 = f(axpy(y, h, k3));
  y.a += h / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
  y.b += h / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
  y.z_a += h / 6.0 * (k1.z_a + 2.0 * k2.z_a + 2.0 * k3.z_a + k4.z_a);
  y.z_b += h / 6.0 * (k1.z_b + 2.0 * k2.z_b + 2.0 * k3.z_b + k4.z_b);
}

bool finite(const OdeState& s) {
  return std::isfinite(s.a.real()) && std::isfinite(s.a.imag()) &&
         std::isfinite(s.b.real()) && std::isfinite(s.b.imag()) &&
         std::isfinite(s.z_a.real()) && std::isfinite(s.z_a.imag()) &&
         std::isfinite(s.z_b.real()) && std::isfinite(s.z_b.imag());
}

// Interaction-picture bath integrator. Flat state layout:
// y[0] = a, y[1] = b, y[2..2+n) = c, y[2+n..2+2n) = d.
class BathStepper {
 public:
  BathStepper(const ModelParams& p, const BathDiscretization& disc)
      : J_(p.J), disc_(disc), n_(disc.n_modes) {
    const std::size_t dim = 2 + 2 * n_;
    k1_.resize(dim);
    k2_.resize(dim);
    k3_.resize(dim);
    k4_.resize(dim);
    tmp_.resize(dim);
    phase_.resize(n_);
    rot_.resize(n_);
    ph2_.resize(n_);
    ph4_.resize(n_);
  }

  // Advance y from t_from to t_to with steps of size <= dt.
  void advance(std::vector<cplx>& y, double t_from, double t_to, double dt) {
    const std::size_t n_steps = steps_for(t_to - t_from, dt);
    if (n_steps == 0) return;
    const double h = (t_to - t_from) / static_cast<double>(n_steps);
    for (std::size_t k = 0; k < n_; ++k) {
      phase_[k] = std::exp(cplx{0.0, disc_.detunings[k] * t_from});
      rot_[k] = std::exp(cplx{0.0, disc_.detunings[k] * 0.5 * h});
    }
    for (std::size_t step = 0; step < n_steps; ++step) {
      for (std::size_t k = 0; k < n_; ++k) {
        ph2_[k] = phase_[k] * rot_[k];
        ph4_[k] = ph2_[k] * rot_[k];
      }
      deriv(y, phase_, k1_);
      stage(y, 0.5 * h, k1_);
      deriv(tmp_, ph2_, k2_);
      stage(y, 0.5 * h, k2_);
      deriv(tmp_, ph2_, k3_);
      stage(y, h, k3_);
      deriv(tmp_, ph4_, k4_);
      const double w = h / 6.0;
      for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += w * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
      phase_.swap(ph4_);
      // ph2_/ph4_ are recomputed from phase_ next step, stale values are fine.
    }
    if (!(std::isfinite(y[0].real()) && std::isfinite(y[0].imag())))
      throw std::runtime_error("discretized_bath_evolve: state blew up");
  }

 private:
  void stage(const std::vector<cplx>& y, double h, const std::vector<cplx>& k) {
    for (std::size_t i = 0; i < y.size(); ++i) tmp_[i] = y[i] + h * k[i];
  }

  // da = -iJ b - i sum g_k c_k e^{-i delta_k t}
  // dc_k = -i g_k a e^{+i delta_k t}   (mirrored for b, d_k)
  void deriv(const std::vector<cplx>& y, const std::vector<cplx>& ph,
             std::vector<cplx>& dy) const {
    const cplx i{0.0, 1.0};
    cplx sc{}, sd{};
    const cplx* c = y.data() + 2;
    const cplx* d = y.data() + 2 + n_;
    for (std::size_t k = 0; k < n_; ++k) {
      const cplx pc = std::conj(ph[k]);
      sc += disc_.couplings[k] * c[k] * pc;
      sd += disc_.couplings[k] * d[k] * pc;
    }
    dy[0] = -i * J_ * y[1] - i * sc;
    dy[1] = -i * J_ * y[0] - i * sd;
    const cplx ia = -i * y[0];
    const cplx ib = -i * y[1];
    cplx* dc = dy.data() + 2;
    cplx* dd = dy.data() + 2 + n_;
    for (std::size_t k = 0; k < n_; ++k) {
      const cplx gph = disc_.couplings[k] * ph[k];
      dc[k] = ia * gph;
      dd[k] = ib * gph;
    }
  }

  double J_;
  const BathDiscretization& disc_;
  std::size_t n_;
  std::vector<cplx> k1_, k2_, k3_, k4_, tmp_;
  std::vector<cplx> phase_, rot_, ph2_, ph4_;
};

FullState unpack(const std::vector<cplx>& y, std::size_t n) {
  FullState s;
  s.a = y[0];
  s.b = y[1];
  s.c.assign(y.begin() + 2, y.begin() + 2 + static_cast<std::ptrdiff_t>(n));
  s.d.assign(y.begin() + 2 + static_cast<std::ptrdiff_t>(n), y.end());
  return s;
}

}  // namespace

double lorentzian_spectral_density(const ModelParams& p, double detuning) {
  return p.gamma0 * p.lambda * p.lambda /
         (2.0 * std::numbers::pi * (p.lambda * p.lambda + detuning * detuning));
}

cplx lorentzian_kernel(const ModelParams& p, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("lorentzian_kernel: s must be >= 0");
  return {0.5 * p.gamma0 * p.lambda * std::exp(-p.lambda * s), 0.0};
}

PseudomodeTrajectory pseudomode_evolve(const ModelParams& p,
                                       const InitialCondition& init,
                                       double t_end, double dt) {
  validate(p);
  validate(init);
  check_dt(dt);
  if (!(t_end >= 0.0))
    throw std::invalid_argument("pseudomode_evolve: t_end must be >= 0");

  const PmDeriv f{p.gamma0, p.lambda, p.J};
  OdeState y{init.a0 * std::exp(cplx{0.0, init.theta}), init.b0, {}, {}};

  const std::size_t n = steps_for(t_end, dt);
  const double h = n > 0 ? t_end / static_cast<double>(n) : 0.0;

  PseudomodeTrajectory traj;
  traj.times.reserve(n + 1);
  traj.states.reserve(n + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(y);
  for (std::size_t i = 1; i <= n; ++i) {
    rk4_pm_step(f, y, h);
    if (!finite(y)) throw std::runtime_error("pseudomode_evolve: state blew up");
    traj.times.push_back(static_cast<double>(i) * h);
    traj.states.push_back(y);
  }
  return traj;
}

double BathDiscretization::recurrence_time() const {
  return 2.0 * std::numbers::pi / mode_spacing();
}

BathDiscretization make_bath(const ModelParams& p, std::size_t n_modes,
                             double window_mult) {
  validate(p);
  if (n_modes == 0) throw std::invalid_argument("make_bath: n_modes must be >= 1");
  if (!(window_mult > 0.0))
    throw std::invalid_argument("make_bath: window_mult must be > 0");

  BathDiscretization disc;
  disc.n_modes = n_modes;
  disc.half_width = window_mult * p.lambda;
  disc.detunings.resize(n_modes);
  disc.couplings.resize(n_modes);
  const double dw = disc.mode_spacing();
  for (std::size_t k = 0; k < n_modes; ++k) {
    const double delta = -disc.half_width + (static_cast<double>(k) + 0.5) * dw;
    disc.detunings[k] = delta;
    disc.couplings[k] = std::sqrt(lorentzian_spectral_density(p, delta) * dw);
  }
  return disc;
}

double FullState::norm_sq() const {
  double s = std::norm(a) + std::norm(b);
  for (const cplx& v : c) s += std::norm(v);
  for (const cplx& v : d) s += std::norm(v);
  return s;
}

BathTrajectory discretized_bath_evolve(const ModelParams& p,
                                       const InitialCondition& init,
                                       const BathDiscretization& disc,
                                       double t_end, double dt,
                                       std::size_t n_records) {
  validate(p);
  validate(init);
  check_dt(dt);
  if (!(t_end >= 0.0))
    throw std::invalid_argument("discretized_bath_evolve: t_end must be >= 0");
  if (n_records < 2) n_records = 2;

  std::vector<cplx> y(2 + 2 * disc.n_modes);
  y[0] = init.a0 * std::exp(cplx{0.0, init.theta});
  y[1] = init.b0;

  BathTrajectory traj;
  traj.recurrence_warning = t_end > disc.recurrence_time();
  traj.times.push_back(0.0);
  traj.states.push_back(unpack(y, disc.n_modes));
  if (t_end == 0.0) return traj;

  BathStepper stepper(p, disc);
  for (std::size_t j = 1; j < n_records; ++j) {
    const double t0 = t_end * static_cast<double>(j - 1) / static_cast<double>(n_records - 1);
    const double t1 = t_end * static_cast<double>(j) / static_cast<double>(n_records - 1);
    stepper.advance(y, t0, t1, dt);
    traj.times.push_back(t1);
    traj.states.push_back(unpack(y, disc.n_modes));
  }
  return traj;
}

OracleReport compare_oracles(const ModelParams& p, const InitialCondition& init,
                             const std::vector<double>& t_grid,
                             const OracleOptions& opts) {
  validate(p);
  validate(init);
  check_dt(opts.pseudomode_dt);
  if (t_grid.empty()) throw std::invalid_argument("compare_oracles: empty t_grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0) || (i > 0 && t_grid[i] <= t_grid[i - 1]))
      throw std::invalid_argument("compare_oracles: t_grid must be ascending and >= 0");
  }

  const std::size_t n = t_grid.size();
  std::vector<cplx> ana_a(n), ana_b(n), pm_a(n), pm_b(n), ba_a(n), ba_b(n);

  for (std::size_t i = 0; i < n; ++i) {
    const AmplitudeState s = propagate(p, init, t_grid[i]);
    ana_a[i] = s.a;
    ana_b[i] = s.b;
  }

  {
    const PmDeriv f{p.gamma0, p.lambda, p.J};
    OdeState y{init.a0 * std::exp(cplx{0.0, init.theta}), init.b0, {}, {}};
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t steps = steps_for(t_grid[i] - t, opts.pseudomode_dt);
      if (steps > 0) {
        const double h = (t_grid[i] - t) / static_cast<double>(steps);
        for (std::size_t s = 0; s < steps; ++s) rk4_pm_step(f, y, h);
        if (!finite(y)) throw std::runtime_error("compare_oracles: pseudomode blew up");
      }
      t = t_grid[i];
      pm_a[i] = y.a;
      pm_b[i] = y.b;
    }
  }

  bool recurrence = false;
  if (opts.run_bath) {
    check_dt(opts.bath_dt);
    const BathDiscretization disc = make_bath(p, opts.n_modes, opts.window_mult);
    recurrence = t_grid.back() > disc.recurrence_time();
    BathStepper stepper(p, disc);
    std::vector<cplx> y(2 + 2 * disc.n_modes);
    y[0] = init.a0 * std::exp(cplx{0.0, init.theta});
    y[1] = init.b0;
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      stepper.advance(y, t, t_grid[i], opts.bath_dt);
      t = t_grid[i];
      ba_a[i] = y[0];
      ba_b[i] = y[1];
    }
  }

  const auto accumulate = [n](const std::vector<cplx>& ua, const std::vector<cplx>& ub,
                              const std::vector<cplx>& va, const std::vector<cplx>& vb,
                              double& out_max, double& out_rms) {
    double mx = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = std::max(std::abs(ua[i] - va[i]), std::abs(ub[i] - vb[i]));
      mx = std::max(mx, e);
      ss += e * e;
    }
    out_max = mx;
    out_rms = std::sqrt(ss / static_cast<double>(n));
  };

  OracleReport rep{};
  rep.recurrence_warning = recurrence;
  accumulate(ana_a, ana_b, pm_a, pm_b, rep.max_analytic_pseudomode,
             rep.rms_analytic_pseudomode);
  if (opts.run_bath) {
    accumulate(ana_a, ana_b, ba_a, ba_b, rep.max_analytic_bath, rep.rms_analytic_bath);
    accumulate(pm_a, pm_b, ba_a, ba_b, rep.max_pseudomode_bath, rep.rms_pseudomode_bath);
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rep.max_analytic_bath = rep.rms_analytic_bath = nan;
    rep.max_pseudomode_bath = rep.rms_pseudomode_bath = nan;
  }
  return rep;
}

}  // namespace openqfi
