#include "ldm/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "ldm/kernels.hpp"
#include "ldm/spectral.hpp"

namespace ldm {

namespace {

using Clock = std::chrono::steady_clock;

FilterSpec model_filter(const SolverConfig& c) { return FilterSpec{c.filter.delta, c.model.order}; }

bool uses_filter(const SolverConfig& c) { return c.model.is_model(); }

SpectralField band_limit(SpectralField f, const SolverConfig& c) {
  if (c.dealias) f = dealias(f);
  return f;
}

// -(u . grad) w, or -div(u (x) w), formed pointwise and truncated.
SpectralField advection_product(const SpectralField& u_adv, const SpectralField& w,
                                const SolverConfig& c) {
  const Grid& g = w.grid();
  const std::size_t pts = g.points();
  const PhysicalField u = to_physical(u_adv);
  PhysicalField prod(g.n, 3);
  if (c.advection == AdvectionForm::advective) {
    const PhysicalField grad = to_physical(gradient(w));
    kernels::advect(u.data(), grad.data(), prod.data(), pts);
    SpectralField out = from_physical(prod, g, w.time());
    out *= -1.0;
    return band_limit(std::move(out), c);
  }
  const PhysicalField wp = to_physical(w);
  PhysicalField tensor(g.n, 9);
  kernels::outer(u.data(), wp.data(), tensor.data(), pts);
  const SpectralField t = band_limit(from_physical(tensor, g, w.time()), c);
  SpectralField out(g, 3, w.time());
  for (int i = 0; i < 3; ++i) {
    auto dst = out.component(i);
    for (int i1 = 0; i1 < g.n; ++i1) {
      for (int i2 = 0; i2 < g.n; ++i2) {
        for (int i3 = 0; i3 < g.n; ++i3) {
          const std::size_t p = (std::size_t(i1) * g.n + i2) * g.n + i3;
          const double k[3] = {double(g.wavenumber(i1)), double(g.wavenumber(i2)),
                               double(g.wavenumber(i3))};
          cplx s = 0.0;
          for (int j = 0; j < 3; ++j) s += k[j] * t.component(j * 3 + i)[p];
          dst[p] = -cplx(0.0, 1.0) * s;
        }
      }
    }
  }
  return out;
}

SpectralField closed_form_velocity(const SpectralField& state, const SolverConfig& c) {
  if (!uses_filter(c)) return state;
  return apply_hn(state, model_filter(c));
}

bool finite(const SpectralField& f) {
  for (const auto& v : f.data()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace

std::string ModelKind::name() const {
  if (family == Family::nse) return "nse";
  return order == 0 ? "leray_alpha" : "leray_deconv_N" + std::to_string(order);
}

void SolverConfig::validate() const {
  Grid::make(grid.n, grid.dealias_fraction);
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ValidationError("fluid.nu must be finite and >= 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("time.dt must be a finite positive number");
  if (!(t_end >= dt) || !std::isfinite(t_end)) throw ValidationError("time.t_end must be finite and >= time.dt");
  if (snapshot_every < 0) throw ValidationError("time.snapshot_every must be >= 0");
  if (model.is_model()) FilterSpec::make(filter.delta, model.order);
}

long SolverConfig::step_count() const { return long(std::ceil(t_end / dt - 1e-9)); }

SpectralField nonlinear_term_unprojected(const SpectralField& state, const SolverConfig& config) {
  return advection_product(closed_form_velocity(state, config), state, config);
}

SpectralField nonlinear_term(const SpectralField& state, const SolverConfig& config) {
  return leray_project(nonlinear_term_unprojected(state, config));
}

SpectralField effective_forcing(const SolverConfig& config) {
  SpectralField f = make_field(config.forcing, config.grid);
  if (uses_filter(config) && config.filter_forcing) f = apply_hn(f, model_filter(config));
  return leray_project(band_limit(std::move(f), config));
}

SpectralField initial_state(const SolverConfig& config) {
  SpectralField v = make_field(config.ic, config.grid);
  if (uses_filter(config) && config.filter_ic) v = apply_hn(v, model_filter(config));
  return leray_project(band_limit(std::move(v), config));
}

SpectralField recover_pressure(const SpectralField& state, const SolverConfig& config) {
  SpectralField r = nonlinear_term_unprojected(state, config);
  r += effective_forcing(config);
  const Grid& g = state.grid();
  SpectralField q(g, 1, state.time());
  auto dst = q.component(0);
  for (int i1 = 0; i1 < g.n; ++i1) {
    for (int i2 = 0; i2 < g.n; ++i2) {
      for (int i3 = 0; i3 < g.n; ++i3) {
        const int k1 = g.wavenumber(i1), k2 = g.wavenumber(i2), k3 = g.wavenumber(i3);
        const int kk = k1 * k1 + k2 * k2 + k3 * k3;
        if (kk == 0) continue;
        const std::size_t p = (std::size_t(i1) * g.n + i2) * g.n + i3;
        const cplx kr = double(k1) * r.component(0)[p] + double(k2) * r.component(1)[p] +
                        double(k3) * r.component(2)[p];
        dst[p] = cplx(0.0, -1.0) * kr / double(kk);
      }
    }
  }
  return q;
}

Integrator::Integrator(SolverConfig config) : config_(std::move(config)) {
  config_.validate();
  forcing_ = effective_forcing(config_);
  if (uses_filter(config_)) {
    const FilterSpec spec = model_filter(config_);
    hn_table_ = radial_table(config_.grid, [&](double k) { return transfer_hn(k, spec); });
  }
  nu_k2_ = radial_table(config_.grid, [&](double k) { return config_.nu * k * k; });
}

const Integrator::Factors& Integrator::factors_for(double dt) {
  if (factors_.dt == dt) return factors_;
  factors_.dt = dt;
  const std::size_t m = nu_k2_.size();
  factors_.full.resize(m);
  factors_.half.resize(m);
  factors_.back_half.resize(m);
  for (std::size_t q = 0; q < m; ++q) {
    factors_.full[q] = std::exp(-nu_k2_[q] * dt);
    factors_.half[q] = std::exp(-0.5 * nu_k2_[q] * dt);
    factors_.back_half[q] = std::exp(0.5 * nu_k2_[q] * dt);
  }
  return factors_;
}

SpectralField Integrator::advecting_velocity(const SpectralField& state) {
  if (!uses_filter(config_)) return state;
  const auto t0 = Clock::now();
  SpectralField u = config_.deconv == DeconvMode::iterative
                        ? apply_hn_iterative(state, model_filter(config_))
                        : apply_radial(state, hn_table_);
  hn_seconds_ += std::chrono::duration<double>(Clock::now() - t0).count();
  return u;
}

SpectralField Integrator::rhs(const SpectralField& state) {
  ++rhs_evaluations_;
  SpectralField r = leray_project(advection_product(advecting_velocity(state), state, config_));
  r += forcing_;
  return r;
}

SpectralField Integrator::step(const SpectralField& w, double dt) {
  if (dt <= 0.0) dt = config_.dt;
  const Factors& e = factors_for(dt);
  const double nu = config_.nu;
  auto diss = [&](const SpectralField& s) { return nu == 0.0 ? 0.0 : nu * std::pow(hs_norm(s, 1.0), 2); };
  auto power = [&](const SpectralField& s) { return inner(forcing_, s); };

  SpectralField u1 = rhs(w);
  u1 *= dt;
  u1 += w;
  apply_radial_inplace(u1, e.full);

  SpectralField u2 = rhs(u1);
  u2 *= dt;
  u2 += u1;
  apply_radial_inplace(u2, e.back_half);
  u2 *= 0.25;
  u2 += 0.75 * apply_radial(w, e.half);

  SpectralField next = rhs(u2);
  next *= dt;
  next += u2;
  apply_radial_inplace(next, e.half);
  next *= 2.0 / 3.0;
  next += (1.0 / 3.0) * apply_radial(w, e.full);

  dissipation_integral_ += dt * (diss(w) / 6.0 + diss(u1) / 6.0 + 2.0 * diss(u2) / 3.0);
  power_integral_ += dt * (power(w) / 6.0 + power(u1) / 6.0 + 2.0 * power(u2) / 3.0);

  ++steps_;
  next.set_time(w.time() + dt);
  if (!finite(next)) throw BlowUpError(steps_, next.time());
  return next;
}

SpectralField step(const SpectralField& state, const SolverConfig& config) {
  Integrator integ(config);
  return integ.step(state);
}

DiagRecord energy_record(const SpectralField& state, const SolverConfig& config,
                         const SpectralField& forcing, double energy0, double dissipation_integral,
                         double power_integral) {
  DiagRecord r;
  r.t = state.time();
  r.energy = energy(state);
  r.h1_seminorm_sq = std::pow(hs_norm(state, 1.0), 2);
  r.dissipation = config.nu * r.h1_seminorm_sq;
  r.input_power = inner(forcing, state);
  r.balance_residual = r.energy - energy0 + dissipation_integral - power_integral;
  return r;
}

RunResult run(const SolverConfig& config, const StepObserver& observer) {
  RunResult result;
  Integrator integ(config);
  SpectralField w = initial_state(config);
  w.set_time(0.0);

  double umax = 0.0;
  for (double v : to_physical(w).data()) umax = std::max(umax, std::abs(v));
  result.cfl_dt_max = umax > 0.0 ? config.grid.spacing() / umax : 0.0;

  const double e0 = energy(w);
  result.diagnostics.push_back(energy_record(w, config, integ.forcing(), e0));
  result.trajectory.snapshots.push_back({0.0, w});
  if (observer) observer(0, w);

  const long steps = config.step_count();
  for (long s = 1; s <= steps; ++s) {
    const double t_next = s == steps ? config.t_end : double(s) * config.dt;
    try {
      w = integ.step(w, t_next - w.time());
    } catch (const BlowUpError& err) {
      result.blowup = err;
      break;
    }
    w.set_time(t_next);
    result.steps_taken = s;
    result.diagnostics.push_back(energy_record(w, config, integ.forcing(), e0,
                                               integ.dissipation_integral(), integ.power_integral()));
    const bool cadence = config.snapshot_every > 0 && s % config.snapshot_every == 0;
    if (cadence || s == steps) result.trajectory.snapshots.push_back({t_next, w});
    if (observer) observer(s, w);
  }
  result.rhs_evaluations = integ.rhs_evaluations();
  result.hn_seconds = integ.hn_seconds();
  return result;
}

}  // namespace ldm
