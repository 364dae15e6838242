#include "ldm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ldm/error.hpp"
#include "ldm/kernels.hpp"
#include "ldm/spectral.hpp"

namespace ldm {

namespace {

int padded_size(int n) {
  const int m = (3 * n + 1) / 2;
  return m % 2 == 0 ? m : m + 1;
}

double l2(const SpectralField& f) { return hs_norm(f, 0.0); }

}  // namespace

TauResult tau_tensor(const SpectralField& v, const FilterSpec& spec) {
  if (v.components() != 3) throw ValidationError("tau_tensor needs a 3-component field");
  const int m = padded_size(v.n());
  const PhysicalField vp = to_physical_padded(v, m);
  const PhysicalField ap = to_physical_padded(apply_hn(v, spec), m);
  const std::size_t pts = vp.points();

  TauResult r{PhysicalField(m, 9), 0.0, m};
  PhysicalField vv(m, 9);
  kernels::outer(ap.data(), vp.data(), r.tensor.data(), pts);
  kernels::outer(vp.data(), vp.data(), vv.data(), pts);
  auto t = r.tensor.data();
  auto s = vv.data();
  for (std::size_t i = 0; i < t.size(); ++i) t[i] -= s[i];

  const double h = kTwoPi / m;
  r.l1_norm = kernels::tensor_l1(ap.data(), vp.data(), vp.data(), pts) * h * h * h;
  return r;
}

ConsistencyReport consistency_bound_rhs(const SpectralField& v, const FilterSpec& spec) {
  ConsistencyReport r;
  r.delta = spec.delta;
  r.order = spec.order;
  const double vn = l2(v);
  r.bound_rhs = kBoxVolume * l2(deconv_error_field(v, spec)) * vn;
  const int p = 2 * spec.order + 2;
  r.crude_bound = kBoxVolume * std::pow(spec.delta, p) * hs_norm(v, p) * vn;
  return r;
}

ConsistencyReport consistency_report(const SpectralField& v, const FilterSpec& spec) {
  ConsistencyReport r = consistency_bound_rhs(v, spec);
  r.l1_tau = tau_tensor(v, spec).l1_norm;
  r.ratio = r.bound_rhs > 0.0 ? r.l1_tau / r.bound_rhs : 0.0;
  return r;
}

bool FilterErrorReport::all_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const FilterErrorRow& r) { return r.equality_ok && r.laplace_ok && r.gradient_ok; });
}

FilterErrorReport filter_error_bounds_check(const SpectralField& u, double delta, int beta_order,
                                            double equality_tol) {
  if (beta_order < 0 || beta_order > 2) throw ValidationError("beta_order must lie in [0, 2]");
  const FilterSpec spec = FilterSpec::make(delta, 0);
  const SpectralField ubar = apply_filter(u, spec);
  const SpectralField err = u - ubar;
  const double slack = 1.0 + 1e-12;

  FilterErrorReport rep;
  rep.delta = delta;
  for (int b1 = 0; b1 <= beta_order; ++b1) {
    for (int b2 = 0; b1 + b2 <= beta_order; ++b2) {
      for (int b3 = 0; b1 + b2 + b3 <= beta_order; ++b3) {
        FilterErrorRow row;
        row.beta = {b1, b2, b3};
        const SpectralField du = partial(u, b1, b2, b3);
        row.lhs = l2(partial(err, b1, b2, b3));
        row.equality_rhs = delta * delta * l2(laplacian(partial(ubar, b1, b2, b3)));
        row.laplace_bound = delta * delta * l2(laplacian(du));
        row.gradient_bound = 0.5 * delta * l2(gradient(du));
        const double scale = std::max(row.lhs, row.equality_rhs);
        const double rel = scale > 0.0 ? std::abs(row.lhs - row.equality_rhs) / scale : 0.0;
        rep.max_equality_rel_error = std::max(rep.max_equality_rel_error, rel);
        row.equality_ok = rel <= equality_tol;
        row.laplace_ok = row.lhs <= row.laplace_bound * slack;
        row.gradient_ok = row.lhs <= row.gradient_bound * slack;
        rep.rows.push_back(row);
      }
    }
  }
  return rep;
}

double time_average(const std::vector<std::pair<double, double>>& series, double T) {
  if (series.empty() || series.front().first != 0.0) {
    throw ValidationError("time_average: series must start at t = 0");
  }
  if (!(T > 0.0)) throw ValidationError("time_average: horizon must be positive");
  if (T > series.back().first * (1.0 + 1e-12)) {
    throw ValidationError("time_average: horizon T = " + std::to_string(T) +
                          " exceeds the recorded data (last t = " + std::to_string(series.back().first) + ")");
  }
  double integral = 0.0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const auto [t0, f0] = series[i - 1];
    auto [t1, f1] = series[i];
    if (t0 >= T) break;
    if (t1 > T) {
      f1 = f0 + (f1 - f0) * (T - t0) / (t1 - t0);
      t1 = T;
    }
    integral += 0.5 * (t1 - t0) * (f0 + f1);
  }
  return integral / T;
}

ModelError model_error(const Trajectory& model, const Trajectory& reference) {
  const auto& a = model.snapshots;
  const auto& b = reference.snapshots;
  if (a.empty() || a.size() != b.size()) {
    throw GridMismatchError("model_error: trajectories have different snapshot counts (" +
                            std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  std::vector<std::pair<double, double>> l2sq, h1sq;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].t - b[i].t) > 1e-12 * std::max(1.0, std::abs(b[i].t))) {
      throw GridMismatchError("model_error: snapshot times differ at index " + std::to_string(i));
    }
    const SpectralField e = a[i].state - b[i].state;
    l2sq.emplace_back(b[i].t, std::pow(l2(e), 2));
    h1sq.emplace_back(b[i].t, std::pow(hs_norm(e, 1.0), 2));
  }
  ModelError out;
  out.l2_final = std::sqrt(l2sq.back().second);
  const double T = b.back().t;
  if (a.size() > 1 && T > 0.0) {
    out.l2l2 = std::sqrt(time_average(l2sq, T) * T);
    out.h1_timeavg = std::sqrt(time_average(h1sq, T));
  }
  return out;
}

ReynoldsScales reynolds_report(const Trajectory& trajectory, const std::vector<DiagRecord>& diags,
                               const SolverConfig& config, double delta) {
  if (!(config.nu > 0.0)) throw ValidationError("reynolds_report needs nu > 0");
  if (diags.size() < 2 || trajectory.snapshots.size() < 2) {
    throw ValidationError("reynolds_report needs at least two records and two snapshots");
  }
  ReynoldsScales r;
  r.horizon = diags.back().t;
  std::vector<std::pair<double, double>> u2, eps;
  for (const auto& d : diags) {
    u2.emplace_back(d.t, 2.0 * d.energy);
    eps.emplace_back(d.t, d.dissipation);
  }
  r.U = std::sqrt(time_average(u2, r.horizon));
  r.Re = r.U * r.L / config.nu;
  r.eps_avg = time_average(eps, r.horizon);

  const FilterSpec spec = FilterSpec::make(delta, 0);
  const double l3 = r.L * r.L * r.L;
  std::vector<std::pair<double, double>> tau;
  for (const auto& s : trajectory.snapshots) {
    tau.emplace_back(s.t, tau_tensor(s.state, spec).l1_norm / (r.U * r.U * l3));
  }
  r.tau_normalized = time_average(tau, trajectory.snapshots.back().t);
  r.scaling_estimate = (delta / r.L) * std::sqrt(r.Re) / std::sqrt(r.U);
  r.dissipation_estimate = (delta / std::sqrt(config.nu)) * std::sqrt(r.eps_avg) * std::sqrt(r.U) / (r.U * r.U);
  return r;
}

}  // namespace ldm
