#include "ldm/experiments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "ldm/diagnostics.hpp"
#include "ldm/error.hpp"
#include "ldm/kernels.hpp"
#include "ldm/spectral.hpp"

namespace ldm {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_sweep(const std::vector<double>& deltas, bool allow_zero) {
  if (deltas.size() < 3) throw ValidationError("a rate sweep needs at least three deltas");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double d = deltas[i];
    if (!(d > 0.0 || (allow_zero && d == 0.0))) throw ValidationError("sweep deltas must be positive");
    if (i > 0 && !(d < deltas[i - 1])) throw ValidationError("sweep deltas must be strictly decreasing");
  }
}

RateFit judged(RateFit fit, std::string label, double expected, double tolerance) {
  fit.label = std::move(label);
  fit.expected = expected;
  fit.tolerance = tolerance;
  fit.pass = !fit.degenerate && std::abs(fit.slope - expected) <= tolerance;
  return fit;
}

/// Least-squares slope of y against x (no logs).
double linear_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

std::string grid_tag(const SolverConfig& c) {
  return fmt::format("n={} nu={} dt={} t_end={} ic={}", c.grid.n, c.nu, c.dt, c.t_end, to_string(c.ic.kind));
}

}  // namespace

RateFit fit_rate(const std::vector<double>& x, const std::vector<double>& y) {
  RateFit fit;
  if (x.size() != y.size()) throw ValidationError("fit_rate: x and y differ in length");
  fit.points_used = int(x.size());
  const bool bad = std::any_of(y.begin(), y.end(), [](double v) { return !(v > 0.0) || !std::isfinite(v); }) ||
                   std::any_of(x.begin(), x.end(), [](double v) { return !(v > 0.0); });
  if (x.size() < 3 || bad) {
    fit.degenerate = true;
    fit.slope = kNaN;
    return fit;
  }
  std::vector<double> lx(x.size()), ly(y.size());
  std::transform(x.begin(), x.end(), lx.begin(), [](double v) { return std::log(v); });
  std::transform(y.begin(), y.end(), ly.begin(), [](double v) { return std::log(v); });
  fit.slope = linear_slope(lx, ly);
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / lx.size());
  if (!std::isfinite(fit.slope)) fit.degenerate = true;
  return fit;
}

bool StudyReport::pass() const {
  return std::all_of(fits.begin(), fits.end(), [](const RateFit& f) { return f.pass; }) &&
         std::all_of(checks.begin(), checks.end(), [](const StudyCheck& c) { return c.pass; });
}

std::vector<double> StudyReport::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw ValidationError("no column '" + name + "' in " + kind + " report");
  const std::size_t j = std::size_t(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[j]);
  return out;
}

StudyReport deconv_rate_study(const DeconvRateSpec& spec) {
  require_sweep(spec.deltas, false);
  StudyReport rep;
  rep.kind = "deconv_rate";
  rep.columns = {"delta", "order", "error", "error_closed_form"};
  const double norm = hs_norm(spec.field, 0.0);
  for (int order : spec.orders) {
    std::vector<double> errs;
    for (double d : spec.deltas) {
      const FilterSpec fs = FilterSpec::make(d, order);
      const double e = hs_norm(spec.field - apply_hn_iterative(spec.field, fs), 0.0);
      const double ec = hs_norm(deconv_error_field(spec.field, fs), 0.0);
      rep.rows.push_back({d, double(order), e, ec});
      errs.push_back(e);
    }
    rep.fits.push_back(judged(fit_rate(spec.deltas, errs), fmt::format("N={}", order), 2.0 * order + 2.0,
                              spec.tolerance));
  }
  rep.metadata["field_norm"] = fmt::format("{:.17g}", norm);
  rep.note = "error = ||phi - D_N G phi|| via the van Cittert iteration";
  return rep;
}

StudyReport deconv_order_study(const SpectralField& field, double delta, const std::vector<int>& orders) {
  StudyReport rep;
  rep.kind = "deconv_order";
  rep.columns = {"order", "error", "ratio"};
  double prev = kNaN;
  bool monotone = true;
  for (int order : orders) {
    const double e = hs_norm(field - apply_hn_iterative(field, FilterSpec::make(delta, order)), 0.0);
    rep.rows.push_back({double(order), e, std::isnan(prev) ? kNaN : e / prev});
    if (!std::isnan(prev) && e > prev) monotone = false;
    prev = e;
  }
  rep.checks.push_back({"non_increasing", monotone, "error non-increasing in N"});
  rep.metadata["delta"] = fmt::format("{}", delta);
  return rep;
}

StudyReport consistency_rate_study(const ConsistencyRateSpec& spec) {
  require_sweep(spec.deltas, false);
  StudyReport rep;
  rep.kind = "consistency_rate";
  rep.columns = {"delta", "order", "l1_tau", "bound_rhs", "crude_bound", "ratio"};
  for (int order : spec.orders) {
    std::vector<double> l1;
    for (double d : spec.deltas) {
      const ConsistencyReport c = consistency_report(spec.field, FilterSpec::make(d, order));
      rep.rows.push_back({d, double(order), c.l1_tau, c.bound_rhs, c.crude_bound, c.ratio});
      l1.push_back(c.l1_tau);
      rep.checks.push_back({fmt::format("bound N={} delta={}", order, d),
                            c.l1_tau <= c.bound_rhs * (1.0 + spec.bound_tolerance),
                            fmt::format("l1_tau/bound = {:.15f}", c.ratio)});
    }
    rep.fits.push_back(judged(fit_rate(spec.deltas, l1), fmt::format("N={}", order), 2.0 * order + 2.0,
                              spec.tolerance));
  }
  rep.note = "integral |tau_N| over the box against the analytic bound";
  return rep;
}

StudyReport cutoff_table_study(const CutoffTableSpec& spec) {
  if (spec.orders.empty() || spec.deltas.empty()) throw ValidationError("cutoff table needs orders and deltas");
  StudyReport rep;
  rep.kind = "cutoff_table";
  rep.columns = {"order", "delta", "k_star", "k_star_closed", "k_c"};
  std::vector<std::vector<int>> kc(spec.orders.size(), std::vector<int>(spec.deltas.size()));
  double max_gap = 0.0;
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    for (std::size_t j = 0; j < spec.deltas.size(); ++j) {
      const CutoffFrequency c = cutoff_frequency(FilterSpec::make(spec.deltas[j], spec.orders[i]));
      rep.rows.push_back({double(spec.orders[i]), spec.deltas[j], c.k_star, c.k_star_closed, double(c.k_c)});
      kc[i][j] = c.k_c;
      max_gap = std::max(max_gap, std::abs(c.k_star - c.k_star_closed));
    }
  }
  // Nondecreasing as N grows and as delta shrinks.
  bool in_n = true, in_delta = true;
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    for (std::size_t j = 0; j < spec.deltas.size(); ++j) {
      for (std::size_t i2 = 0; i2 < spec.orders.size(); ++i2)
        if (spec.orders[i2] > spec.orders[i] && kc[i2][j] < kc[i][j]) in_n = false;
      for (std::size_t j2 = 0; j2 < spec.deltas.size(); ++j2)
        if (spec.deltas[j2] < spec.deltas[j] && kc[i][j2] < kc[i][j]) in_delta = false;
    }
  }
  rep.checks.push_back({"nondecreasing_in_N", in_n, "k_c(N) at fixed delta"});
  rep.checks.push_back({"nondecreasing_as_delta_shrinks", in_delta, "k_c(delta) at fixed N"});
  rep.checks.push_back({"bisection_matches_closed_form", max_gap <= 1e-9, fmt::format("max gap {:.3e}", max_gap)});
  return rep;
}

StudyReport transfer_figures_study(const TransferFiguresSpec& spec) {
  if (spec.points < 2 || !(spec.k_max > 0.0)) throw ValidationError("transfer figures need k_max > 0 and >= 2 points");
  StudyReport rep;
  rep.kind = "transfer_figures";
  rep.columns = {"k", "exact"};
  for (int n : spec.d_orders) rep.columns.push_back(fmt::format("D{}", n));
  for (int n : spec.h_orders) rep.columns.push_back(fmt::format("H{}", n));
  for (int i = 0; i < spec.points; ++i) {
    const double k = spec.k_max * i / (spec.points - 1);
    std::vector<double> row{k, 1.0 + k * k};
    for (int n : spec.d_orders) row.push_back(transfer_dn(k, FilterSpec::make(1.0, n)));
    for (int n : spec.h_orders) row.push_back(transfer_hn(k, FilterSpec::make(1.0, n)));
    rep.rows.push_back(std::move(row));
  }
  rep.note = "rescaled wavenumber (delta = 1)";
  return rep;
}

StudyReport delta_rate_study(const DeltaRateSpec& spec) {
  require_sweep(spec.deltas, true);
  StudyReport rep;
  rep.kind = "delta_rate";
  rep.columns = {"delta", "l2l2", "l2_final", "h1_timeavg", "below_floor"};
  SolverConfig ref_cfg = spec.base;
  ref_cfg.model = ModelKind::nse();
  const RunResult ref = run(ref_cfg);
  if (ref.blowup) throw ValidationError("reference run blew up; reduce dt");

  std::vector<double> xs, ys;
  bool truncated = false;
  for (double d : spec.deltas) {
    SolverConfig cfg = spec.base;
    if (d == 0.0) {
      cfg.model = ModelKind::nse();
    } else {
      cfg.model = ModelKind::leray_deconv(spec.order);
      cfg.filter = FilterSpec::make(d, spec.order);
    }
    const RunResult r = run(cfg);
    if (r.blowup) {
      rep.rows.push_back({d, kNaN, kNaN, kNaN, 0.0});
      rep.checks.push_back({fmt::format("run delta={}", d), false,
                            fmt::format("blow-up at step {}", r.blowup->step())});
      continue;
    }
    const ModelError e = model_error(r.trajectory, ref.trajectory);
    const bool floor_hit = e.l2l2 < spec.floor;
    rep.rows.push_back({d, e.l2l2, e.l2_final, e.h1_timeavg, floor_hit ? 1.0 : 0.0});
    if (d > 0.0 && !floor_hit) {
      xs.push_back(d);
      ys.push_back(e.l2l2);
    }
    truncated = truncated || (d > 0.0 && floor_hit);
  }
  const double expected = spec.expected_rate < 0.0 ? 2.0 * spec.order + 2.0 : spec.expected_rate;
  RateFit fit = judged(fit_rate(xs, ys), fmt::format("N={}", spec.order), expected, spec.tolerance);
  fit.window_truncated = truncated;
  rep.fits.push_back(fit);
  rep.metadata["scenario"] = grid_tag(spec.base);
  rep.note = truncated ? "points below the integrator floor were excluded from the fit" : "";
  return rep;
}

double van_cittert_step_seconds(const Grid& grid, int repeats) {
  SpectralField w = random_solenoidal(grid, -5.0 / 3.0, 7);
  const SpectralField fbar = w;
  const std::vector<double> g = radial_table(grid, [](double k) { return 1.0 / (1.0 + 0.25 * k * k); });
  std::vector<double> samples;
  samples.reserve(std::size_t(repeats));
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    kernels::van_cittert_step(w.data(), fbar.data(), grid.n, g);
    samples.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

StudyReport n_limit_study(const NLimitSpec& spec) {
  if (spec.orders.size() < 2) throw ValidationError("N sweep needs at least two orders");
  StudyReport rep;
  rep.kind = "n_limit";
  rep.columns = {"order", "l2l2", "l2_final", "h1_timeavg", "hn_seconds", "rhs_evaluations", "wall_seconds"};
  SolverConfig ref_cfg = spec.base;
  ref_cfg.model = ModelKind::nse();
  const RunResult ref = run(ref_cfg);
  if (ref.blowup) throw ValidationError("reference run blew up; reduce dt");

  std::vector<double> orders, errors, costs;
  long rhs_evals = 0;
  for (int order : spec.orders) {
    SolverConfig cfg = spec.base;
    cfg.model = ModelKind::leray_deconv(order);
    cfg.filter = FilterSpec::make(spec.delta, order);
    cfg.deconv = DeconvMode::iterative;
    const auto t0 = Clock::now();
    const RunResult r = run(cfg);
    const double wall = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.blowup) throw ValidationError(fmt::format("model run N={} blew up", order));
    const ModelError e = model_error(r.trajectory, ref.trajectory);
    rep.rows.push_back({double(order), e.l2l2, e.l2_final, e.h1_timeavg, r.hn_seconds,
                        double(r.rhs_evaluations), wall});
    orders.push_back(order);
    errors.push_back(e.l2l2);
    costs.push_back(r.hn_seconds);
    rhs_evals = r.rhs_evaluations;
  }

  bool strict = true;
  for (std::size_t i = 1; i < errors.size(); ++i) strict = strict && errors[i] < errors[i - 1];
  rep.checks.push_back({"strictly_decreasing", strict, "l2l2 error across the N sweep"});
  const double ratio = errors.back() / errors.front();
  rep.checks.push_back({"final_ratio", ratio <= spec.final_ratio,
                        fmt::format("error(N={})/error(N={}) = {:.4g} (limit {})", spec.orders.back(),
                                    spec.orders.front(), ratio, spec.final_ratio)});

  const double measured = linear_slope(orders, costs);
  const double predicted = van_cittert_step_seconds(spec.base.grid) * double(rhs_evals);
  const double cost_ratio = predicted > 0.0 ? measured / predicted : kNaN;
  rep.checks.push_back({"incremental_cost",
                        cost_ratio >= 1.0 / spec.cost_band && cost_ratio <= spec.cost_band,
                        fmt::format("d(hn_seconds)/dN = {:.4g} s, one filter step per RHS = {:.4g} s, ratio {:.3f}",
                                    measured, predicted, cost_ratio)});
  rep.metadata["scenario"] = grid_tag(spec.base);
  rep.metadata["delta"] = fmt::format("{}", spec.delta);
  rep.metadata["cost_slope_seconds"] = fmt::format("{:.6g}", measured);
  rep.metadata["cost_predicted_seconds"] = fmt::format("{:.6g}", predicted);
  rep.note = "H_N applied by the van Cittert iteration so its cost grows with N";
  return rep;
}

std::string summary_text(const StudyReport& report) {
  std::string s = fmt::format("{} : {}\n", report.kind, report.pass() ? "PASS" : "FAIL");
  if (!report.note.empty()) s += fmt::format("  note: {}\n", report.note);
  for (const auto& [k, v] : report.metadata) s += fmt::format("  {} = {}\n", k, v);
  for (const auto& f : report.fits) {
    s += fmt::format("  fit {:<8} slope {:.4f} expected {:.4f} +/- {:.3g} rms {:.2e} points {}{}{} -> {}\n",
                     f.label, f.slope, f.expected, f.tolerance, f.residual, f.points_used,
                     f.window_truncated ? " (window truncated)" : "", f.degenerate ? " (degenerate)" : "",
                     f.pass ? "ok" : "FAIL");
  }
  for (const auto& c : report.checks) {
    s += fmt::format("  check {:<32} {} {}\n", c.name, c.pass ? "ok  " : "FAIL", c.detail);
  }
  return s;
}

}  // namespace ldm
