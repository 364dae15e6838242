// Acceptance gate: one PASS/FAIL line per criterion. Tolerances are fixed
// here. Exit status is 0 once every criterion has been evaluated; pass
// --strict to exit 1 when any criterion fails.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ldm/diagnostics.hpp"
#include "ldm/experiments.hpp"
#include "ldm/filtering.hpp"
#include "ldm/io/config.hpp"
#include "ldm/io/csv.hpp"
#include "ldm/io/snapshot.hpp"
#include "ldm/solver.hpp"
#include "ldm/spectral.hpp"

using namespace ldm;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

SolverConfig taylor_green_base(double nu, double dt, double t_end) {
  SolverConfig c;
  c.grid = Grid::make(32);
  c.nu = nu;
  c.dt = dt;
  c.t_end = t_end;
  c.ic.kind = FieldSpec::Kind::taylor_green;
  return c;
}

std::string fits_text(const StudyReport& r) {
  std::string s;
  for (const auto& f : r.fits) {
    s += fmt::format("{}{} slope {:.4f} (want {:.0f} +/- {})", s.empty() ? "" : ", ", f.label, f.slope,
                     f.expected, f.tolerance);
  }
  return s;
}

std::string failed_checks(const StudyReport& r) {
  std::string s;
  for (const auto& c : r.checks) {
    if (!c.pass) s += fmt::format("; {} failed ({})", c.name, c.detail);
  }
  return s;
}

Outcome c1_transfer_exactness() {
  const Grid g = Grid::make(32);
  double worst = 0.0;
  for (int seed = 1; seed <= 2; ++seed) {
    const SpectralField f = random_solenoidal(g, -5.0 / 3.0, std::uint64_t(seed));
    for (int n = 0; n <= 10; ++n) {
      const FilterSpec s = FilterSpec::make(0.3, n);
      const SpectralField fbar = apply_filter(f, s);
      const SpectralField closed = apply_dn(fbar, s);
      worst = std::max(worst, max_abs_diff(van_cittert(fbar, s), closed) / max_abs(closed));
    }
  }
  return {worst <= 1e-12, fmt::format("max relative error {:.3e} over N = 0..10 (tol 1e-12)", worst)};
}

Outcome c2_reference_values() {
  const double d1 = transfer_dn(1.0, FilterSpec::make(1.0, 1));
  const double d2 = transfer_dn(1.0, FilterSpec::make(1.0, 2));
  double h0 = 0.0;
  for (int n = 0; n <= 50; ++n) h0 = std::max(h0, std::abs(transfer_hn(0.0, FilterSpec::make(0.7, n)) - 1.0));
  const bool ok = std::abs(d1 - 1.5) <= 1e-14 && std::abs(d2 - 1.75) <= 1e-14 && h0 <= 1e-14;
  return {ok, fmt::format("D1(1) = {:.17g}, D2(1) = {:.17g}, max |H_N(0) - 1| = {:.1e} (tol 1e-14)", d1, d2, h0)};
}

Outcome c3_deconv_rate() {
  DeconvRateSpec spec{single_mode(Grid::make(16), {1, 0, 0}), {0.2, 0.1, 0.05, 0.025}, {0, 1, 2}, 0.05};
  const StudyReport r = deconv_rate_study(spec);
  return {r.pass(), fits_text(r)};
}

Outcome c4_operator_norm() {
  bool ok = true;
  std::string s;
  for (int n : {1, 3, 7}) {
    const double sup = operator_norm_dn(FilterSpec::make(1.0, n), 1e3);
    ok = ok && std::abs(sup - (n + 1)) <= 1e-3 && sup <= n + 1;
    s += fmt::format("{}N={} sup {:.9f}", s.empty() ? "" : ", ", n, sup);
  }
  return {ok, s + " (within 1e-3 of N+1, never above)"};
}

Outcome c5_cutoff() {
  bool ok = true;
  std::string s = "k_c(N=0) =";
  const double deltas[] = {1.0, 0.5, 0.25};
  const int want[] = {1, 2, 4};
  for (int i = 0; i < 3; ++i) {
    const int kc = cutoff_frequency(FilterSpec::make(deltas[i], 0)).k_c;
    ok = ok && kc == want[i];
    s += fmt::format(" {}", kc);
  }
  std::vector<int> orders;
  for (int n = 0; n <= 50; ++n) orders.push_back(n);
  const StudyReport r = cutoff_table_study({orders, {1.0, 0.5, 0.25}});
  ok = ok && r.pass();
  double gap = 0.0;
  const auto ks = r.column("k_star"), kc = r.column("k_star_closed");
  for (std::size_t i = 0; i < ks.size(); ++i) gap = std::max(gap, std::abs(ks[i] - kc[i]));
  return {ok, s + fmt::format("; nondecreasing in N for N = 0..50; bisection vs closed form {:.2e}{}", gap,
                              failed_checks(r))};
}

double inviscid_drift(double dt, int steps) {
  SolverConfig c = taylor_green_base(0.0, dt, dt * steps);
  c.model = ModelKind::leray_deconv(2);
  c.filter = FilterSpec::make(0.5, 2);
  const RunResult r = run(c);
  const double e0 = r.diagnostics.front().energy;
  double worst = 0.0;
  for (const auto& d : r.diagnostics) worst = std::max(worst, std::abs(d.energy - e0) / e0);
  return worst;
}

Outcome c6_energy_neutrality() {
  const double dt = 0.02;
  const double d1 = inviscid_drift(dt, 100);
  const double d2 = inviscid_drift(dt / 2, 200);
  const double order = std::log2(d1 / d2);
  const bool ok = d1 <= 1e-6 && std::abs(order - 3.0) <= 0.5;
  return {ok, fmt::format("drift {:.3e} at dt={} (tol 1e-6), {:.3e} at dt/2, observed order {:.2f} (want 3 +/- 0.5)",
                          d1, dt, d2, order)};
}

Outcome c7_energy_equality() {
  SolverConfig c = taylor_green_base(0.1, 0.005, 0.5);
  c.ic.kind = FieldSpec::Kind::random_solenoidal;
  c.ic.seed = 3;
  c.ic.kmax = 8;
  c.forcing.kind = FieldSpec::Kind::manufactured;
  c.forcing.expression = "abc";
  c.forcing.amplitude = 0.5;

  const SpectralField v0 = dealias(make_field(c.ic, c.grid));
  const SpectralField f = leray_project(dealias(make_field(c.forcing, c.grid)));
  const double bound = std::pow(hs_norm(v0, 0.0), 2) + c.t_end / c.nu * std::pow(hs_norm(f, -1.0), 2);

  bool ok = true;
  std::string s;
  for (int n : {0, 2, 8}) {
    SolverConfig m = c;
    m.model = ModelKind::leray_deconv(n);
    m.filter = FilterSpec::make(0.5, n);
    const RunResult r = run(m);
    const double e0 = r.diagnostics.front().energy;
    double resid = 0.0, sup = 0.0;
    for (const auto& d : r.diagnostics) {
      resid = std::max(resid, std::abs(d.balance_residual));
      sup = std::max(sup, 2.0 * d.energy);
    }
    ok = ok && !r.blowup && resid <= 1e-6 * e0 && sup <= bound;
    s += fmt::format("{}N={} residual/E0 {:.2e} sup|w|^2 {:.4f}", s.empty() ? "" : ", ", n, resid / e0, sup);
  }
  return {ok, s + fmt::format(" (tol 1e-6; a-priori bound {:.4f} for every N)", bound)};
}

Outcome c8_filter_error() {
  bool ok = true;
  double worst = 0.0;
  for (int seed : {11, 12}) {
    const SpectralField u = random_solenoidal(Grid::make(32), -5.0 / 3.0, std::uint64_t(seed));
    for (double d : {0.5, 0.1}) {
      const FilterErrorReport r = filter_error_bounds_check(u, d, 2, 1e-12);
      ok = ok && r.all_ok();
      worst = std::max(worst, r.max_equality_rel_error);
    }
  }
  return {ok, fmt::format("equality max relative error {:.2e} (tol 1e-12); both inequalities for |beta| <= 2", worst)};
}

Outcome c9_consistency_rate() {
  ConsistencyRateSpec spec{taylor_green(Grid::make(32)), {0.2, 0.1, 0.05, 0.025}, {0, 1}, 0.3, 1e-12};
  const StudyReport r = consistency_rate_study(spec);
  double worst = 0.0;
  for (double v : r.column("ratio")) worst = std::max(worst, v);
  return {r.pass(), fits_text(r) + fmt::format("; max integral|tau|/bound {:.15f}", worst) + failed_checks(r)};
}

Outcome c10_delta_rate() {
  DeltaRateSpec spec;
  spec.base = taylor_green_base(0.1, 0.01, 1.0);
  spec.base.snapshot_every = 5;
  spec.order = 0;
  spec.deltas = {0.4, 0.2, 0.1};
  spec.tolerance = 0.2;
  const StudyReport r = delta_rate_study(spec);
  std::string pts;
  const auto d = r.column("delta"), e = r.column("l2l2");
  for (std::size_t i = 0; i < d.size(); ++i) pts += fmt::format(" {}:{:.4e}", d[i], e[i]);
  return {r.pass(), fits_text(r) + "; l2l2 errors" + pts + failed_checks(r)};
}

Outcome c11_n_limit() {
  NLimitSpec spec;
  spec.base = taylor_green_base(0.1, 0.01, 1.0);
  spec.base.snapshot_every = 5;
  spec.delta = 0.5;
  spec.orders = {0, 1, 2, 4, 8};
  spec.final_ratio = 0.5;
  spec.cost_band = 2.0;
  const StudyReport r = n_limit_study(spec);
  std::string s = "l2l2";
  for (double v : r.column("l2l2")) s += fmt::format(" {:.4e}", v);
  for (const auto& c : r.checks) s += fmt::format("; {} {}", c.name, c.detail);
  return {r.pass(), s};
}

Outcome c12_round_trips() {
  const SpectralField f = random_solenoidal(Grid::make(16), -5.0 / 3.0, 99);
  const auto bytes = io::encode_snapshot(f, {0.25, 3, 1});
  const io::Snapshot back = io::decode_snapshot(bytes, 16);
  const bool snap_ok = std::memcmp(back.field.data().data(), f.data().data(), f.data().size() * sizeof(cplx)) == 0 &&
                       io::encode_snapshot(back.field, back.meta) == bytes;

  const std::string text =
      "[grid]\nn = 16\n[model]\nkind = leray_deconv\ndelta = 0.3\nN = 1\n[fluid]\nnu = 0.05\n"
      "[time]\ndt = 0.01\nt_end = 0.1\n[ic]\nkind = random_solenoidal\nseed = 7\n"
      "[forcing]\nkind = manufactured\nexpression = abc\namplitude = 0.3\n";
  auto diag_bytes = [](const io::RunConfig& rc) {
    std::ostringstream out;
    io::write_csv(out, io::diag_table(run(rc.solver).diagnostics));
    return out.str();
  };
  const io::RunConfig first = io::to_run_config(io::ConfigDocument::parse(text));
  const std::string echo = io::effective_config_text(first);
  const io::RunConfig second = io::to_run_config(io::ConfigDocument::parse(echo, "echo"));
  const std::string a = diag_bytes(first), b = diag_bytes(second);
  const bool echo_ok = a == b && io::effective_config_text(second) == echo;
  return {snap_ok && echo_ok,
          fmt::format("snapshot bit-exact: {}; config echo reproduces diag CSV bytes: {} ({} bytes, fnv1a {})",
                      snap_ok ? "yes" : "no", echo_ok ? "yes" : "no", a.size(), io::fnv1a_hex(a))};
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"transfer-function exactness", c1_transfer_exactness},
      {"reference transfer values", c2_reference_values},
      {"deconvolution rate", c3_deconv_rate},
      {"operator norm of D_N", c4_operator_norm},
      {"cutoff table", c5_cutoff},
      {"inviscid energy neutrality", c6_energy_neutrality},
      {"energy equality and a-priori bound", c7_energy_equality},
      {"filter-error relations", c8_filter_error},
      {"consistency-error rate", c9_consistency_rate},
      {"model accuracy delta-rate", c10_delta_rate},
      {"N to infinity behaviour", c11_n_limit},
      {"format round trips", c12_round_trips},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu criteria, %d passed, %d failed\n", criteria.size(),
              int(criteria.size()) - failed, failed);
  return strict && failed > 0 ? 1 : 0;
}
