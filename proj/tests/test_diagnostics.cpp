#include <doctest.h>

#include <cmath>

#include "ldm/diagnostics.hpp"
#include "ldm/error.hpp"
#include "ldm/spectral.hpp"

using namespace ldm;

TEST_CASE("energy record of simple states") {
  SolverConfig c;
  c.grid = Grid::make(16);
  c.nu = 0.2;
  const SpectralField z(c.grid, 3);
  const DiagRecord r0 = energy_record(z, c, z);
  CHECK(r0.energy == 0.0);
  CHECK(r0.h1_seminorm_sq == 0.0);
  CHECK(r0.dissipation == 0.0);
  CHECK(r0.input_power == 0.0);

  const SpectralField m = single_mode(c.grid, {0, 2, 0}, 1.3);
  const DiagRecord r = energy_record(m, c, m);
  CHECK(r.h1_seminorm_sq == doctest::Approx(4.0 * 2.0 * r.energy));
  CHECK(r.dissipation == doctest::Approx(c.nu * r.h1_seminorm_sq));
  CHECK(r.input_power == doctest::Approx(2.0 * r.energy));
}

TEST_CASE("tau tensor basics") {
  const Grid g = Grid::make(16);
  const SpectralField z(g, 3);
  CHECK(tau_tensor(z, FilterSpec::make(0.3, 0)).l1_norm == 0.0);
  const SpectralField v = random_solenoidal(g, -1.0, 6);
  CHECK(tau_tensor(v, FilterSpec::make(1e-8, 0)).l1_norm < 1e-12);
  CHECK(tau_tensor(v, FilterSpec::make(0.3, 1)).quadrature_n == 24);
}

TEST_CASE("tau of a single mode matches direct evaluation") {
  // v = A e cos(x . k), k = (1,0,0), e = (0,-1,0): v_bar - v = -(r) v with r = x/(1+x).
  const Grid g = Grid::make(8);
  const double a = 0.8, delta = 0.4;
  const SpectralField v = single_mode(g, {1, 0, 0}, a);
  const TauResult t = tau_tensor(v, FilterSpec::make(delta, 0));
  const double r = delta * delta / (1.0 + delta * delta);
  // integral of r A^2 cos^2 x over the box.
  const double want = r * a * a * 0.5 * kBoxVolume;
  CHECK(t.l1_norm == doctest::Approx(want).epsilon(1e-13));
  // Component (1,1) at a sample point: -r A^2 cos^2 x.
  const double x = kTwoPi * 2 / t.quadrature_n;
  CHECK(t.tensor.at(4, 2, 0, 0) == doctest::Approx(-r * a * a * std::cos(x) * std::cos(x)).epsilon(1e-13));
}

TEST_CASE("consistency bound values") {
  const Grid g = Grid::make(16);
  const SpectralField v = single_mode(g, {1, 0, 0}, 1.0);
  const FilterSpec s = FilterSpec::make(0.1, 1);
  const ConsistencyReport c = consistency_bound_rhs(v, s);
  const double r = 0.01 / 1.01;
  const double vn2 = std::pow(hs_norm(v, 0.0), 2);
  CHECK(c.bound_rhs == doctest::Approx(kBoxVolume * r * r * vn2).epsilon(1e-13));
  CHECK(c.crude_bound == doctest::Approx(kBoxVolume * 1e-4 * vn2).epsilon(1e-13));
  // N = 0 bound never exceeds the delta^2 ||Lap v|| ||v|| branch.
  const SpectralField w = random_solenoidal(g, -1.0, 2);
  const ConsistencyReport c0 = consistency_bound_rhs(w, FilterSpec::make(0.2, 0));
  CHECK(c0.bound_rhs <= kBoxVolume * 0.04 * hs_norm(w, 2.0) * hs_norm(w, 0.0));
}

TEST_CASE("measured tau never exceeds the bound") {
  const Grid g = Grid::make(16);
  for (int seed : {1, 2}) {
    const SpectralField v = random_solenoidal(g, -5.0 / 3.0, std::uint64_t(seed));
    for (double d : {0.2, 0.1, 0.05}) {
      for (int n : {0, 1, 2}) {
        const ConsistencyReport c = consistency_report(v, FilterSpec::make(d, n));
        CHECK(c.l1_tau <= c.bound_rhs);
        CHECK(c.ratio > 0.0);
      }
    }
  }
}

TEST_CASE("filter error relations") {
  const Grid g = Grid::make(16);
  const SpectralField m = single_mode(g, {2, 1, 0}, 1.0);
  const FilterErrorReport rm = filter_error_bounds_check(m, 0.3, 2);
  CHECK(rm.all_ok());
  CHECK(rm.rows.size() == 10);
  CHECK(rm.max_equality_rel_error < 1e-14);

  const SpectralField u = random_solenoidal(g, -1.0, 8);
  for (double d : {0.5, 0.1}) {
    const FilterErrorReport r = filter_error_bounds_check(u, d, 2);
    CHECK(r.all_ok());
    CHECK(r.rows[0].lhs <= r.rows[0].gradient_bound);
  }
  CHECK_THROWS_AS(filter_error_bounds_check(u, 0.1, 3), ValidationError);
}

TEST_CASE("time averages") {
  std::vector<std::pair<double, double>> c, s;
  const int n = 400;
  for (int i = 0; i <= n; ++i) {
    const double t = kTwoPi * i / n;
    c.emplace_back(t, 3.5);
    s.emplace_back(t, std::sin(t));
  }
  CHECK(time_average(c, kTwoPi) == doctest::Approx(3.5));
  CHECK(std::abs(time_average(s, kTwoPi)) < 1e-12);
  // Interpolated horizon.
  CHECK(time_average(c, 1.0) == doctest::Approx(3.5));
  CHECK_THROWS_AS(time_average(c, 7.0), ValidationError);

  std::vector<std::pair<double, double>> decay;
  for (int i = 0; i <= 100; ++i) decay.emplace_back(0.1 * i, std::exp(-0.1 * i));
  CHECK(time_average(decay, 5.0) > time_average(decay, 10.0));
}

TEST_CASE("model error norms") {
  const Grid g = Grid::make(8);
  Trajectory a, b;
  const SpectralField base = taylor_green(g);
  const SpectralField bump = single_mode(g, {1, 0, 0}, 0.5);
  for (int i = 0; i <= 4; ++i) {
    a.snapshots.push_back({0.25 * i, base});
    b.snapshots.push_back({0.25 * i, base + bump});
  }
  const ModelError same = model_error(a, a);
  CHECK(same.l2_final == 0.0);
  CHECK(same.l2l2 == 0.0);
  CHECK(same.h1_timeavg == 0.0);
  const ModelError e = model_error(b, a);
  const double bn = hs_norm(bump, 0.0);
  CHECK(e.l2_final == doctest::Approx(bn));
  CHECK(e.l2l2 == doctest::Approx(bn));  // horizon 1
  CHECK(e.h1_timeavg == doctest::Approx(bn));

  Trajectory shifted = a;
  shifted.snapshots[2].t = 0.3;
  CHECK_THROWS_AS(model_error(shifted, a), GridMismatchError);
  Trajectory other;
  for (int i = 0; i <= 4; ++i) other.snapshots.push_back({0.25 * i, taylor_green(Grid::make(16))});
  CHECK_THROWS_AS(model_error(other, a), GridMismatchError);
}

TEST_CASE("Reynolds report") {
  SolverConfig c;
  c.grid = Grid::make(16);
  c.nu = 0.05;
  c.dt = 0.01;
  c.t_end = 0.1;
  c.snapshot_every = 5;
  c.ic.kind = FieldSpec::Kind::single_mode;
  c.ic.amplitude = 1e-8;  // effectively a decaying Stokes mode
  const RunResult r = run(c);
  const ReynoldsScales s = reynolds_report(r.trajectory, r.diagnostics, c, 0.2);
  CHECK(s.U == doctest::Approx(1e-8 / std::sqrt(2.0)).epsilon(5e-3));
  CHECK(s.Re == doctest::Approx(s.U * kTwoPi / c.nu));
  std::vector<std::pair<double, double>> h1;
  for (const auto& d : r.diagnostics) h1.emplace_back(d.t, d.h1_seminorm_sq);
  CHECK(s.eps_avg == doctest::Approx(c.nu * time_average(h1, c.t_end)));
  CHECK(std::isfinite(s.tau_normalized));
  CHECK(std::isfinite(s.scaling_estimate));
  CHECK(std::isfinite(s.dissipation_estimate));
}

TEST_CASE("Reynolds report for forced flow is finite") {
  SolverConfig c;
  c.grid = Grid::make(32);
  c.nu = 0.05;
  c.dt = 0.01;
  c.t_end = 0.1;
  c.snapshot_every = 5;
  c.ic.kind = FieldSpec::Kind::random_solenoidal;
  c.forcing.kind = FieldSpec::Kind::manufactured;
  const RunResult r = run(c);
  const ReynoldsScales s = reynolds_report(r.trajectory, r.diagnostics, c, 0.2);
  CHECK(s.U > 0.0);
  CHECK(s.Re > 0.0);
  CHECK(s.eps_avg > 0.0);
  CHECK(s.tau_normalized > 0.0);
  CHECK(std::isfinite(s.scaling_estimate));
}
