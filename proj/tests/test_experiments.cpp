#include <doctest.h>

#include <cmath>

#include "ldm/diagnostics.hpp"
#include "ldm/error.hpp"
#include "ldm/experiments.hpp"
#include "ldm/spectral.hpp"

using namespace ldm;

namespace {

// Independent OLS slope of log y on log x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("fit_rate recovers exact power laws") {
  const std::vector<double> x{0.4, 0.2, 0.1, 0.05};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 2.5));
  const RateFit f = fit_rate(x, y);
  CHECK(f.slope == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(f.residual < 1e-12);
  CHECK_FALSE(f.degenerate);
}

TEST_CASE("fit_rate flags degenerate inputs") {
  CHECK(fit_rate({0.2, 0.1, 0.05}, {1.0, 0.0, 0.5}).degenerate);
  CHECK(fit_rate({0.2, 0.1}, {1.0, 0.5}).degenerate);
  CHECK_THROWS_AS(fit_rate({0.2, 0.1, 0.05}, {1.0}), ValidationError);
}

TEST_CASE("deconvolution rate study against the multiplier oracle") {
  const Grid g = Grid::make(16);
  const std::vector<double> deltas{0.2, 0.1, 0.05};
  DeconvRateSpec spec{single_mode(g, {1, 0, 0}), deltas, {0, 2}, 0.05};
  const StudyReport r = deconv_rate_study(spec);
  REQUIRE(r.fits.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const int n = i == 0 ? 0 : 2;
    std::vector<double> oracle;
    for (double d : deltas) oracle.push_back(std::pow(d * d / (1.0 + d * d), n + 1));
    CHECK(r.fits[i].slope == doctest::Approx(ols_slope(deltas, oracle)).epsilon(1e-9));
    CHECK(r.fits[i].expected == 2.0 * n + 2.0);
  }
  // Raw errors equal the closed-form multiplier times the field norm.
  const auto err = r.column("error"), closed = r.column("error_closed_form");
  for (std::size_t i = 0; i < err.size(); ++i) CHECK(err[i] == doctest::Approx(closed[i]).epsilon(1e-6));
  CHECK_THROWS_AS(deconv_rate_study({spec.field, {0.1, 0.2, 0.05}, {0}}), ValidationError);
  CHECK_THROWS_AS(deconv_rate_study({spec.field, {0.1, 0.05}, {0}}), ValidationError);
}

TEST_CASE("deconvolution error is geometric in N") {
  const Grid g = Grid::make(16);
  const StudyReport r = deconv_order_study(single_mode(g, {1, 0, 0}), 0.1, {0, 1, 2, 3});
  const auto ratio = r.column("ratio");
  for (std::size_t i = 1; i < ratio.size(); ++i) CHECK(ratio[i] == doctest::Approx(0.01 / 1.01).epsilon(1e-8));
  CHECK(r.pass());
}

TEST_CASE("consistency rate study") {
  ConsistencyRateSpec spec{taylor_green(Grid::make(16)), {0.2, 0.1, 0.05}, {0, 1}, 0.3, 1e-12};
  const StudyReport r = consistency_rate_study(spec);
  CHECK(r.pass());
  // Single shell |k| = sqrt(3): the bound is attained.
  for (double v : r.column("ratio")) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> oracle;
  for (double d : spec.deltas) oracle.push_back(3.0 * d * d / (1.0 + 3.0 * d * d));
  CHECK(r.fits[0].slope == doctest::Approx(ols_slope(spec.deltas, oracle)).epsilon(1e-9));
}

TEST_CASE("cutoff table") {
  const StudyReport r = cutoff_table_study({{0, 1, 2, 10}, {1.0, 0.5, 0.25}});
  CHECK(r.pass());
  CHECK(r.rows.size() == 12);
  CHECK(r.column("k_c")[0] == 1.0);
  CHECK(r.column("k_c")[2] == 4.0);
}

TEST_CASE("transfer figure tables") {
  const StudyReport r = transfer_figures_study({});
  CHECK(r.rows.size() == 201);
  CHECK(r.columns.size() == 8);
  const auto d1 = r.column("D1"), h0 = r.column("H0"), k = r.column("k");
  for (std::size_t i = 0; i < k.size(); ++i) {
    CHECK(d1[i] == doctest::Approx(2.0 - 1.0 / (k[i] * k[i] + 1.0)));
    CHECK(h0[i] == doctest::Approx(1.0 / (1.0 + k[i] * k[i])));
  }
}

TEST_CASE("delta rate study with a pass-through point") {
  DeltaRateSpec spec;
  spec.base.grid = Grid::make(16);
  spec.base.nu = 0.1;
  spec.base.dt = 0.02;
  spec.base.t_end = 0.2;
  spec.base.snapshot_every = 2;
  spec.base.ic.kind = FieldSpec::Kind::taylor_green;
  spec.order = 1;
  spec.deltas = {0.2, 0.1, 0.05, 0.0};
  const StudyReport r = delta_rate_study(spec);
  const auto e = r.column("l2l2");
  CHECK(e[3] == 0.0);
  CHECK(r.column("below_floor")[3] == 1.0);
  CHECK(e[0] > e[1]);
  CHECK(e[1] > e[2]);
  CHECK(r.fits[0].points_used == 3);
  CHECK(r.fits[0].slope > 3.5);
}

TEST_CASE("N sweep study") {
  NLimitSpec spec;
  spec.base.grid = Grid::make(16);
  spec.base.nu = 0.1;
  spec.base.dt = 0.02;
  spec.base.t_end = 0.2;
  spec.base.snapshot_every = 2;
  spec.base.ic.kind = FieldSpec::Kind::taylor_green;
  spec.orders = {0, 1, 2, 4};
  const StudyReport r = n_limit_study(spec);
  const auto e = r.column("l2l2");
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] < e[i - 1]);
  CHECK(r.checks.size() == 3);

  // The N = 0 entry is the Leray-alpha run.
  SolverConfig alpha = spec.base;
  alpha.model = ModelKind::leray_deconv(0);
  alpha.filter = FilterSpec::make(0.5, 0);
  SolverConfig nse = spec.base;
  const double direct = model_error(run(alpha).trajectory, run(nse).trajectory).l2l2;
  CHECK(e[0] == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("summary text lists fits and checks") {
  const StudyReport r = cutoff_table_study({{0, 1}, {1.0, 0.5}});
  const std::string s = summary_text(r);
  CHECK(s.find("cutoff_table : PASS") != std::string::npos);
  CHECK(s.find("nondecreasing_in_N") != std::string::npos);
}
