#include <doctest.h>

#include <cmath>
#include <numeric>

#include "ldm/error.hpp"
#include "ldm/flow_fields.hpp"
#include "ldm/spectral.hpp"

using namespace ldm;

TEST_CASE("grid validation and wavenumber order") {
  CHECK_THROWS_AS(Grid::make(7), ValidationError);
  CHECK_THROWS_AS(Grid::make(2), ValidationError);
  CHECK_THROWS_AS(Grid::make(16, 0.0), ValidationError);
  const Grid g = Grid::make(8);
  CHECK(g.wavenumber(0) == 0);
  CHECK(g.wavenumber(3) == 3);
  CHECK(g.wavenumber(4) == -4);
  CHECK(g.wavenumber(7) == -1);
  CHECK(g.index_of(-1) == 7);
  CHECK(Grid::make(32).dealias_kmax() == 10);
  CHECK(Grid::make(48).dealias_kmax() == 16);
  CHECK(Grid::make(32, 1.0).dealias_kmax() == 15);
}

TEST_CASE("physical round trip and Parseval") {
  const Grid g = Grid::make(16);
  const SpectralField f = random_solenoidal(g, -5.0 / 3.0, 4);
  const PhysicalField p = to_physical(f);
  const SpectralField back = from_physical(p, g);
  CHECK(max_abs_diff(f, back) < 1e-14);

  double mean_sq = 0.0;
  for (double v : p.data()) mean_sq += v * v;
  mean_sq /= double(g.points());
  CHECK(mean_sq == doctest::Approx(2.0 * energy(f)).epsilon(1e-12));
  CHECK(hermitian_defect(f) < 1e-15);
}

TEST_CASE("sampling a known field") {
  const Grid g = Grid::make(8);
  const SpectralField tg = taylor_green(g, 2.0);
  // sin x cos y cos z has eight modes of magnitude 1/8.
  CHECK(std::abs(tg.mode(0, 1, 1, 1)) == doctest::Approx(0.25));
  CHECK(energy(tg) == doctest::Approx(0.5 * 2.0 * 4.0 / 8.0).epsilon(1e-13));
  const PhysicalField p = to_physical(tg);
  const double x = p.coordinate(1), y = p.coordinate(2), z = p.coordinate(3);
  CHECK(p.at(0, 1, 2, 3) == doctest::Approx(2.0 * std::sin(x) * std::cos(y) * std::cos(z)));
  CHECK(p.at(1, 1, 2, 3) == doctest::Approx(-2.0 * std::cos(x) * std::sin(y) * std::cos(z)));
}

TEST_CASE("padded sampling agrees with the series") {
  const Grid g = Grid::make(8);
  const SpectralField f = single_mode(g, {1, 2, 0}, 1.0);
  const PhysicalField p = to_physical_padded(f, 12);
  const PhysicalField q = to_physical(f);
  // Grid points shared by both lattices: every third fine point is every second coarse point.
  CHECK(p.at(2, 3, 6, 9) == doctest::Approx(q.at(2, 2, 4, 6)).epsilon(1e-13));
  CHECK_THROWS_AS(to_physical_padded(f, 6), ValidationError);
}

TEST_CASE("constraints pinned after from_physical") {
  const Grid g = Grid::make(8);
  PhysicalField p(8, 1);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) p.at(0, i, j, k) = 3.0 + ((i + j + k) % 2 ? 1.0 : -1.0);
  const SpectralField f = from_physical(p, g);
  CHECK(max_abs(f) == 0.0);
}

TEST_CASE("hs norm and shell spectrum") {
  const Grid g = Grid::make(16);
  const SpectralField f = single_mode(g, {2, 1, 2}, 1.5);
  const double e = energy(f);
  CHECK(hs_norm(f, 0.0) == doctest::Approx(std::sqrt(2.0 * e)));
  CHECK(hs_norm(f, 1.0) == doctest::Approx(3.0 * std::sqrt(2.0 * e)));
  CHECK(hs_norm(f, -1.0) == doctest::Approx(std::sqrt(2.0 * e) / 3.0));

  const SpectralField r = random_solenoidal(g, -5.0 / 3.0, 9);
  const auto spec = shell_spectrum(r);
  CHECK(spec.size() == std::size_t(std::ceil(std::sqrt(3.0) * 8)));
  CHECK(std::accumulate(spec.begin(), spec.end(), 0.0) == doctest::Approx(energy(r)).epsilon(1e-13));
  const auto s1 = shell_spectrum(f);
  CHECK(s1[2] == doctest::Approx(e));
}

TEST_CASE("Leray projection") {
  const Grid g = Grid::make(16);
  SpectralField f = random_solenoidal(g, -1.0, 3);
  SpectralField grad_part(g, 3);
  const cplx phi{0.3, -0.2};
  const cplx a[3] = {cplx(0, 1) * 1.0 * phi, cplx(0, 1) * 2.0 * phi, cplx(0, 1) * -1.0 * phi};
  grad_part.set_mode_pair(1, 2, -1, a);
  const SpectralField mixed = f + grad_part;
  CHECK(divergence_defect(mixed) > 1e-3);
  const SpectralField p = leray_project(mixed);
  CHECK(divergence_defect(p) < 1e-15);
  CHECK(max_abs_diff(p, f) < 1e-15);
  CHECK(max_abs_diff(leray_project(p), p) < 1e-16);
}

TEST_CASE("spectral calculus") {
  const Grid g = Grid::make(16);
  const SpectralField f = random_solenoidal(g, -1.0, 5);
  CHECK(max_abs(divergence(f)) < 1e-15);
  // curl curl f = -Lap f for solenoidal f.
  SpectralField cc = curl(curl(f));
  cc += laplacian(f);
  CHECK(max_abs(cc) < 1e-12);
  const SpectralField gr = gradient(f);
  CHECK(gr.components() == 9);
  CHECK(max_abs_diff(partial(f, 0, 1, 0), [&] {
          SpectralField c(g, 3);
          for (int i = 0; i < 3; ++i) {
            auto src = gr.component(i * 3 + 1);
            std::copy(src.begin(), src.end(), c.component(i).begin());
          }
          return c;
        }()) == 0.0);
  SpectralField lap = partial(f, 2, 0, 0);
  lap += partial(f, 0, 2, 0);
  lap += partial(f, 0, 0, 2);
  CHECK(max_abs_diff(lap, laplacian(f)) < 1e-12);
}

TEST_CASE("dealias and project_pn") {
  const Grid g = Grid::make(16);
  SpectralField f(g, 3);
  const cplx a[3] = {1.0, 0.0, 0.0};
  f.set_mode_pair(0, 6, 0, a);
  f.set_mode_pair(0, 4, 1, a);
  const SpectralField d = dealias(f);
  CHECK(std::abs(d.mode(0, 0, 6, 0)) == 0.0);
  CHECK(std::abs(d.mode(0, 0, 4, 1)) == 1.0);
  CHECK(std::abs(project_pn(f, 3).mode(0, 0, 4, 1)) == 0.0);
}

TEST_CASE("field arithmetic guards shapes") {
  SpectralField a(Grid::make(8), 3), b(Grid::make(16), 3);
  CHECK_THROWS_AS(a += b, GridMismatchError);
  CHECK_THROWS_AS(inner(a, b), GridMismatchError);
}
