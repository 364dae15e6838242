#include <doctest.h>

#include <random>
#include <vector>

#include "ldm/kernels.hpp"

using namespace ldm::kernels;

namespace {

constexpr int kN = 12;
constexpr std::size_t kPts = std::size_t(kN) * kN * kN;

std::vector<cplx> random_complex(std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v(count);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

std::vector<double> random_real(std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(count);
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<double> table() {
  std::vector<double> t(3 * (kN / 2) * (kN / 2) + 1);
  for (std::size_t q = 0; q < t.size(); ++q) t[q] = 1.0 / (1.0 + 0.1 * double(q));
  return t;
}

}  // namespace

TEST_CASE("parallel spectral kernels match the serial reference") {
  const auto t = table();
  auto a = random_complex(3 * kPts, 1), b = a;
  scale_radial(a, kN, 3, t);
  serial::scale_radial(b, kN, 3, t);
  CHECK(a == b);

  const auto fbar = random_complex(3 * kPts, 2);
  van_cittert_step(a, fbar, kN, t);
  serial::van_cittert_step(b, fbar, kN, t);
  CHECK(a == b);

  leray_project(a, kN);
  serial::leray_project(b, kN);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-15);

  auto c = random_complex(2 * kPts, 3), d = c;
  truncate_box(c, kN, 2, 3);
  serial::truncate_box(d, kN, 2, 3);
  CHECK(c == d);
}

TEST_CASE("parallel reductions match the serial reference") {
  const auto t = table();
  const auto a = random_complex(3 * kPts, 4), b = random_complex(3 * kPts, 5);
  CHECK(weighted_energy(a, kN, 3, t) == doctest::Approx(serial::weighted_energy(a, kN, 3, t)).epsilon(1e-13));
  CHECK(inner(a, b, kN, 3) == doctest::Approx(serial::inner(a, b, kN, 3)).epsilon(1e-12));
  // Deterministic: repeated calls agree bitwise.
  CHECK(weighted_energy(a, kN, 3, t) == weighted_energy(a, kN, 3, t));
}

TEST_CASE("parallel pointwise kernels match the serial reference") {
  const auto u = random_real(3 * kPts, 6), w = random_real(3 * kPts, 7), grad = random_real(9 * kPts, 8);
  std::vector<double> x(3 * kPts), y(3 * kPts);
  advect(u, grad, x, kPts);
  serial::advect(u, grad, y, kPts);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == doctest::Approx(y[i]).epsilon(1e-14));

  std::vector<double> o1(9 * kPts), o2(9 * kPts);
  outer(u, w, o1, kPts);
  serial::outer(u, w, o2, kPts);
  CHECK(o1 == o2);

  CHECK(tensor_l1(u, w, grad, kPts) == doctest::Approx(serial::tensor_l1(u, w, grad, kPts)).epsilon(1e-12));
}

TEST_CASE("truncate_box zeroes the Nyquist planes") {
  auto a = random_complex(kPts, 9);
  serial::truncate_box(a, kN, 1, kN);
  const std::size_t ny = kN / 2;
  CHECK(a[(ny * kN + 1) * kN + 1] == cplx{});
  CHECK(a[(1 * kN + 1) * kN + ny] == cplx{});
  CHECK(a[(1 * kN + 1) * kN + 1] != cplx{});
}
