// Serial reference versions of the kernels in kernels.cpp. Straight loops
// over the flat index; no partial sums.

#include <cmath>

#include "ldm/kernels.hpp"

namespace ldm::kernels::serial {

namespace {

struct Lattice {
  int n;
  int k(std::size_t idx, int axis) const {
    const std::size_t nn = std::size_t(n);
    std::size_t i = axis == 0 ? idx / (nn * nn) : axis == 1 ? (idx / nn) % nn : idx % nn;
    return int(i) < n / 2 ? int(i) : int(i) - n;
  }
  int k2(std::size_t idx) const {
    const int a = k(idx, 0), b = k(idx, 1), c = k(idx, 2);
    return a * a + b * b + c * c;
  }
};

}  // namespace

void scale_radial(std::span<cplx> data, int n, int ncomp, std::span<const double> table) {
  const std::size_t pts = std::size_t(n) * n * n;
  const Lattice lat{n};
  for (int c = 0; c < ncomp; ++c)
    for (std::size_t p = 0; p < pts; ++p) data[c * pts + p] *= table[lat.k2(p)];
}

void van_cittert_step(std::span<cplx> w, std::span<const cplx> fbar, int n,
                      std::span<const double> g_table) {
  const std::size_t pts = std::size_t(n) * n * n;
  const Lattice lat{n};
  for (std::size_t q = 0; q < w.size(); ++q) {
    const double g = g_table[lat.k2(q % pts)];
    w[q] = w[q] + (fbar[q] - g * w[q]);
  }
}

void leray_project(std::span<cplx> data, int n) {
  const std::size_t pts = std::size_t(n) * n * n;
  const Lattice lat{n};
  for (std::size_t p = 0; p < pts; ++p) {
    const double k[3] = {double(lat.k(p, 0)), double(lat.k(p, 1)), double(lat.k(p, 2))};
    const double kk = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    if (kk == 0.0) {
      for (int c = 0; c < 3; ++c) data[c * pts + p] = 0.0;
      continue;
    }
    cplx kdotw = 0.0;
    for (int c = 0; c < 3; ++c) kdotw += k[c] * data[c * pts + p];
    kdotw /= kk;
    for (int c = 0; c < 3; ++c) data[c * pts + p] -= k[c] * kdotw;
  }
}

void truncate_box(std::span<cplx> data, int n, int ncomp, int kmax) {
  const std::size_t pts = std::size_t(n) * n * n;
  const Lattice lat{n};
  for (std::size_t p = 0; p < pts; ++p) {
    bool out = false;
    for (int a = 0; a < 3; ++a) {
      const int k = lat.k(p, a);
      out = out || std::abs(k) > kmax || k == -n / 2;
    }
    if (out)
      for (int c = 0; c < ncomp; ++c) data[c * pts + p] = 0.0;
  }
}

double weighted_energy(std::span<const cplx> data, int n, int ncomp,
                       std::span<const double> weight) {
  const std::size_t pts = std::size_t(n) * n * n;
  const Lattice lat{n};
  double s = 0.0;
  for (int c = 0; c < ncomp; ++c)
    for (std::size_t p = 0; p < pts; ++p) s += weight[lat.k2(p)] * std::norm(data[c * pts + p]);
  return s;
}

double inner(std::span<const cplx> a, std::span<const cplx> b, int n, int ncomp) {
  const std::size_t total = std::size_t(n) * n * n * ncomp;
  double s = 0.0;
  for (std::size_t q = 0; q < total; ++q) s += (a[q] * std::conj(b[q])).real();
  return s;
}

void advect(std::span<const double> u, std::span<const double> grad, std::span<double> out,
            std::size_t points) {
  for (std::size_t p = 0; p < points; ++p) {
    for (int i = 0; i < 3; ++i) {
      double s = 0.0;
      for (int j = 0; j < 3; ++j) s += u[j * points + p] * grad[(i * 3 + j) * points + p];
      out[i * points + p] = s;
    }
  }
}

void outer(std::span<const double> u, std::span<const double> w, std::span<double> out,
           std::size_t points) {
  for (std::size_t p = 0; p < points; ++p)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[(i * 3 + j) * points + p] = u[i * points + p] * w[j * points + p];
}

double tensor_l1(std::span<const double> a, std::span<const double> c, std::span<const double> b,
                 std::size_t points) {
  double s = 0.0;
  for (std::size_t p = 0; p < points; ++p) {
    double f = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double t = a[i * points + p] * b[j * points + p] - c[i * points + p] * b[j * points + p];
        f += t * t;
      }
    }
    s += std::sqrt(f);
  }
  return s;
}

}  // namespace ldm::kernels::serial
