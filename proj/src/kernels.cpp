#include "ldm/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace ldm::kernels {

namespace {

inline int wavenumber(int i, int n) { return i < n / 2 ? i : i - n; }

// Sums per-plane partials in plane order.
inline double ordered_sum(const std::vector<double>& partial) {
  double s = 0.0;
  for (double p : partial) s += p;
  return s;
}

}  // namespace

void scale_radial(std::span<cplx> data, int n, int ncomp, std::span<const double> table) {
  const std::size_t pts = std::size_t(n) * n * n;
  for (int c = 0; c < ncomp; ++c) {
    cplx* comp = data.data() + c * pts;
#pragma omp parallel for collapse(2) schedule(static)
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        const int k1 = wavenumber(i1, n), k2 = wavenumber(i2, n);
        const int base = k1 * k1 + k2 * k2;
        cplx* row = comp + (std::size_t(i1) * n + i2) * n;
        for (int i3 = 0; i3 < n; ++i3) {
          const int k3 = wavenumber(i3, n);
          row[i3] *= table[base + k3 * k3];
        }
      }
    }
  }
}

void van_cittert_step(std::span<cplx> w, std::span<const cplx> fbar, int n,
                      std::span<const double> g_table) {
  const std::size_t pts = std::size_t(n) * n * n;
  const int ncomp = int(w.size() / pts);
  for (int c = 0; c < ncomp; ++c) {
    cplx* wc = w.data() + c * pts;
    const cplx* fc = fbar.data() + c * pts;
#pragma omp parallel for collapse(2) schedule(static)
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        const int k1 = wavenumber(i1, n), k2 = wavenumber(i2, n);
        const int base = k1 * k1 + k2 * k2;
        const std::size_t off = (std::size_t(i1) * n + i2) * n;
        for (int i3 = 0; i3 < n; ++i3) {
          const int k3 = wavenumber(i3, n);
          const double g = g_table[base + k3 * k3];
          wc[off + i3] += fc[off + i3] - g * wc[off + i3];
        }
      }
    }
  }
}

void leray_project(std::span<cplx> data, int n) {
  const std::size_t pts = std::size_t(n) * n * n;
  cplx* u = data.data();
  cplx* v = u + pts;
  cplx* w = v + pts;
#pragma omp parallel for collapse(2) schedule(static)
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      const double k1 = wavenumber(i1, n), k2 = wavenumber(i2, n);
      const std::size_t off = (std::size_t(i1) * n + i2) * n;
      for (int i3 = 0; i3 < n; ++i3) {
        const double k3 = wavenumber(i3, n);
        const double kk = k1 * k1 + k2 * k2 + k3 * k3;
        const std::size_t p = off + i3;
        if (kk == 0.0) {
          u[p] = v[p] = w[p] = 0.0;
          continue;
        }
        const cplx kdotw = (k1 * u[p] + k2 * v[p] + k3 * w[p]) / kk;
        u[p] -= k1 * kdotw;
        v[p] -= k2 * kdotw;
        w[p] -= k3 * kdotw;
      }
    }
  }
}

void truncate_box(std::span<cplx> data, int n, int ncomp, int kmax) {
  const std::size_t pts = std::size_t(n) * n * n;
  for (int c = 0; c < ncomp; ++c) {
    cplx* comp = data.data() + c * pts;
#pragma omp parallel for collapse(2) schedule(static)
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        const int k1 = std::abs(wavenumber(i1, n)), k2 = std::abs(wavenumber(i2, n));
        cplx* row = comp + (std::size_t(i1) * n + i2) * n;
        const bool plane_out = k1 > kmax || k2 > kmax || i1 == n / 2 || i2 == n / 2;
        for (int i3 = 0; i3 < n; ++i3) {
          const int k3 = std::abs(wavenumber(i3, n));
          if (plane_out || k3 > kmax || i3 == n / 2) row[i3] = 0.0;
        }
      }
    }
  }
}

double weighted_energy(std::span<const cplx> data, int n, int ncomp,
                       std::span<const double> weight) {
  const std::size_t pts = std::size_t(n) * n * n;
  std::vector<double> partial(std::size_t(n) * ncomp, 0.0);
  for (int c = 0; c < ncomp; ++c) {
    const cplx* comp = data.data() + c * pts;
#pragma omp parallel for schedule(static)
    for (int i1 = 0; i1 < n; ++i1) {
      const int k1 = wavenumber(i1, n);
      double acc = 0.0;
      for (int i2 = 0; i2 < n; ++i2) {
        const int k2 = wavenumber(i2, n);
        const int base = k1 * k1 + k2 * k2;
        const cplx* row = comp + (std::size_t(i1) * n + i2) * n;
        for (int i3 = 0; i3 < n; ++i3) {
          const int k3 = wavenumber(i3, n);
          acc += weight[base + k3 * k3] * std::norm(row[i3]);
        }
      }
      partial[std::size_t(c) * n + i1] = acc;
    }
  }
  return ordered_sum(partial);
}

double inner(std::span<const cplx> a, std::span<const cplx> b, int n, int ncomp) {
  const std::size_t pts = std::size_t(n) * n * n;
  const std::size_t plane = std::size_t(n) * n;
  std::vector<double> partial(std::size_t(n) * ncomp, 0.0);
  for (int c = 0; c < ncomp; ++c) {
    const cplx* ac = a.data() + c * pts;
    const cplx* bc = b.data() + c * pts;
#pragma omp parallel for schedule(static)
    for (int i1 = 0; i1 < n; ++i1) {
      double acc = 0.0;
      for (std::size_t p = i1 * plane; p < (i1 + 1) * plane; ++p) {
        acc += ac[p].real() * bc[p].real() + ac[p].imag() * bc[p].imag();
      }
      partial[std::size_t(c) * n + i1] = acc;
    }
  }
  return ordered_sum(partial);
}

void advect(std::span<const double> u, std::span<const double> grad, std::span<double> out,
            std::size_t points) {
  const double* u0 = u.data();
  const double* u1 = u0 + points;
  const double* u2 = u1 + points;
  for (int i = 0; i < 3; ++i) {
    const double* g0 = grad.data() + (i * 3 + 0) * points;
    const double* g1 = grad.data() + (i * 3 + 1) * points;
    const double* g2 = grad.data() + (i * 3 + 2) * points;
    double* o = out.data() + i * points;
#pragma omp parallel for simd schedule(static)
    for (std::size_t p = 0; p < points; ++p) o[p] = u0[p] * g0[p] + u1[p] * g1[p] + u2[p] * g2[p];
  }
}

void outer(std::span<const double> u, std::span<const double> w, std::span<double> out,
           std::size_t points) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double* ui = u.data() + i * points;
      const double* wj = w.data() + j * points;
      double* o = out.data() + (i * 3 + j) * points;
#pragma omp parallel for simd schedule(static)
      for (std::size_t p = 0; p < points; ++p) o[p] = ui[p] * wj[p];
    }
  }
}

double tensor_l1(std::span<const double> a, std::span<const double> c, std::span<const double> b,
                 std::size_t points) {
  const std::size_t chunks = 256;
  std::vector<double> partial(chunks, 0.0);
  const std::size_t per = (points + chunks - 1) / chunks;
#pragma omp parallel for schedule(static)
  for (std::size_t ch = 0; ch < chunks; ++ch) {
    double acc = 0.0;
    const std::size_t end = std::min(points, (ch + 1) * per);
    for (std::size_t p = ch * per; p < end; ++p) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const double t = a[i * points + p] * b[j * points + p] - c[i * points + p] * b[j * points + p];
          s += t * t;
        }
      }
      acc += std::sqrt(s);
    }
    partial[ch] = acc;
  }
  return ordered_sum(partial);
}

}  // namespace ldm::kernels
