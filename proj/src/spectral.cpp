#include "ldm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ldm/error.hpp"
#include "ldm/fft.hpp"
#include "ldm/kernels.hpp"

namespace ldm {

namespace {

constexpr cplx kI{0.0, 1.0};

template <typename F>
void for_each_mode(const Grid& g, F&& fn) {
  const int n = g.n;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3)
        fn((std::size_t(i1) * n + i2) * n + i3, g.wavenumber(i1), g.wavenumber(i2), g.wavenumber(i3));
}

void require_vector(const SpectralField& f, const char* what) {
  if (f.components() != 3) throw ValidationError(std::string(what) + " needs a 3-component field");
}

}  // namespace

PhysicalField to_physical(const SpectralField& f) {
  const int n = f.n();
  PhysicalField out(n, f.components());
  std::vector<cplx> buf(f.points());
  const Fft3d& fft = Fft3d::get(n);
  for (int c = 0; c < f.components(); ++c) {
    auto src = f.component(c);
    std::copy(src.begin(), src.end(), buf.begin());
    fft.backward(buf);
    auto dst = out.component(c);
    for (std::size_t p = 0; p < buf.size(); ++p) dst[p] = buf[p].real();
  }
  return out;
}

PhysicalField to_physical_padded(const SpectralField& f, int m) {
  const int n = f.n();
  if (m < n || m % 2 != 0) throw ValidationError("padded grid size must be even and >= n");
  if (m == n) return to_physical(f);
  PhysicalField out(m, f.components());
  const std::size_t mp = std::size_t(m) * m * m;
  std::vector<cplx> buf(mp);
  const Fft3d& fft = Fft3d::get(m);
  auto idx = [m](int k) { return k >= 0 ? k : k + m; };
  for (int c = 0; c < f.components(); ++c) {
    std::fill(buf.begin(), buf.end(), cplx{});
    auto src = f.component(c);
    for_each_mode(f.grid(), [&](std::size_t p, int k1, int k2, int k3) {
      buf[(std::size_t(idx(k1)) * m + idx(k2)) * m + idx(k3)] = src[p];
    });
    fft.backward(buf);
    auto dst = out.component(c);
    for (std::size_t p = 0; p < mp; ++p) dst[p] = buf[p].real();
  }
  return out;
}

SpectralField from_physical(const PhysicalField& p, const Grid& grid, double time) {
  if (p.n() != grid.n) throw GridMismatchError("from_physical: sample grid differs from target grid");
  SpectralField out(grid, p.components(), time);
  const Fft3d& fft = Fft3d::get(grid.n);
  const double scale = 1.0 / double(grid.points());
  for (int c = 0; c < p.components(); ++c) {
    auto src = p.component(c);
    auto dst = out.component(c);
    for (std::size_t q = 0; q < src.size(); ++q) dst[q] = src[q];
    fft.forward(dst);
    for (auto& v : dst) v *= scale;
  }
  out.pin_constraints();
  return out;
}

double hs_norm(const SpectralField& f, double s) {
  const std::vector<double> w = radial_table(f.grid(), [s](double k) {
    return k == 0.0 ? 0.0 : std::pow(k, 2.0 * s);
  });
  return std::sqrt(kernels::weighted_energy(f.data(), f.n(), f.components(), w));
}

double energy(const SpectralField& f) {
  const std::vector<double> w(std::size_t(f.grid().max_k2()) + 1, 1.0);
  return 0.5 * kernels::weighted_energy(f.data(), f.n(), f.components(), w);
}

std::vector<double> shell_spectrum(const SpectralField& f) {
  const int shells = int(std::ceil(std::sqrt(3.0) * f.n() / 2.0));
  std::vector<double> e(shells, 0.0);
  for (int c = 0; c < f.components(); ++c) {
    auto comp = f.component(c);
    for_each_mode(f.grid(), [&](std::size_t p, int k1, int k2, int k3) {
      const int q = k1 * k1 + k2 * k2 + k3 * k3;
      if (q == 0) return;
      const int m = int(std::ceil(std::sqrt(double(q)) - 1e-12));
      e[std::min(m, shells) - 1] += 0.5 * std::norm(comp[p]);
    });
  }
  return e;
}

double inner(const SpectralField& a, const SpectralField& b) {
  require_same_shape(a, b, "inner");
  return kernels::inner(a.data(), b.data(), a.n(), a.components());
}

SpectralField leray_project(const SpectralField& f) {
  require_vector(f, "leray_project");
  SpectralField out = f;
  kernels::leray_project(out.data(), out.n());
  return out;
}

SpectralField project_pn(const SpectralField& f, int degree) {
  SpectralField out = f;
  kernels::truncate_box(out.data(), out.n(), out.components(), degree);
  return out;
}

SpectralField dealias(const SpectralField& f) { return project_pn(f, f.grid().dealias_kmax()); }

double divergence_defect(const SpectralField& f) {
  require_vector(f, "divergence_defect");
  double num = 0.0, den = 0.0;
  for_each_mode(f.grid(), [&](std::size_t p, int k1, int k2, int k3) {
    const cplx a = f.component(0)[p], b = f.component(1)[p], c = f.component(2)[p];
    num = std::max(num, std::abs(double(k1) * a + double(k2) * b + double(k3) * c));
    const double kk = std::sqrt(double(k1 * k1 + k2 * k2 + k3 * k3));
    den = std::max(den, kk * std::sqrt(std::norm(a) + std::norm(b) + std::norm(c)));
  });
  return den == 0.0 ? 0.0 : num / den;
}

SpectralField gradient(const SpectralField& f) {
  SpectralField out(f.grid(), f.components() * 3, f.time());
  for (int c = 0; c < f.components(); ++c) {
    auto src = f.component(c);
    auto d0 = out.component(c * 3), d1 = out.component(c * 3 + 1), d2 = out.component(c * 3 + 2);
    for_each_mode(f.grid(), [&](std::size_t p, int k1, int k2, int k3) {
      const cplx ik = kI * src[p];
      d0[p] = double(k1) * ik;
      d1[p] = double(k2) * ik;
      d2[p] = double(k3) * ik;
    });
  }
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  return apply_radial(f, radial_table(f.grid(), [](double k) { return -k * k; }));
}

SpectralField curl(const SpectralField& f) {
  require_vector(f, "curl");
  SpectralField out(f.grid(), 3, f.time());
  auto a = f.component(0), b = f.component(1), c = f.component(2);
  auto x = out.component(0), y = out.component(1), z = out.component(2);
  for_each_mode(f.grid(), [&](std::size_t p, int k1, int k2, int k3) {
    x[p] = kI * (double(k2) * c[p] - double(k3) * b[p]);
    y[p] = kI * (double(k3) * a[p] - double(k1) * c[p]);
    z[p] = kI * (double(k1) * b[p] - double(k2) * a[p]);
  });
  return out;
}

SpectralField divergence(const SpectralField& f) {
  require_vector(f, "divergence");
  SpectralField out(f.grid(), 1, f.time());
  auto a = f.component(0), b = f.component(1), c = f.component(2);
  auto d = out.component(0);
  for_each_mode(f.grid(), [&](std::size_t p, int k1, int k2, int k3) {
    d[p] = kI * (double(k1) * a[p] + double(k2) * b[p] + double(k3) * c[p]);
  });
  return out;
}

SpectralField partial(const SpectralField& f, int b1, int b2, int b3) {
  if (b1 < 0 || b2 < 0 || b3 < 0) throw ValidationError("partial: negative multi-index");
  SpectralField out = f;
  const int order = b1 + b2 + b3;
  cplx ipow = 1.0;
  for (int i = 0; i < order; ++i) ipow *= kI;
  for (int c = 0; c < f.components(); ++c) {
    auto d = out.component(c);
    for_each_mode(f.grid(), [&](std::size_t p, int k1, int k2, int k3) {
      const double m = std::pow(double(k1), b1) * std::pow(double(k2), b2) * std::pow(double(k3), b3);
      d[p] *= ipow * m;
    });
  }
  return out;
}

std::vector<double> radial_table(const Grid& grid, const std::function<double(double)>& m) {
  std::vector<double> t(std::size_t(grid.max_k2()) + 1);
  for (std::size_t q = 0; q < t.size(); ++q) t[q] = m(std::sqrt(double(q)));
  return t;
}

SpectralField apply_radial(const SpectralField& f, const std::vector<double>& table) {
  SpectralField out = f;
  apply_radial_inplace(out, table);
  return out;
}

void apply_radial_inplace(SpectralField& f, const std::vector<double>& table) {
  kernels::scale_radial(f.data(), f.n(), f.components(), table);
}

}  // namespace ldm
