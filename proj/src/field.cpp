#include "ldm/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ldm/error.hpp"

namespace ldm {

Grid Grid::make(int n, double dealias_fraction) {
  if (n < 4 || n % 2 != 0) {
    throw ValidationError("grid.n must be an even integer >= 4 (got " + std::to_string(n) + ")");
  }
  if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0)) {
    throw ValidationError("grid.dealias_fraction must lie in (0, 1]");
  }
  return Grid{n, dealias_fraction};
}

int Grid::dealias_kmax() const noexcept {
  // Small slack so that e.g. 2/3 * 48/2 = 16 is not lost to rounding.
  return std::min(n / 2 - 1, int(std::floor(dealias_fraction * (n / 2) + 1e-9)));
}

double Grid::spacing() const noexcept { return kTwoPi / n; }
double Grid::cell_volume() const noexcept {
  const double h = spacing();
  return h * h * h;
}

SpectralField::SpectralField(const Grid& grid, int components, double time)
    : grid_(grid), ncomp_(components), time_(time), coeffs_(grid.points() * components) {}

void SpectralField::set_mode_pair(int k1, int k2, int k3, std::span<const cplx> amplitude) {
  for (int c = 0; c < ncomp_; ++c) {
    mode(c, k1, k2, k3) = amplitude[c];
    mode(c, -k1, -k2, -k3) = std::conj(amplitude[c]);
  }
}

void SpectralField::pin_constraints() noexcept {
  const int n = grid_.n;
  const int ny = n / 2;
  for (int c = 0; c < ncomp_; ++c) {
    auto comp = component(c);
    comp[0] = 0.0;
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        if (i1 == ny || i2 == ny) {
          std::fill_n(comp.begin() + flat(i1, i2, 0), n, cplx{});
        } else {
          comp[flat(i1, i2, ny)] = 0.0;
        }
      }
    }
  }
}

void SpectralField::set_zero() noexcept { std::fill(coeffs_.begin(), coeffs_.end(), cplx{}); }

void require_same_shape(const SpectralField& a, const SpectralField& b, const char* what) {
  if (a.grid() != b.grid() || a.components() != b.components()) {
    throw GridMismatchError(std::string(what) + ": fields differ in grid or component count (n=" +
                            std::to_string(a.n()) + " vs n=" + std::to_string(b.n()) + ")");
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PhysicalField::PhysicalField(int n, int components)
    : n_(n), ncomp_(components), values_(std::size_t(n) * n * n * components) {}

double max_abs_diff(const SpectralField& a, const SpectralField& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
  return m;
}

double max_abs(const SpectralField& a) {
  double m = 0.0;
  for (const auto& c : a.data()) m = std::max(m, std::abs(c));
  return m;
}

double hermitian_defect(const SpectralField& f) {
  const Grid& g = f.grid();
  const int n = g.n;
  double m = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        for (int i3 = 0; i3 < n; ++i3) {
          const int j1 = (n - i1) % n, j2 = (n - i2) % n, j3 = (n - i3) % n;
          m = std::max(m, std::abs(f.at(c, j1, j2, j3) - std::conj(f.at(c, i1, i2, i3))));
        }
      }
    }
  }
  return m;
}

}  // namespace ldm
