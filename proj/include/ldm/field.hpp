#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ldm/grid.hpp"

namespace ldm {

using cplx = std::complex<double>;

/// Truncated Fourier coefficients of a real periodic field with `components`
/// components (1 = scalar, 3 = vector, 9 = tensor/gradient).
///
/// Normalization: c(k) = (2pi)^-3 * integral of w exp(-i k.x), so
/// w(x) = sum_k c(k) exp(i k.x) and (2pi)^-3 integral |w|^2 = sum_k |c(k)|^2.
///
/// Storage is component-major; within a component the flat index is
/// (i1 * n + i2) * n + i3 over axis indices (see Grid).
///
/// The k = 0 mode and every mode with a component on the Nyquist plane
/// (k_j = -n/2) are held at zero; pin_constraints() re-imposes both.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(const Grid& grid, int components = 3, double time = 0.0);

  const Grid& grid() const noexcept { return grid_; }
  int n() const noexcept { return grid_.n; }
  int components() const noexcept { return ncomp_; }
  std::size_t points() const noexcept { return grid_.points(); }
  double time() const noexcept { return time_; }
  void set_time(double t) noexcept { time_ = t; }

  std::span<cplx> data() noexcept { return coeffs_; }
  std::span<const cplx> data() const noexcept { return coeffs_; }
  std::span<cplx> component(int c) noexcept { return {coeffs_.data() + c * points(), points()}; }
  std::span<const cplx> component(int c) const noexcept {
    return {coeffs_.data() + c * points(), points()};
  }

  std::size_t flat(int i1, int i2, int i3) const noexcept {
    return (std::size_t(i1) * grid_.n + i2) * grid_.n + i3;
  }
  cplx& at(int c, int i1, int i2, int i3) noexcept { return coeffs_[c * points() + flat(i1, i2, i3)]; }
  const cplx& at(int c, int i1, int i2, int i3) const noexcept {
    return coeffs_[c * points() + flat(i1, i2, i3)];
  }

  /// Access by signed wavenumber, each in [-n/2, n/2).
  cplx& mode(int c, int k1, int k2, int k3) noexcept {
    return at(c, grid_.index_of(k1), grid_.index_of(k2), grid_.index_of(k3));
  }
  const cplx& mode(int c, int k1, int k2, int k3) const noexcept {
    return at(c, grid_.index_of(k1), grid_.index_of(k2), grid_.index_of(k3));
  }

  /// Sets the conjugate pair c(k) = a, c(-k) = conj(a) for every component.
  void set_mode_pair(int k1, int k2, int k3, std::span<const cplx> amplitude);

  void pin_constraints() noexcept;
  void set_zero() noexcept;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s) noexcept;

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

 private:
  Grid grid_{};
  int ncomp_ = 0;
  double time_ = 0.0;
  std::vector<cplx> coeffs_;
};

/// Real samples w(x_j) on the uniform grid, x_j = 2pi j / n per axis.
class PhysicalField {
 public:
  PhysicalField() = default;
  PhysicalField(int n, int components);

  int n() const noexcept { return n_; }
  int components() const noexcept { return ncomp_; }
  std::size_t points() const noexcept { return std::size_t(n_) * n_ * n_; }

  std::span<double> data() noexcept { return values_; }
  std::span<const double> data() const noexcept { return values_; }
  std::span<double> component(int c) noexcept { return {values_.data() + c * points(), points()}; }
  std::span<const double> component(int c) const noexcept {
    return {values_.data() + c * points(), points()};
  }
  double& at(int c, int i1, int i2, int i3) noexcept {
    return values_[c * points() + (std::size_t(i1) * n_ + i2) * n_ + i3];
  }
  double at(int c, int i1, int i2, int i3) const noexcept {
    return values_[c * points() + (std::size_t(i1) * n_ + i2) * n_ + i3];
  }

  double coordinate(int i) const noexcept { return kTwoPi * i / n_; }

 private:
  int n_ = 0;
  int ncomp_ = 0;
  std::vector<double> values_;
};

/// Max |a - b| over all coefficients; throws GridMismatchError on shape mismatch.
double max_abs_diff(const SpectralField& a, const SpectralField& b);
double max_abs(const SpectralField& a);

/// Max |c(-k) - conj(c(k))| over the lattice.
double hermitian_defect(const SpectralField& f);

void require_same_shape(const SpectralField& a, const SpectralField& b, const char* what);

}  // namespace ldm
