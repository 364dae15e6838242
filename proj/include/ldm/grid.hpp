#pragma once

#include <cstddef>
#include <cstdlib>

namespace ldm {

/// Uniform n^3 grid on the periodic box (0, 2pi)^3.
///
/// Axis index i in [0, n) carries wavenumber i for i < n/2 and i - n
/// otherwise, so each axis runs 0, 1, ..., n/2-1, -n/2, ..., -1 (the FFT
/// order, also the snapshot file order).
struct Grid {
  int n = 0;
  double dealias_fraction = 2.0 / 3.0;

  /// Validated constructor: n even and >= 4, dealias fraction in (0, 1].
  static Grid make(int n, double dealias_fraction = 2.0 / 3.0);

  std::size_t points() const noexcept { return std::size_t(n) * n * n; }
  int wavenumber(int i) const noexcept { return i < n / 2 ? i : i - n; }
  int index_of(int k) const noexcept { return k >= 0 ? k : k + n; }
  int nyquist() const noexcept { return n / 2; }
  bool is_nyquist(int i) const noexcept { return i == n / 2; }

  /// Largest |k_j| retained by the dealiasing mask.
  int dealias_kmax() const noexcept;

  /// Largest |k|^2 on the grid.
  int max_k2() const noexcept { return 3 * (n / 2) * (n / 2); }

  double spacing() const noexcept;
  double cell_volume() const noexcept;

  bool operator==(const Grid&) const = default;
};

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kBoxVolume = kTwoPi * kTwoPi * kTwoPi;

}  // namespace ldm
