#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ldm/field.hpp"

namespace ldm {

/// Descriptor for a generated initial condition or body force. Every kind
/// yields a real, zero-mean, solenoidal field.
struct FieldSpec {
  enum class Kind { zero, taylor_green, single_mode, random_solenoidal, manufactured };

  Kind kind = Kind::zero;
  double amplitude = 1.0;
  /// single_mode wavenumber.
  std::array<int, 3> k{1, 0, 0};
  /// random_solenoidal: energy spectrum E(k) ~ k^slope on 1 <= |k| <= kmax.
  double spectrum_slope = -5.0 / 3.0;
  int kmax = 0;  ///< 0 = the grid's dealiasing limit
  std::uint64_t seed = 1;
  /// manufactured: "abc" (Arnold-Beltrami-Childress, A = B = C) or "shear"
  /// (amplitude * sin(y) e_x).
  std::string expression = "abc";
};

std::string to_string(FieldSpec::Kind kind);
FieldSpec::Kind parse_field_kind(const std::string& name);

SpectralField make_field(const FieldSpec& spec, const Grid& grid);

/// amplitude * (sin x cos y cos z, -cos x sin y cos z, 0).
SpectralField taylor_green(const Grid& grid, double amplitude = 1.0);

/// amplitude * e cos(k.x) with a unit vector e perpendicular to k.
SpectralField single_mode(const Grid& grid, std::array<int, 3> k, double amplitude = 1.0);

/// Band-limited random solenoidal field scaled so hs_norm(f, 0) = amplitude.
SpectralField random_solenoidal(const Grid& grid, double spectrum_slope, std::uint64_t seed,
                                double amplitude = 1.0, int kmax = 0);

}  // namespace ldm
