#pragma once

// Differential (Helmholtz) filter G = (1 - delta^2 Lap)^-1, van Cittert
// deconvolution D_N = sum_{n=0}^{N} (I - G)^n and the truncation operator
// H_N = D_N G, all diagonal in Fourier space.
//
// Transfer functions take the physical wavenumber magnitude k and delta
// separately and work internally with x = (delta k)^2:
//
//   G(x) = 1 / (1 + x)
//   H_N(x) = 1 - (x / (1 + x))^{N+1}
//   D_N(x) = (1 + x) H_N(x)
//
// (x / (1 + x))^{N+1} is evaluated as exp(-(N+1) log1p(1/x)) and H_N as
// -expm1(...) so that 1 - r^{N+1} keeps full relative accuracy for large x.

#include <vector>

#include "ldm/field.hpp"

namespace ldm {

inline constexpr int kDefaultMaxOrder = 64;

struct FilterSpec {
  double delta = 0.0;
  int order = 0;

  /// Throws ValidationError unless delta > 0 and 0 <= order <= max_order.
  static FilterSpec make(double delta, int order, int max_order = kDefaultMaxOrder);
};

double transfer_g(double k, const FilterSpec& spec);
double transfer_dn(double k, const FilterSpec& spec);
double transfer_hn(double k, const FilterSpec& spec);
/// Multiplier of w - D_N G w, i.e. ((delta k)^2 / (1 + (delta k)^2))^{N+1}.
double transfer_deconv_error(double k, const FilterSpec& spec);

SpectralField apply_filter(const SpectralField& f, const FilterSpec& spec);
SpectralField apply_dn(const SpectralField& f, const FilterSpec& spec);
SpectralField apply_hn(const SpectralField& f, const FilterSpec& spec);

/// Runs the van Cittert fixed-point iteration w_{n+1} = w_n + (fbar - G w_n)
/// from w_0 = fbar for exactly spec.order steps. Each step is one filter
/// application. Throws ValidationError if order exceeds max_order.
SpectralField van_cittert(const SpectralField& fbar, const FilterSpec& spec,
                          int max_order = kDefaultMaxOrder);

/// H_N f via van_cittert(apply_filter(f)), i.e. N + 1 filter applications.
SpectralField apply_hn_iterative(const SpectralField& f, const FilterSpec& spec);

/// w - D_N G w as a diagonal multiplier.
SpectralField deconv_error_field(const SpectralField& f, const FilterSpec& spec);

struct CutoffFrequency {
  double k_star = 0.0;         ///< root of H_N(k) = 1/2 found by bisection
  double k_star_closed = 0.0;  ///< (1/delta) (2^{1/(N+1)} - 1)^{-1/2}
  int k_c = 0;                 ///< greatest integer <= k_star
};

CutoffFrequency cutoff_frequency(const FilterSpec& spec);

/// sup of D_N(k) over k in [0, k_max], sampled on a dense grid that includes
/// both end points.
double operator_norm_dn(const FilterSpec& spec, double k_max);

struct TransferRow {
  double k, g_hat, d_hat, h_hat;
};

struct TransferTable {
  FilterSpec spec;
  std::vector<TransferRow> rows;
};

TransferTable make_transfer_table(const FilterSpec& spec, const std::vector<double>& ks);

}  // namespace ldm
