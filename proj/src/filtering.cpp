#include "ldm/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ldm/error.hpp"
#include "ldm/kernels.hpp"
#include "ldm/spectral.hpp"

namespace ldm {

namespace {

double log_ratio_power(double x, int order) { return -(order + 1) * std::log1p(1.0 / x); }

std::vector<double> table_for(const Grid& grid, const FilterSpec& spec,
                              double (*fn)(double, const FilterSpec&)) {
  return radial_table(grid, [&](double k) { return fn(k, spec); });
}

}  // namespace

FilterSpec FilterSpec::make(double delta, int order, int max_order) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ValidationError("filter delta must be a finite positive number");
  }
  if (order < 0 || order > max_order) {
    throw ValidationError("deconvolution order N must lie in [0, " + std::to_string(max_order) +
                          "] (got " + std::to_string(order) + ")");
  }
  return FilterSpec{delta, order};
}

double transfer_g(double k, const FilterSpec& spec) {
  const double dk = spec.delta * k;
  return 1.0 / (1.0 + dk * dk);
}

double transfer_hn(double k, const FilterSpec& spec) {
  const double dk = spec.delta * k;
  const double x = dk * dk;
  if (x == 0.0) return 1.0;
  return std::min(1.0, -std::expm1(log_ratio_power(x, spec.order)));
}

double transfer_dn(double k, const FilterSpec& spec) {
  const double dk = spec.delta * k;
  // clamp to the exact bound N + 1
  return std::min(double(spec.order + 1), (1.0 + dk * dk) * transfer_hn(k, spec));
}

double transfer_deconv_error(double k, const FilterSpec& spec) {
  const double dk = spec.delta * k;
  const double x = dk * dk;
  if (x == 0.0) return 0.0;
  return std::exp(log_ratio_power(x, spec.order));
}

SpectralField apply_filter(const SpectralField& f, const FilterSpec& spec) {
  return apply_radial(f, table_for(f.grid(), spec, transfer_g));
}

SpectralField apply_dn(const SpectralField& f, const FilterSpec& spec) {
  return apply_radial(f, table_for(f.grid(), spec, transfer_dn));
}

SpectralField apply_hn(const SpectralField& f, const FilterSpec& spec) {
  return apply_radial(f, table_for(f.grid(), spec, transfer_hn));
}

SpectralField van_cittert(const SpectralField& fbar, const FilterSpec& spec, int max_order) {
  if (spec.order < 0 || spec.order > max_order) {
    throw ValidationError("van_cittert: order " + std::to_string(spec.order) + " exceeds limit " +
                          std::to_string(max_order));
  }
  const std::vector<double> g = table_for(fbar.grid(), spec, transfer_g);
  SpectralField w = fbar;
  for (int i = 0; i < spec.order; ++i) kernels::van_cittert_step(w.data(), fbar.data(), w.n(), g);
  return w;
}

SpectralField apply_hn_iterative(const SpectralField& f, const FilterSpec& spec) {
  return van_cittert(apply_filter(f, spec), spec);
}

SpectralField deconv_error_field(const SpectralField& f, const FilterSpec& spec) {
  return apply_radial(f, table_for(f.grid(), spec, transfer_deconv_error));
}

CutoffFrequency cutoff_frequency(const FilterSpec& spec) {
  CutoffFrequency out;
  out.k_star_closed = 1.0 / (spec.delta * std::sqrt(std::exp2(1.0 / (spec.order + 1)) - 1.0));

  double lo = 0.0, hi = 1.0 / spec.delta;
  while (transfer_hn(hi, spec) > 0.5) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (transfer_hn(mid, spec) > 0.5 ? lo : hi) = mid;
  }
  out.k_star = 0.5 * (lo + hi);
  out.k_c = int(std::floor(out.k_star + 1e-9 * std::max(1.0, out.k_star)));
  return out;
}

double operator_norm_dn(const FilterSpec& spec, double k_max) {
  if (!(k_max >= 0.0)) throw ValidationError("operator_norm_dn: k_max must be >= 0");
  constexpr int kSamples = 200000;
  double sup = transfer_dn(k_max, spec);
  for (int i = 0; i < kSamples; ++i) sup = std::max(sup, transfer_dn(k_max * i / kSamples, spec));
  return sup;
}

TransferTable make_transfer_table(const FilterSpec& spec, const std::vector<double>& ks) {
  TransferTable t{spec, {}};
  t.rows.reserve(ks.size());
  for (double k : ks) t.rows.push_back({k, transfer_g(k, spec), transfer_dn(k, spec), transfer_hn(k, spec)});
  return t;
}

}  // namespace ldm
