#pragma once

#include <functional>
#include <vector>

#include "ldm/field.hpp"

namespace ldm {

// ---- transforms -----------------------------------------------------------

/// Samples the Fourier series on the grid. Requires conjugate symmetry; the
/// (round-off) imaginary part of the inverse transform is discarded.
PhysicalField to_physical(const SpectralField& f);

/// Samples the Fourier series on a finer m^3 grid (m >= n) by zero padding.
/// Used to form alias-free quadratic products.
PhysicalField to_physical_padded(const SpectralField& f, int m);

/// Discrete forward transform scaled by n^-3, with the k = 0 and Nyquist
/// modes pinned to zero afterwards.
SpectralField from_physical(const PhysicalField& p, const Grid& grid, double time = 0.0);

// ---- norms and spectra ----------------------------------------------------

/// (sum_{k != 0} |k|^{2s} |c(k)|^2)^{1/2}, s may be negative.
double hs_norm(const SpectralField& f, double s);

/// 1/2 sum_k |c(k)|^2 (volume-averaged kinetic energy).
double energy(const SpectralField& f);

/// E(m) = 1/2 sum over m-1 < |k| <= m, m = 1 .. ceil(sqrt(3) n / 2).
/// Entry 0 of the returned vector is shell m = 1.
std::vector<double> shell_spectrum(const SpectralField& f);

/// sum_k Re(a(k) . conj(b(k))) = (2pi)^-3 integral a . b.
double inner(const SpectralField& a, const SpectralField& b);

// ---- projections ----------------------------------------------------------

SpectralField leray_project(const SpectralField& f);

/// Keeps modes with |k|_inf <= degree.
SpectralField project_pn(const SpectralField& f, int degree);

/// 2/3-rule (Grid::dealias_fraction) box truncation.
SpectralField dealias(const SpectralField& f);

/// max_k |k . c(k)| / max_k |k| |c(k)|, zero for the zero field.
double divergence_defect(const SpectralField& f);

// ---- spectral calculus ----------------------------------------------------

/// d_j f_c stored at component c*3 + j.
SpectralField gradient(const SpectralField& f);
SpectralField laplacian(const SpectralField& f);
SpectralField curl(const SpectralField& f);
/// Scalar sum_j d_j f_j of a 3-component field.
SpectralField divergence(const SpectralField& f);
/// d^beta f for the multi-index beta = (b1, b2, b3).
SpectralField partial(const SpectralField& f, int b1, int b2, int b3);

// ---- radial multipliers ---------------------------------------------------

/// table[q] = m(sqrt(q)) for q = 0 .. grid.max_k2().
std::vector<double> radial_table(const Grid& grid, const std::function<double(double)>& m);

/// Coefficientwise multiplication by m(|k|).
SpectralField apply_radial(const SpectralField& f, const std::vector<double>& table);
void apply_radial_inplace(SpectralField& f, const std::vector<double>& table);

}  // namespace ldm
