#pragma once

// Data-parallel field kernels. Every kernel has an OpenMP version in
// ldm::kernels and a plain serial version in ldm::kernels::serial with the
// same signature; the serial versions are kept as the reference the tests
// and the benchmark compare against.
//
// Spectral kernels walk the n^3 lattice of one component in FFT order.
// Radial multipliers are tabulated by the integer |k|^2 (0 .. Grid::max_k2).
//
// Parallel reductions accumulate one partial per i1-plane and combine the
// partials in plane order, so results do not depend on the thread count.

#include <complex>
#include <span>

namespace ldm::kernels {

using cplx = std::complex<double>;

/// data[c][k] *= table[|k|^2] for each of `ncomp` components.
void scale_radial(std::span<cplx> data, int n, int ncomp, std::span<const double> table);

/// One van Cittert update w <- w + (fbar - G w), G given as a radial table.
void van_cittert_step(std::span<cplx> w, std::span<const cplx> fbar, int n,
                      std::span<const double> g_table);

/// Solenoidal projection (I - k k^T / |k|^2) of a 3-component field in place.
void leray_project(std::span<cplx> data, int n);

/// Zeroes every mode with max_j |k_j| > kmax (and the Nyquist planes).
void truncate_box(std::span<cplx> data, int n, int ncomp, int kmax);

/// sum_k weight[|k|^2] * sum_c |data[c][k]|^2.
double weighted_energy(std::span<const cplx> data, int n, int ncomp, std::span<const double> weight);

/// Real inner product sum_k sum_c Re(a[c][k] conj(b[c][k])).
double inner(std::span<const cplx> a, std::span<const cplx> b, int n, int ncomp);

/// out_i = sum_j u_j * grad[i*3 + j] at every physical point (advective form).
void advect(std::span<const double> u, std::span<const double> grad, std::span<double> out,
            std::size_t points);

/// out[i*3 + j] = u_i * w_j at every physical point.
void outer(std::span<const double> u, std::span<const double> w, std::span<double> out,
           std::size_t points);

/// sum over points of the Frobenius magnitude |a (x) b - c (x) b| for 3-vectors;
/// used for integral |tau| with tau = a b - c b.
double tensor_l1(std::span<const double> a, std::span<const double> c, std::span<const double> b,
                 std::size_t points);

namespace serial {

void scale_radial(std::span<cplx> data, int n, int ncomp, std::span<const double> table);
void van_cittert_step(std::span<cplx> w, std::span<const cplx> fbar, int n,
                      std::span<const double> g_table);
void leray_project(std::span<cplx> data, int n);
void truncate_box(std::span<cplx> data, int n, int ncomp, int kmax);
double weighted_energy(std::span<const cplx> data, int n, int ncomp, std::span<const double> weight);
double inner(std::span<const cplx> a, std::span<const cplx> b, int n, int ncomp);
void advect(std::span<const double> u, std::span<const double> grad, std::span<double> out,
            std::size_t points);
void outer(std::span<const double> u, std::span<const double> w, std::span<double> out,
           std::size_t points);
double tensor_l1(std::span<const double> a, std::span<const double> c, std::span<const double> b,
                 std::size_t points);

}  // namespace serial
}  // namespace ldm::kernels
