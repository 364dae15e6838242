#pragma once

// Measured quantities on states and trajectories: consistency-error tensors,
// filter-error bounds, finite-horizon time averages, model-vs-reference
// errors and Reynolds-number scaling.
//
// Conventions: ||.|| without qualification is the volume-averaged L2 norm
// (sum_k |c(k)|^2)^{1/2}. Integrals over the box are reported as true
// integrals over (0, 2pi)^3, so integral |tau| <= (2pi)^3 ||a|| ||v||.

#include <array>
#include <utility>
#include <vector>

#include "ldm/field.hpp"
#include "ldm/filtering.hpp"
#include "ldm/solver.hpp"

namespace ldm {

struct TauResult {
  /// tau_ij = (D_N G v)_i v_j - v_i v_j at component i*3 + j, sampled on the
  /// padded product grid.
  PhysicalField tensor;
  /// integral over the box of the pointwise Frobenius norm |tau|.
  double l1_norm = 0.0;
  int quadrature_n = 0;
};

/// Products are formed on a 3/2-padded grid so they are alias free.
TauResult tau_tensor(const SpectralField& v, const FilterSpec& spec);

struct ConsistencyReport {
  double delta = 0.0;
  int order = 0;
  double l1_tau = 0.0;
  /// (2pi)^3 delta^{2N+2} ||Lap^{N+1} (1 - delta^2 Lap)^{-(N+1)} v|| ||v||
  double bound_rhs = 0.0;
  /// (2pi)^3 delta^{2N+2} ||Lap^{N+1} v|| ||v||  (constant C = 1)
  double crude_bound = 0.0;
  double ratio = 0.0;
};

ConsistencyReport consistency_bound_rhs(const SpectralField& v, const FilterSpec& spec);

/// Same report with l1_tau filled in from tau_tensor.
ConsistencyReport consistency_report(const SpectralField& v, const FilterSpec& spec);

struct FilterErrorRow {
  std::array<int, 3> beta{};
  double lhs = 0.0;           ///< ||d^beta (u - ubar)||
  double equality_rhs = 0.0;  ///< delta^2 ||Lap d^beta ubar||
  double laplace_bound = 0.0; ///< delta^2 ||Lap d^beta u||
  double gradient_bound = 0.0;///< delta/2 ||grad d^beta u||
  bool equality_ok = false;
  bool laplace_ok = false;
  bool gradient_ok = false;
};

struct FilterErrorReport {
  double delta = 0.0;
  std::vector<FilterErrorRow> rows;
  double max_equality_rel_error = 0.0;
  bool all_ok() const;
};

/// Evaluates the three filter-error relations for every multi-index with
/// |beta| <= beta_order (beta_order <= 2), componentwise for vector fields.
FilterErrorReport filter_error_bounds_check(const SpectralField& u, double delta, int beta_order,
                                            double equality_tol = 1e-12);

/// (1/T) integral_0^T phi dt with the trapezoidal rule on the samples
/// (t_i, phi_i), linearly interpolating at T. Finite-horizon surrogate for the
/// long-time average; the caller reports T alongside. Throws ValidationError
/// if T exceeds the last sample or the series does not start at t = 0.
double time_average(const std::vector<std::pair<double, double>>& series, double T);

struct ModelError {
  double l2_final = 0.0;
  double l2l2 = 0.0;
  double h1_timeavg = 0.0;
};

/// Throws GridMismatchError when grids or snapshot times differ.
ModelError model_error(const Trajectory& model, const Trajectory& reference);

struct ReynoldsScales {
  double L = kTwoPi;
  double U = 0.0;
  double Re = 0.0;
  double eps_avg = 0.0;
  double horizon = 0.0;
  /// <(1/(U^2 L^3)) integral |tau_0|> measured over the snapshots
  double tau_normalized = 0.0;
  /// (delta / L) Re^{1/2} / U^{1/2}
  double scaling_estimate = 0.0;
  /// (delta / sqrt(nu)) eps^{1/2} U^{1/2} / U^2, the bound before eps ~ U^3/L
  double dissipation_estimate = 0.0;
};

ReynoldsScales reynolds_report(const Trajectory& trajectory, const std::vector<DiagRecord>& diags,
                               const SolverConfig& config, double delta);

}  // namespace ldm
