#pragma once

// Parameter sweeps that turn asymptotic orders into fitted log-log slopes and
// monotonicity tables. Every report keeps its raw table next to the fits.

#include <map>
#include <string>
#include <vector>

#include "ldm/field.hpp"
#include "ldm/solver.hpp"

namespace ldm {

struct RateFit {
  std::string label;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< rms of the log-log fit residuals
  double expected = 0.0;
  double tolerance = 0.0;
  int points_used = 0;
  bool window_truncated = false;
  bool degenerate = false;
  bool pass = false;
};

/// Ordinary least squares of log(y) against log(x). Points with y <= 0 make
/// the fit degenerate. Needs at least three points.
RateFit fit_rate(const std::vector<double>& x, const std::vector<double>& y);

struct StudyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct StudyReport {
  std::string kind;
  std::string note;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<RateFit> fits;
  std::vector<StudyCheck> checks;
  std::map<std::string, std::string> metadata;

  bool pass() const;
  /// Values of one column.
  std::vector<double> column(const std::string& name) const;
};

// ---- frozen-field studies -------------------------------------------------

struct DeconvRateSpec {
  SpectralField field;
  std::vector<double> deltas;  ///< strictly decreasing, >= 3 entries
  std::vector<int> orders;
  double tolerance = 0.05;
};

/// ||phi - D_N G phi|| over the delta sweep (van Cittert path), slope vs 2N+2.
StudyReport deconv_rate_study(const DeconvRateSpec& spec);

/// ||phi - D_N G phi|| for a sweep of N at fixed delta.
StudyReport deconv_order_study(const SpectralField& field, double delta,
                               const std::vector<int>& orders);

struct ConsistencyRateSpec {
  SpectralField field;
  std::vector<double> deltas;
  std::vector<int> orders;
  double tolerance = 0.3;
  double bound_tolerance = 1e-12;
};

StudyReport consistency_rate_study(const ConsistencyRateSpec& spec);

struct CutoffTableSpec {
  std::vector<int> orders;
  std::vector<double> deltas;
};

StudyReport cutoff_table_study(const CutoffTableSpec& spec);

struct TransferFiguresSpec {
  double k_max = 10.0;
  int points = 201;
  std::vector<int> d_orders{0, 1, 2};
  std::vector<int> h_orders{0, 10, 50};
};

/// Rescaled (delta = 1) tables: exact deconvolution 1 + k^2, D_N and H_N.
StudyReport transfer_figures_study(const TransferFiguresSpec& spec);

// ---- time-dependent studies -----------------------------------------------

struct DeltaRateSpec {
  SolverConfig base;            ///< model order taken from `order`
  int order = 0;
  std::vector<double> deltas;   ///< strictly decreasing; 0 means pass-through NSE
  double tolerance = 0.2;
  double expected_rate = -1.0;  ///< < 0: 2N + 2
  double floor = 1e-9;          ///< integrator floor for window truncation
};

StudyReport delta_rate_study(const DeltaRateSpec& spec);

struct NLimitSpec {
  SolverConfig base;
  double delta = 0.5;
  std::vector<int> orders{0, 1, 2, 4, 8, 16};
  double final_ratio = 0.5;
  /// Allowed band for measured incremental H_N cost / predicted cost.
  double cost_band = 2.0;
};

StudyReport n_limit_study(const NLimitSpec& spec);

/// Wall time of one van Cittert step on this grid (median of repeats).
double van_cittert_step_seconds(const Grid& grid, int repeats = 200);

// ---- output ----------------------------------------------------------------

std::string summary_text(const StudyReport& report);

}  // namespace ldm
