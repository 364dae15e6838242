#pragma once

// Pseudo-spectral time integration of
//
//   d_t w + (u_adv . grad) w - nu Lap w + grad q = f_eff,   div w = 0
//
// on the periodic box, with u_adv = w (Navier-Stokes) or u_adv = H_N w
// (Leray-deconvolution; N = 0 is Leray-alpha). The viscous term is handled by
// an exact integrating factor exp(-nu |k|^2 t); the rest by the three-stage
// third-order SSP Runge-Kutta scheme.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ldm/error.hpp"
#include "ldm/field.hpp"
#include "ldm/filtering.hpp"
#include "ldm/flow_fields.hpp"

namespace ldm {

struct ModelKind {
  enum class Family { nse, leray_deconv };
  Family family = Family::nse;
  int order = 0;

  static ModelKind nse() { return {Family::nse, 0}; }
  static ModelKind leray_deconv(int order) { return {Family::leray_deconv, order}; }
  bool is_model() const noexcept { return family == Family::leray_deconv; }
  std::string name() const;
};

enum class AdvectionForm { advective, divergence };
/// How H_N is applied inside the right-hand side: one diagonal multiply, or
/// the van Cittert iteration (N + 1 filter applications).
enum class DeconvMode { closed_form, iterative };

struct SolverConfig {
  Grid grid{};
  ModelKind model{};
  FilterSpec filter{};
  double nu = 0.0;
  double dt = 0.0;
  double t_end = 0.0;
  FieldSpec forcing{};
  FieldSpec ic{};
  bool filter_forcing = true;
  bool filter_ic = true;
  bool dealias = true;
  AdvectionForm advection = AdvectionForm::advective;
  DeconvMode deconv = DeconvMode::closed_form;
  int snapshot_every = 0;  ///< 0 = initial and final state only

  /// Throws ValidationError naming the offending parameter.
  void validate() const;
  long step_count() const;
};

/// Per-step scalars. Norms are volume averages: energy = 1/2 sum |c|^2,
/// h1_seminorm_sq = sum |k|^2 |c|^2, dissipation = nu * h1_seminorm_sq.
struct DiagRecord {
  double t = 0.0;
  double energy = 0.0;
  double h1_seminorm_sq = 0.0;
  double dissipation = 0.0;
  double input_power = 0.0;
  /// E(t) - E(0) + int_0^t dissipation - int_0^t input_power.
  double balance_residual = 0.0;
};

struct Snapshot {
  double t;
  SpectralField state;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  const SpectralField& final_state() const { return snapshots.back().state; }
};

struct RunResult {
  Trajectory trajectory;
  std::vector<DiagRecord> diagnostics;
  long steps_taken = 0;
  long rhs_evaluations = 0;
  double hn_seconds = 0.0;  ///< wall time spent applying H_N
  std::optional<BlowUpError> blowup;
  double cfl_dt_max = 0.0;  ///< advisory dx / max|u| of the initial state
};

/// -P[(u_adv . grad) w], dealiased, solenoidal.
SpectralField nonlinear_term(const SpectralField& state, const SolverConfig& config);

/// Same product before the solenoidal projection (and without forcing).
SpectralField nonlinear_term_unprojected(const SpectralField& state, const SolverConfig& config);

/// f_eff = H_N f when filter_forcing applies, else f; dealiased and projected.
SpectralField effective_forcing(const SolverConfig& config);

/// w(0) = H_N v0 when filter_ic applies, else v0.
SpectralField initial_state(const SolverConfig& config);

/// Scalar pressure q(k) = -i k . R(k) / |k|^2, R the unprojected
/// nonlinear-plus-forcing term.
SpectralField recover_pressure(const SpectralField& state, const SolverConfig& config);

/// Advances one configuration. Reusable across steps; caches the
/// integrating-factor tables and the effective forcing.
class Integrator {
 public:
  explicit Integrator(SolverConfig config);

  const SolverConfig& config() const noexcept { return config_; }
  const SpectralField& forcing() const noexcept { return forcing_; }

  /// One step of size dt (defaults to config.dt). Throws BlowUpError.
  SpectralField step(const SpectralField& state, double dt = 0.0);

  /// Time integrals of dissipation and input power accumulated over every
  /// step taken, with the stage values of the Runge-Kutta scheme (so the
  /// quadrature matches the integrator's order).
  double dissipation_integral() const noexcept { return dissipation_integral_; }
  double power_integral() const noexcept { return power_integral_; }
  long rhs_evaluations() const noexcept { return rhs_evaluations_; }
  double hn_seconds() const noexcept { return hn_seconds_; }
  long steps() const noexcept { return steps_; }

  /// Right-hand side without the viscous term.
  SpectralField rhs(const SpectralField& state);

 private:
  struct Factors {
    double dt = -1.0;
    std::vector<double> full, half, back_half;
  };
  const Factors& factors_for(double dt);

  SpectralField advecting_velocity(const SpectralField& state);

  SolverConfig config_;
  SpectralField forcing_;
  Factors factors_;
  std::vector<double> hn_table_;
  std::vector<double> nu_k2_;
  double dissipation_integral_ = 0.0;
  double power_integral_ = 0.0;
  long rhs_evaluations_ = 0;
  double hn_seconds_ = 0.0;
  long steps_ = 0;
};

/// Convenience wrapper around Integrator::step for a single step.
SpectralField step(const SpectralField& state, const SolverConfig& config);

using StepObserver = std::function<void(long step, const SpectralField& state)>;

/// Integrates 0 -> t_end, recording a DiagRecord per step (and at t = 0) and
/// snapshots every config.snapshot_every steps plus the initial and final
/// states. On blow-up the partial trajectory is returned with `blowup` set.
RunResult run(const SolverConfig& config, const StepObserver& observer = {});

/// Scalar diagnostics of one state; the balance residual needs the running
/// integrals and the initial energy.
DiagRecord energy_record(const SpectralField& state, const SolverConfig& config,
                         const SpectralField& forcing, double energy0 = 0.0,
                         double dissipation_integral = 0.0, double power_integral = 0.0);

}  // namespace ldm
