#pragma once

// Fixed-step classical Runge-Kutta integrator for the SIS and SIR systems,
// used as the ground truth the closed forms are measured against.

#include <functional>

#include "epikin/closed_form.hpp"
#include "epikin/model.hpp"

namespace epikin {

struct IntegratorConfig {
  double dt = 1e-3;
  /// Re-run at dt/2 and require agreement within `tolerance` at every grid point.
  bool halving_check = true;
  double tolerance = 1e-9;

  /// Throws Error(ValidationError) unless dt > 0 and tolerance > 0.
  void validate() const;

  friend bool operator==(const IntegratorConfig&, const IntegratorConfig&) = default;
};

using RhsFunction = std::function<Derivative(const State&, double)>;

/// One classical four-stage step. Throws Error(NonFinite) if any stage
/// leaves the finite range.
State rk4_step(const RhsFunction& rhs, const State& x, double t, double dt);

/// Advances `x` from t0 to t1 (t1 >= t0) in equal sub-steps no longer than
/// `dt`, landing on t1 exactly.
State advance(const ModelParameters& p, State x, double t0, double t1, double dt);

/// Integrates from the initial condition at t = 0 and samples every grid
/// point by sub-stepping onto it; no interpolation. The returned trajectory
/// is always the base-dt run, so enabling the halving check never changes
/// the values. Throws StepSizeInsufficient naming the worst grid point, or
/// NonFinite.
Trajectory integrate(const ModelParameters& p, const TimeGrid& grid, const IntegratorConfig& cfg);

}  // namespace epikin
