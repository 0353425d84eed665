#pragma once

#include <cstddef>
#include <optional>

#include "epikin/closed_form.hpp"
#include "epikin/integrator.hpp"
#include "epikin/model.hpp"

namespace epikin {

struct ErrorReport {
  double max_abs_s = 0.0;
  double max_abs_i = 0.0;
  /// Relative to the reference trajectory's i where |i| > 1e-12.
  double max_rel_i = 0.0;
  /// Root-mean-square discrepancy on i over the grid.
  double l2_i = 0.0;
  double argmax_t = 0.0;
  /// First grid time at which |delta i| > eps.
  std::optional<double> horizon;
};

/// Pointwise discrepancies between two trajectories on the same grid.
///
/// The relative error is taken against the trajectory with Reference
/// provenance; when both or neither are references it is taken against the
/// larger of the two magnitudes, which keeps the report symmetric in (a, b).
/// Throws GridMismatch if grids, lengths or model kinds differ.
ErrorReport compare(const Trajectory& a, const Trajectory& b, double eps);

struct Residual {
  double s = 0.0;
  double i = 0.0;
};

/// Central-difference derivative of the closed form at t with step h, minus
/// the model right-hand side at the closed-form state. Requires t >= h > 0.
Residual ode_residual(const ModelParameters& p, double t, double h,
                      LimitPolicy policy = LimitPolicy::Reject);

/// Upper bound (mu t)^2 / 2 on |exp(-mu t) - (1 - mu t)| for mu t >= 0.
double linearization_bound(double mu, double t);

/// Number of uniformly spaced points on [0, t_max] scanned before bisection.
inline constexpr std::size_t kDefaultHorizonScanPoints = 1001;

/// Earliest time at which |i_closed - i_ref| exceeds eps on [0, t_max].
///
/// A uniform scan finds the first bracketing pair of points; the bracket is
/// then bisected down to 1e-6 * t_max, evaluating the scalar closed form
/// against a fresh reference integration from the bracket's left end. The
/// returned time is the right end of the final bracket. nullopt means the
/// threshold is never exceeded on the scan.
std::optional<double> validity_horizon(const ModelParameters& p, double eps, double t_max,
                                       const IntegratorConfig& cfg,
                                       std::size_t scan_points = kDefaultHorizonScanPoints);

/// Long-time error i_closed(inf) - i_true(inf) of the linearized SIR closed
/// form, which equals C = s0 + i0 - 1. Requires lambda > 0 and beta > mu.
double asymptotic_bias(const SirParameters& p);

}  // namespace epikin
