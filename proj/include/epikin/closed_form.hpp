#pragma once

// Closed-form solutions. The SIS solution is exact. The SIR solution is the
// linearized closed form: exp(-mu t) is replaced by 1 - mu t inside the
// integrating factor, which makes it exact only when s0 + i0 = 1.
//
// Both infective curves are logistic, i' = rate*i - quad*i^2, and are
// evaluated in the reciprocal form
//
//     1/i(t) = quad * (1 - exp(-rate t))/rate + exp(-rate t)/i0,
//
// which is algebraically equal to rate/(quad + A exp(-rate t)) with
// A = (rate - i0 quad)/i0 but stays well conditioned as rate -> 0 and never
// forms the mutually cancelling exp(+-beta C/mu) factors of the literal SIR
// expression.

#include <cstddef>
#include <optional>
#include <vector>

#include "epikin/model.hpp"

namespace epikin {

/// What to do when the logistic rate (SIS beta, SIR lambda) is degenerate.
enum class LimitPolicy {
  Reject,         // throw BetaZero / LambdaZero
  AnalyticLimit,  // i0/(1 + quad*i0*t), the exact solution of i' = -quad*i^2
};

enum class Provenance { ClosedForm, Reference };

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t n_points = 2;

  /// Uniform point k; the last point is t_end exactly.
  double at(std::size_t k) const;
  double spacing() const;

  /// Throws Error(ValidationError) unless 0 <= t_start < t_end and n_points >= 2.
  void validate() const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

struct Trajectory {
  TimeGrid grid;
  std::vector<State> states;
  std::vector<bool> nonphysical;
  Provenance provenance = Provenance::ClosedForm;
  ModelKind model = ModelKind::SIS;
  std::optional<std::size_t> diverged_at;  // first non-finite index

  double time(std::size_t k) const { return grid.at(k); }
  std::size_t size() const { return states.size(); }
};

double sis_infective_exact(const SisParameters& p, double t,
                           LimitPolicy policy = LimitPolicy::AnalyticLimit);
double sis_susceptible_exact(const SisParameters& p, double t,
                             LimitPolicy policy = LimitPolicy::AnalyticLimit);

double sir_infective_closed(const SirParameters& p, double t,
                            LimitPolicy policy = LimitPolicy::Reject);
/// May leave [0, 1] for large t when s0 + i0 != 1; never clamped.
double sir_susceptible_closed(const SirParameters& p, double t,
                              LimitPolicy policy = LimitPolicy::Reject);

/// Closed-form state at t. Same arithmetic as the scalar functions above, so
/// results agree bitwise.
State closed_state(const ModelParameters& p, double t, LimitPolicy policy);

/// Literal textbook expressions, kept for cross-checking the evaluators.
/// The SIR variant returns nullopt when exp(beta C/mu) is not representable.
double sis_infective_literal(const SisParameters& p, double t);
std::optional<double> sir_infective_literal(const SirParameters& p, double t);

/// Outside the physical region: negative levels, i above k (SIS) or a level
/// above 1 (SIR). For closed-form SIR states, also set once the linearized
/// factor 1 - mu t has gone negative.
bool is_nonphysical(const ModelParameters& p, const State& x, double t, Provenance provenance);

Trajectory evaluate_closed_trajectory(const ModelParameters& p, const TimeGrid& grid,
                                      LimitPolicy policy = LimitPolicy::Reject);

}  // namespace epikin
