#include "epikin/closed_form.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "epikin/error.hpp"

namespace epikin {

double TimeGrid::at(std::size_t k) const {
  if (k + 1 >= n_points) return t_end;
  return t_start + static_cast<double>(k) * spacing();
}

double TimeGrid::spacing() const {
  return (t_end - t_start) / static_cast<double>(n_points - 1);
}

void TimeGrid::validate() const {
  if (!std::isfinite(t_start) || !std::isfinite(t_end))
    throw Error(ErrorKind::ValidationError, "grid bounds must be finite");
  if (t_start < 0.0) throw Error(ErrorKind::ValidationError, "grid t_start must be >= 0");
  if (!(t_start < t_end)) throw Error(ErrorKind::ValidationError, "grid t_start must be < t_end");
  if (n_points < 2) throw Error(ErrorKind::ValidationError, "grid n_points must be >= 2");
}

namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw Error(ErrorKind::PreconditionViolation, "closed form requires finite t >= 0");
}

// Solution of i' = rate*i - quad*i^2 with i(0) = i0.
double logistic(double rate, double quad, double i0, double t) {
  if (rate == 0.0) return i0 / (1.0 + quad * i0 * t);
  const double decay = std::exp(-rate * t);
  const double ramp = -std::expm1(-rate * t) / rate;
  return 1.0 / (quad * ramp + decay / i0);
}

// Logistic rate to use, or 0 for the analytic limit.
double sis_rate(const SisParameters& p, LimitPolicy policy) {
  const SisComposites comp = sis_composites(p);
  if (!comp.beta_zero) return comp.beta_sis;
  if (policy == LimitPolicy::Reject)
    throw Error(ErrorKind::BetaZero, "r*k - alpha is zero; closed form undefined without the analytic limit");
  return 0.0;
}

double sir_rate(const SirParameters& p, LimitPolicy policy) {
  const SirComposites comp = sir_composites(p);
  if (!comp.lambda_zero) return comp.lambda;
  if (policy == LimitPolicy::Reject)
    throw Error(ErrorKind::LambdaZero, "beta - mu + beta*C is zero; closed form undefined without the analytic limit");
  return 0.0;
}

State sis_state(const SisParameters& p, double rate, double t) {
  const double i = logistic(rate, p.r, p.i0, t);
  return {p.k - i, i};
}

State sir_state(const SirParameters& p, double rate, double t) {
  const double c = p.s0 + p.i0 - 1.0;
  const double i = logistic(rate, p.beta, p.i0, t);
  return {1.0 + c * (1.0 - p.mu * t) - i, i};
}

}  // namespace

double sis_infective_exact(const SisParameters& p, double t, LimitPolicy policy) {
  check_time(t);
  return sis_state(p, sis_rate(p, policy), t).i;
}

double sis_susceptible_exact(const SisParameters& p, double t, LimitPolicy policy) {
  check_time(t);
  return sis_state(p, sis_rate(p, policy), t).s;
}

double sir_infective_closed(const SirParameters& p, double t, LimitPolicy policy) {
  check_time(t);
  return sir_state(p, sir_rate(p, policy), t).i;
}

double sir_susceptible_closed(const SirParameters& p, double t, LimitPolicy policy) {
  check_time(t);
  return sir_state(p, sir_rate(p, policy), t).s;
}

State closed_state(const ModelParameters& p, double t, LimitPolicy policy) {
  check_time(t);
  return std::visit(
      [&](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, SisParameters>)
          return sis_state(q, sis_rate(q, policy), t);
        else
          return sir_state(q, sir_rate(q, policy), t);
      },
      p);
}

double sis_infective_literal(const SisParameters& p, double t) {
  const SisComposites comp = sis_composites(p);
  if (!comp.c_sis) throw Error(ErrorKind::BetaZero, "r*k - alpha is zero");
  const double beta = comp.beta_sis;
  return beta / (p.r + beta * *comp.c_sis * std::exp(-beta * t));
}

std::optional<double> sir_infective_literal(const SirParameters& p, double t) {
  const SirComposites comp = sir_composites(p);
  if (comp.lambda_zero) throw Error(ErrorKind::LambdaZero, "beta - mu + beta*C is zero");
  if (!comp.d_raw) return std::nullopt;
  const double lambda = comp.lambda;
  return lambda / (p.beta + lambda * *comp.d_raw * std::exp(-lambda * t) *
                                std::exp(p.beta * comp.c / p.mu));
}

bool is_nonphysical(const ModelParameters& p, const State& x, double t, Provenance provenance) {
  if (x.s < 0.0 || x.i < 0.0) return true;
  if (const auto* sis = std::get_if<SisParameters>(&p)) return x.i > sis->k;
  const auto& sir = std::get<SirParameters>(p);
  constexpr double slack = 1e-9;
  if (x.s > 1.0 + slack || x.i > 1.0 + slack) return true;
  return provenance == Provenance::ClosedForm && 1.0 - sir.mu * t < 0.0;
}

Trajectory evaluate_closed_trajectory(const ModelParameters& p, const TimeGrid& grid,
                                      LimitPolicy policy) {
  validate(p);
  grid.validate();

  double rate = 0.0;
  try {
    rate = std::visit(
        [&](const auto& q) {
          if constexpr (std::is_same_v<std::decay_t<decltype(q)>, SisParameters>)
            return sis_rate(q, policy);
          else
            return sir_rate(q, policy);
        },
        p);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(e.what()) + " (at grid index 0)", 0);
  }

  Trajectory out;
  out.grid = grid;
  out.provenance = Provenance::ClosedForm;
  out.model = kind_of(p);
  out.states.reserve(grid.n_points);
  out.nonphysical.reserve(grid.n_points);
  for (std::size_t k = 0; k < grid.n_points; ++k) {
    const double t = grid.at(k);
    const State x = std::visit(
        [&](const auto& q) {
          if constexpr (std::is_same_v<std::decay_t<decltype(q)>, SisParameters>)
            return sis_state(q, rate, t);
          else
            return sir_state(q, rate, t);
        },
        p);
    if (!out.diverged_at && !(std::isfinite(x.s) && std::isfinite(x.i))) out.diverged_at = k;
    out.states.push_back(x);
    out.nonphysical.push_back(is_nonphysical(p, x, t, Provenance::ClosedForm));
  }
  return out;
}

}  // namespace epikin
