#include "epikin/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "epikin/error.hpp"

namespace epikin {

void IntegratorConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error(ErrorKind::ValidationError, "integrator dt must be > 0");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance))
    throw Error(ErrorKind::ValidationError, "integrator tolerance must be > 0");
}

namespace {

bool finite(const State& x) { return std::isfinite(x.s) && std::isfinite(x.i); }

State shifted(const State& x, const Derivative& d, double h) {
  return {x.s + h * d.ds, x.i + h * d.di};
}

void require_finite(const State& x, double t) {
  if (!finite(x)) {
    std::ostringstream os;
    os << "integration produced a non-finite value near t=" << t;
    throw Error(ErrorKind::NonFinite, os.str());
  }
}

// Sub-steps needed so that each step is at most dt. The slack absorbs
// rounding when dt divides the span.
long step_count(double span, double dt) {
  const double ratio = span / dt;
  return std::max(1L, static_cast<long>(std::ceil(ratio * (1.0 - 1e-12))));
}

std::vector<State> sample(const ModelParameters& p, const TimeGrid& grid, double dt) {
  std::vector<State> states;
  states.reserve(grid.n_points);
  State x = initial_state(p);
  double t = 0.0;
  for (std::size_t k = 0; k < grid.n_points; ++k) {
    const double target = grid.at(k);
    x = advance(p, x, t, target, dt);
    t = target;
    states.push_back(x);
  }
  return states;
}

}  // namespace

State rk4_step(const RhsFunction& rhs, const State& x, double t, double dt) {
  const double half = 0.5 * dt;
  const Derivative k1 = rhs(x, t);
  const State x2 = shifted(x, k1, half);
  require_finite(x2, t);
  const Derivative k2 = rhs(x2, t + half);
  const State x3 = shifted(x, k2, half);
  require_finite(x3, t);
  const Derivative k3 = rhs(x3, t + half);
  const State x4 = shifted(x, k3, dt);
  require_finite(x4, t);
  const Derivative k4 = rhs(x4, t + dt);
  const State next{x.s + dt / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds),
                   x.i + dt / 6.0 * (k1.di + 2.0 * k2.di + 2.0 * k3.di + k4.di)};
  require_finite(next, t + dt);
  return next;
}

State advance(const ModelParameters& p, State x, double t0, double t1, double dt) {
  const double span = t1 - t0;
  if (span <= 0.0) return x;
  const long n = step_count(span, dt);
  const double h = span / static_cast<double>(n);
  const RhsFunction f = [&p](const State& y, double) { return rhs(p, y); };
  for (long j = 0; j < n; ++j) x = rk4_step(f, x, t0 + static_cast<double>(j) * h, h);
  return x;
}

Trajectory integrate(const ModelParameters& p, const TimeGrid& grid, const IntegratorConfig& cfg) {
  validate(p);
  grid.validate();
  cfg.validate();

  Trajectory out;
  out.grid = grid;
  out.provenance = Provenance::Reference;
  out.model = kind_of(p);
  out.states = sample(p, grid, cfg.dt);

  if (cfg.halving_check) {
    const std::vector<State> fine = sample(p, grid, 0.5 * cfg.dt);
    double worst = -1.0;
    std::size_t worst_k = 0;
    for (std::size_t k = 0; k < grid.n_points; ++k) {
      const double d = std::max(std::abs(out.states[k].s - fine[k].s),
                                std::abs(out.states[k].i - fine[k].i));
      if (d > worst) {
        worst = d;
        worst_k = k;
      }
    }
    if (worst > cfg.tolerance) {
      std::ostringstream os;
      os.precision(17);
      os << "dt=" << cfg.dt << " and dt/2 runs differ by " << worst << " at t=" << grid.at(worst_k)
         << " (index " << worst_k << "), tolerance " << cfg.tolerance;
      throw Error(ErrorKind::StepSizeInsufficient, os.str(), worst_k);
    }
  }

  out.nonphysical.reserve(grid.n_points);
  for (std::size_t k = 0; k < grid.n_points; ++k)
    out.nonphysical.push_back(is_nonphysical(p, out.states[k], grid.at(k), Provenance::Reference));
  return out;
}

}  // namespace epikin
