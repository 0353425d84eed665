#include "epikin/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "epikin/error.hpp"

namespace epikin {

ErrorReport compare(const Trajectory& a, const Trajectory& b, double eps) {
  if (!(a.grid == b.grid) || a.size() != b.size() || a.size() != a.grid.n_points)
    throw Error(ErrorKind::GridMismatch, "trajectories are sampled on different grids");
  if (a.model != b.model)
    throw Error(ErrorKind::GridMismatch, "trajectories belong to different models");

  const bool a_ref = a.provenance == Provenance::Reference;
  const bool b_ref = b.provenance == Provenance::Reference;

  ErrorReport rep;
  rep.argmax_t = a.time(0);
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const State& x = a.states[k];
    const State& y = b.states[k];
    const double ds = std::abs(x.s - y.s);
    const double di = std::abs(x.i - y.i);
    const double t = a.time(k);

    rep.max_abs_s = std::max(rep.max_abs_s, ds);
    if (di > rep.max_abs_i) {
      rep.max_abs_i = di;
      rep.argmax_t = t;
    }
    double denom = 0.0;
    if (a_ref != b_ref)
      denom = std::abs(a_ref ? x.i : y.i);
    else
      denom = std::max(std::abs(x.i), std::abs(y.i));
    if (denom > 1e-12) rep.max_rel_i = std::max(rep.max_rel_i, di / denom);
    sum_sq += di * di;
    if (!rep.horizon && di > eps) rep.horizon = t;
  }
  rep.l2_i = std::sqrt(sum_sq / static_cast<double>(a.size()));
  return rep;
}

Residual ode_residual(const ModelParameters& p, double t, double h, LimitPolicy policy) {
  if (!(h > 0.0) || !(t >= h))
    throw Error(ErrorKind::PreconditionViolation, "ode_residual requires t >= h > 0");
  const State ahead = closed_state(p, t + h, policy);
  const State behind = closed_state(p, t - h, policy);
  const State here = closed_state(p, t, policy);
  const Derivative f = rhs(p, here);
  return {(ahead.s - behind.s) / (2.0 * h) - f.ds, (ahead.i - behind.i) / (2.0 * h) - f.di};
}

double linearization_bound(double mu, double t) {
  const double x = mu * t;
  return 0.5 * x * x;
}

namespace {

double closed_error(const ModelParameters& p, const State& ref, double t) {
  return std::abs(closed_state(p, t, LimitPolicy::Reject).i - ref.i);
}

}  // namespace

std::optional<double> validity_horizon(const ModelParameters& p, double eps, double t_max,
                                       const IntegratorConfig& cfg, std::size_t scan_points) {
  if (!(eps > 0.0) || !(t_max > 0.0))
    throw Error(ErrorKind::PreconditionViolation, "validity_horizon requires eps > 0 and t_max > 0");

  const TimeGrid scan{0.0, t_max, std::max<std::size_t>(scan_points, 2)};
  const Trajectory closed = evaluate_closed_trajectory(p, scan, LimitPolicy::Reject);
  const Trajectory ref = integrate(p, scan, cfg);

  std::size_t hit = scan.n_points;
  for (std::size_t k = 0; k < scan.n_points; ++k) {
    if (std::abs(closed.states[k].i - ref.states[k].i) > eps) {
      hit = k;
      break;
    }
  }
  if (hit == scan.n_points) return std::nullopt;
  if (hit == 0) return scan.at(0);

  // Invariant: error at lo is <= eps, error at hi is > eps.
  double lo = scan.at(hit - 1);
  double hi = scan.at(hit);
  const State lo_state = ref.states[hit - 1];
  const double anchor = lo;
  const double width = 1e-6 * t_max;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const State at_mid = advance(p, lo_state, anchor, mid, cfg.dt);
    if (closed_error(p, at_mid, mid) > eps)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double asymptotic_bias(const SirParameters& p) {
  const SirComposites comp = sir_composites(p);
  if (!(comp.lambda > 0.0) || comp.lambda_zero || !(p.beta > p.mu))
    throw Error(ErrorKind::PreconditionViolation,
                "asymptotic bias needs lambda > 0 and beta > mu");
  return comp.c;
}

}  // namespace epikin
