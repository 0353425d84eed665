#include "epikin/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <variant>

#include "epikin/error.hpp"

namespace epikin {

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::SIS ? "sis" : "sir";
}

ModelKind kind_of(const ModelParameters& p) {
  return std::holds_alternative<SisParameters>(p) ? ModelKind::SIS : ModelKind::SIR;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ValidationError, what);
}

void require_finite(double v, const char* name) {
  require(std::isfinite(v), std::string(name) + " must be finite");
}

}  // namespace

void validate(const SisParameters& p) {
  require_finite(p.r, "r");
  require_finite(p.alpha, "alpha");
  require_finite(p.k, "k");
  require_finite(p.i0, "i0");
  require(p.r > 0.0, "r must be > 0");
  require(p.alpha >= 0.0, "alpha must be >= 0");
  require(p.k > 0.0, "k must be > 0");
  require(p.i0 > 0.0, "i0 must be > 0");
  require(p.i0 < p.k, "i0 must be < k");
}

void validate(const SirParameters& p) {
  require_finite(p.beta, "beta");
  require_finite(p.mu, "mu");
  require_finite(p.s0, "s0");
  require_finite(p.i0, "i0");
  require(p.beta > 0.0, "beta must be > 0");
  require(p.mu > 0.0, "mu must be > 0");
  require(p.s0 > 0.0, "s0 must be > 0");
  require(p.i0 > 0.0, "i0 must be > 0");
}

void validate(const ModelParameters& p) {
  std::visit([](const auto& q) { validate(q); }, p);
}

Derivative sis_rhs(const SisParameters& p, const State& x) {
  // Both components share one product so they cancel exactly.
  const double flow = p.r * x.s * x.i - p.alpha * x.i;
  return {-flow, flow};
}

Derivative sir_rhs(const SirParameters& p, const State& x) {
  const double infection = p.beta * x.s * x.i;
  return {-infection - p.mu * x.s + p.mu, infection - p.mu * x.i};
}

Derivative rhs(const ModelParameters& p, const State& x) {
  return std::visit(
      [&](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, SisParameters>)
          return sis_rhs(q, x);
        else
          return sir_rhs(q, x);
      },
      p);
}

SisComposites sis_composites(const SisParameters& p) {
  SisComposites out;
  const double rk = p.r * p.k;
  out.beta_sis = rk - p.alpha;
  out.beta_zero = std::abs(out.beta_sis) <= kDegeneracyThreshold * std::max(rk, p.alpha);
  if (!out.beta_zero)
    out.c_sis = (out.beta_sis - p.i0 * p.r) / (out.beta_sis * p.i0);
  if (p.alpha != 0.0) out.r0 = rk / p.alpha;
  out.i_star = out.beta_sis / p.r;
  return out;
}

SirComposites sir_composites(const SirParameters& p) {
  SirComposites out;
  out.c = p.s0 + p.i0 - 1.0;
  out.lambda = p.beta - p.mu + p.beta * out.c;
  out.lambda_zero = std::abs(out.lambda) <= kDegeneracyThreshold * std::max(p.beta, p.mu);
  out.d_cancelled = (out.lambda - p.i0 * p.beta) / p.i0;
  out.i_inf_closed = out.lambda / p.beta;
  out.i_star_true = (p.beta - p.mu) / p.beta;
  out.s_star_true = p.mu / p.beta;
  out.exceeds_unit_population = out.c > 1e-12;

  const double exponent = p.beta * out.c / p.mu;
  out.overflow_risk = !(std::abs(exponent) <= kSafeExponent);
  if (!out.overflow_risk && !out.lambda_zero)
    out.d_raw = (out.lambda - p.i0 * p.beta) / (out.lambda * p.i0 * std::exp(exponent));
  return out;
}

State initial_state(const ModelParameters& p) {
  return std::visit(
      [](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, SisParameters>)
          return State{q.s0(), q.i0};
        else
          return State{q.s0, q.i0};
      },
      p);
}

}  // namespace epikin
