#pragma once

#include <optional>
#include <string_view>
#include <variant>

namespace epikin {

enum class ModelKind { SIS, SIR };

std::string_view to_string(ModelKind kind);

/// Compartment levels at one instant. No sign constraint: closed-form
/// approximations are allowed to leave the physical region.
struct State {
  double s = 0.0;
  double i = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

/// Time derivative of a State.
struct Derivative {
  double ds = 0.0;
  double di = 0.0;

  friend bool operator==(const Derivative&, const Derivative&) = default;
};

/// SIS constants. Total population is conserved, so the initial
/// susceptible level is k - i0 and is not stored.
struct SisParameters {
  double r = 0.0;      // infectivity
  double alpha = 0.0;  // recovery
  double k = 0.0;      // total population
  double i0 = 0.0;

  double s0() const { return k - i0; }

  friend bool operator==(const SisParameters&, const SisParameters&) = default;
};

/// SIR-with-demography constants on a unit-normalized population. A single
/// coefficient mu drives inflow, outflow and recovery alike.
struct SirParameters {
  double beta = 0.0;
  double mu = 0.0;
  double s0 = 0.0;
  double i0 = 0.0;

  friend bool operator==(const SirParameters&, const SirParameters&) = default;
};

using ModelParameters = std::variant<SisParameters, SirParameters>;

ModelKind kind_of(const ModelParameters& p);

struct SisComposites {
  double beta_sis = 0.0;         // r*k - alpha
  std::optional<double> c_sis;   // absent when beta_zero
  std::optional<double> r0;      // r*k/alpha, absent when alpha == 0
  double i_star = 0.0;           // k - alpha/r
  bool beta_zero = false;
};

struct SirComposites {
  double c = 0.0;                // s0 + i0 - 1
  double lambda = 0.0;           // beta*(s0 + i0) - mu
  std::optional<double> d_raw;   // literal integration constant; absent on overflow risk or lambda_zero
  double d_cancelled = 0.0;      // (lambda - i0*beta)/i0
  double i_inf_closed = 0.0;     // lambda/beta
  double i_star_true = 0.0;      // (beta - mu)/beta
  double s_star_true = 0.0;      // mu/beta
  bool lambda_zero = false;
  bool overflow_risk = false;    // |beta*c/mu| beyond the representable exponent range
  bool exceeds_unit_population = false;  // s0 + i0 > 1
};

/// Largest |beta*c/mu| for which exp(beta*c/mu) and its reciprocal are
/// both representable doubles.
inline constexpr double kSafeExponent = 700.0;

/// Relative threshold below which beta_sis or lambda counts as zero.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// Throws Error(ValidationError) naming the first violated invariant.
void validate(const SisParameters& p);
void validate(const SirParameters& p);
void validate(const ModelParameters& p);

Derivative sis_rhs(const SisParameters& p, const State& x);
Derivative sir_rhs(const SirParameters& p, const State& x);
Derivative rhs(const ModelParameters& p, const State& x);

SisComposites sis_composites(const SisParameters& p);
SirComposites sir_composites(const SirParameters& p);

State initial_state(const ModelParameters& p);

}  // namespace epikin
