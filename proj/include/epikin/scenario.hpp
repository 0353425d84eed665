#pragma once

#include <string>
#include <string_view>

#include "epikin/closed_form.hpp"
#include "epikin/integrator.hpp"
#include "epikin/model.hpp"

namespace epikin {

inline constexpr double kDefaultHorizonEps = 1e-3;

/// One run description, as read from a scenario file:
///
///   {"model": "sis",
///    "sis": {"r": 0.5, "alpha": 0.2, "k": 1.0, "i0": 0.1},
///    "grid": {"t_start": 0, "t_end": 50, "n_points": 5001},
///    "integrator": {"dt": 0.001, "halving_check": true, "tolerance": 1e-9},
///    "eps": 0.001}
///
/// An SIR scenario carries an "sir" block {beta, mu, s0, i0} instead.
/// "integrator" and "eps" are optional. Unknown keys are rejected.
struct ScenarioConfig {
  ModelParameters parameters;
  TimeGrid grid;
  IntegratorConfig integrator;
  double eps = kDefaultHorizonEps;

  ModelKind model() const { return kind_of(parameters); }

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws Error(ParseError) for malformed JSON (byte offset in the message)
/// and Error(ValidationError) naming the offending field otherwise.
ScenarioConfig parse_scenario(std::string_view text);

/// JSON text that parse_scenario maps back to an equal config.
std::string serialize_scenario(const ScenarioConfig& cfg);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

}  // namespace epikin
