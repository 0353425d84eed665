#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "epikin/closed_form.hpp"
#include "epikin/scenario.hpp"

namespace epikin {

enum class SimulateMode { Closed, Reference, Both };

enum class SweepScale { Linear, Log };

struct SweepSpec {
  std::string field;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 2;
  SweepScale scale = SweepScale::Linear;
};

struct RunOptions {
  LimitPolicy limit = LimitPolicy::Reject;
  /// Worker threads for sweeps; output does not depend on it.
  std::size_t jobs = 1;
};

/// Trajectory CSV. Header for Both:
/// t,s_closed,i_closed,s_ref,i_ref,abs_err_s,abs_err_i,nonphysical
std::string cmd_simulate(const ScenarioConfig& cfg, SimulateMode mode, const RunOptions& opts = {});

/// JSON error report of closed form against reference, with provenance.
std::string cmd_compare(const ScenarioConfig& cfg, const RunOptions& opts = {});

/// JSON with the refined validity horizon on [0, grid.t_end].
std::string cmd_horizon(const ScenarioConfig& cfg, const RunOptions& opts = {});

/// Values visited by a sweep, in sweep-index order. Throws ValidationError
/// for steps < 2 or non-positive log bounds.
std::vector<double> sweep_values(const SweepSpec& sweep);

/// One CSV row per sweep value: value,max_abs_i,horizon[,asymptotic_bias].
/// Throws UnknownField if the field is not a parameter of the active model.
std::string cmd_sweep(const ScenarioConfig& cfg, const SweepSpec& sweep, const RunOptions& opts = {});

}  // namespace epikin
