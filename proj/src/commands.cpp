#include "epikin/commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

#include "epikin/analysis.hpp"
#include "epikin/error.hpp"
#include "epikin/integrator.hpp"
#include "json.hpp"

namespace epikin {

using nlohmann::ordered_json;

namespace {

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json parameters_json(const ModelParameters& params) {
  if (const auto* p = std::get_if<SisParameters>(&params))
    return {{"r", p->r}, {"alpha", p->alpha}, {"k", p->k}, {"i0", p->i0}};
  const auto& p = std::get<SirParameters>(params);
  return {{"beta", p.beta}, {"mu", p.mu}, {"s0", p.s0}, {"i0", p.i0}};
}

ordered_json composites_json(const ModelParameters& params) {
  if (const auto* p = std::get_if<SisParameters>(&params)) {
    const SisComposites c = sis_composites(*p);
    return {{"beta_sis", c.beta_sis},
            {"c_sis", optional_number(c.c_sis)},
            {"r0", optional_number(c.r0)},
            {"i_star", c.i_star},
            {"beta_zero", c.beta_zero}};
  }
  const SirComposites c = sir_composites(std::get<SirParameters>(params));
  return {{"c", c.c},
          {"lambda", c.lambda},
          {"d_raw", optional_number(c.d_raw)},
          {"d_cancelled", c.d_cancelled},
          {"i_inf_closed", c.i_inf_closed},
          {"i_star_true", c.i_star_true},
          {"s_star_true", c.s_star_true},
          {"lambda_zero", c.lambda_zero},
          {"overflow_risk", c.overflow_risk},
          {"exceeds_unit_population", c.exceeds_unit_population}};
}

ordered_json provenance_json(const ScenarioConfig& cfg) {
  return {{"model", std::string(to_string(cfg.model()))},
          {"grid",
           {{"t_start", cfg.grid.t_start},
            {"t_end", cfg.grid.t_end},
            {"n_points", cfg.grid.n_points}}},
          {"integrator",
           {{"dt", cfg.integrator.dt},
            {"halving_check", cfg.integrator.halving_check},
            {"tolerance", cfg.integrator.tolerance}}},
          {"eps", cfg.eps}};
}

void append_row(std::string& out, std::initializer_list<double> values, bool flag) {
  for (double v : values) {
    out += format_double(v);
    out += ',';
  }
  out += flag ? '1' : '0';
  out += '\n';
}

double* field_slot(ModelParameters& params, const std::string& field) {
  if (auto* p = std::get_if<SisParameters>(&params)) {
    if (field == "r") return &p->r;
    if (field == "alpha") return &p->alpha;
    if (field == "k") return &p->k;
    if (field == "i0") return &p->i0;
    return nullptr;
  }
  auto& p = std::get<SirParameters>(params);
  if (field == "beta") return &p.beta;
  if (field == "mu") return &p.mu;
  if (field == "s0") return &p.s0;
  if (field == "i0") return &p.i0;
  return nullptr;
}

struct SweepRow {
  double value = 0.0;
  double max_abs_i = 0.0;
  std::optional<double> horizon;
  std::optional<double> bias;
};

SweepRow sweep_point(const ScenarioConfig& base, const std::string& field, double value,
                     const RunOptions& opts) {
  ScenarioConfig cfg = base;
  *field_slot(cfg.parameters, field) = value;
  try {
    validate(cfg.parameters);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError,
                "sweep value " + format_double(value) + " for " + field + ": " + e.what());
  }

  SweepRow row;
  row.value = value;
  const Trajectory closed = evaluate_closed_trajectory(cfg.parameters, cfg.grid, opts.limit);
  const Trajectory ref = integrate(cfg.parameters, cfg.grid, cfg.integrator);
  row.max_abs_i = compare(closed, ref, cfg.eps).max_abs_i;
  row.horizon = validity_horizon(cfg.parameters, cfg.eps, cfg.grid.t_end, cfg.integrator,
                                 cfg.grid.n_points);
  if (const auto* sir = std::get_if<SirParameters>(&cfg.parameters)) {
    try {
      row.bias = asymptotic_bias(*sir);
    } catch (const Error&) {
      // No finite asymptotes to compare; leave the cell empty.
    }
  }
  return row;
}

}  // namespace

std::string cmd_simulate(const ScenarioConfig& cfg, SimulateMode mode, const RunOptions& opts) {
  std::optional<Trajectory> closed;
  std::optional<Trajectory> ref;
  if (mode != SimulateMode::Reference)
    closed = evaluate_closed_trajectory(cfg.parameters, cfg.grid, opts.limit);
  if (mode != SimulateMode::Closed) ref = integrate(cfg.parameters, cfg.grid, cfg.integrator);

  std::string out;
  switch (mode) {
    case SimulateMode::Closed: out = "t,s_closed,i_closed,nonphysical\n"; break;
    case SimulateMode::Reference: out = "t,s_ref,i_ref,nonphysical\n"; break;
    case SimulateMode::Both:
      out = "t,s_closed,i_closed,s_ref,i_ref,abs_err_s,abs_err_i,nonphysical\n";
      break;
  }
  for (std::size_t k = 0; k < cfg.grid.n_points; ++k) {
    const double t = cfg.grid.at(k);
    if (mode == SimulateMode::Closed) {
      const State& c = closed->states[k];
      append_row(out, {t, c.s, c.i}, closed->nonphysical[k]);
    } else if (mode == SimulateMode::Reference) {
      const State& r = ref->states[k];
      append_row(out, {t, r.s, r.i}, ref->nonphysical[k]);
    } else {
      const State& c = closed->states[k];
      const State& r = ref->states[k];
      append_row(out, {t, c.s, c.i, r.s, r.i, std::abs(c.s - r.s), std::abs(c.i - r.i)},
                 closed->nonphysical[k] || ref->nonphysical[k]);
    }
  }
  return out;
}

std::string cmd_compare(const ScenarioConfig& cfg, const RunOptions& opts) {
  const Trajectory closed = evaluate_closed_trajectory(cfg.parameters, cfg.grid, opts.limit);
  const Trajectory ref = integrate(cfg.parameters, cfg.grid, cfg.integrator);
  const ErrorReport rep = compare(closed, ref, cfg.eps);

  ordered_json doc;
  doc["max_abs_s"] = rep.max_abs_s;
  doc["max_abs_i"] = rep.max_abs_i;
  doc["max_rel_i"] = rep.max_rel_i;
  doc["l2_i"] = rep.l2_i;
  doc["argmax_t"] = rep.argmax_t;
  doc["horizon"] = optional_number(rep.horizon);
  doc["composites"] = composites_json(cfg.parameters);
  doc["parameters"] = parameters_json(cfg.parameters);
  doc["provenance"] = provenance_json(cfg);
  return doc.dump(2) + "\n";
}

std::string cmd_horizon(const ScenarioConfig& cfg, const RunOptions&) {
  const std::optional<double> horizon =
      validity_horizon(cfg.parameters, cfg.eps, cfg.grid.t_end, cfg.integrator, cfg.grid.n_points);
  ordered_json doc;
  doc["horizon"] = optional_number(horizon);
  doc["eps"] = cfg.eps;
  doc["t_max"] = cfg.grid.t_end;
  if (const auto* sir = std::get_if<SirParameters>(&cfg.parameters)) {
    const double bound = linearization_bound(sir->mu, horizon.value_or(cfg.grid.t_end));
    doc["linearization_bound"] = bound;
  }
  doc["composites"] = composites_json(cfg.parameters);
  doc["parameters"] = parameters_json(cfg.parameters);
  doc["provenance"] = provenance_json(cfg);
  return doc.dump(2) + "\n";
}

std::vector<double> sweep_values(const SweepSpec& sweep) {
  if (sweep.steps < 2) throw Error(ErrorKind::ValidationError, "sweep steps must be >= 2");
  if (!std::isfinite(sweep.from) || !std::isfinite(sweep.to))
    throw Error(ErrorKind::ValidationError, "sweep bounds must be finite");
  if (sweep.scale == SweepScale::Log && !(sweep.from > 0.0 && sweep.to > 0.0))
    throw Error(ErrorKind::ValidationError, "log sweep bounds must be > 0");

  std::vector<double> values(sweep.steps);
  const double last = static_cast<double>(sweep.steps - 1);
  for (std::size_t j = 0; j < sweep.steps; ++j) {
    const double frac = static_cast<double>(j) / last;
    if (j == 0)
      values[j] = sweep.from;
    else if (j + 1 == sweep.steps)
      values[j] = sweep.to;
    else if (sweep.scale == SweepScale::Linear)
      values[j] = sweep.from + frac * (sweep.to - sweep.from);
    else
      values[j] = sweep.from * std::pow(sweep.to / sweep.from, frac);
  }
  return values;
}

std::string cmd_sweep(const ScenarioConfig& cfg, const SweepSpec& sweep, const RunOptions& opts) {
  ModelParameters probe = cfg.parameters;
  if (!field_slot(probe, sweep.field))
    throw Error(ErrorKind::UnknownField, "\"" + sweep.field + "\" is not a parameter of the " +
                                             std::string(to_string(cfg.model())) + " model");
  const std::vector<double> values = sweep_values(sweep);

  std::vector<SweepRow> rows(values.size());
  std::vector<std::exception_ptr> failures(values.size());
  auto run = [&](std::size_t j) {
    try {
      rows[j] = sweep_point(cfg, sweep.field, values[j], opts);
    } catch (...) {
      failures[j] = std::current_exception();
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, values.size());
  if (jobs == 1) {
    for (std::size_t j = 0; j < values.size(); ++j) run(j);
  } else {
    // Worker w handles indices w, w + jobs, ...; rows land by index.
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t j = w; j < values.size(); j += jobs) run(j);
      }));
    }
    for (auto& f : workers) f.get();
  }
  // Report the failure with the lowest sweep index, whatever the job count.
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  const bool sir = cfg.model() == ModelKind::SIR;
  std::string out = sir ? "value,max_abs_i,horizon,asymptotic_bias\n" : "value,max_abs_i,horizon\n";
  for (const SweepRow& row : rows) {
    out += format_double(row.value) + "," + format_double(row.max_abs_i) + ",";
    if (row.horizon) out += format_double(*row.horizon);
    if (sir) {
      out += ",";
      if (row.bias) out += format_double(*row.bias);
    }
    out += "\n";
  }
  return out;
}

}  // namespace epikin
