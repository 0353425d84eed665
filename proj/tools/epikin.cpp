// epikin: closed-form vs reference analysis of the SIS and SIR models.
//
//   epikin simulate|compare|horizon|sweep --config <path>
//          [--mode closed|reference|both] [--eps <float>] [--out <path>]
//
// Failures print "error: <Category>" on the first line of stderr, followed by
// the detail, and exit with 2 (parse/validation), 3 (numerical) or 4 (I/O).

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "epikin/commands.hpp"
#include "epikin/error.hpp"
#include "epikin/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw epikin::Error(epikin::ErrorKind::IoError, "cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw epikin::Error(epikin::ErrorKind::IoError, "failed reading " + path);
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw epikin::Error(epikin::ErrorKind::IoError, "cannot open output file " + path);
  out << text;
  out.close();
  if (!out) throw epikin::Error(epikin::ErrorKind::IoError, "failed writing " + path);
}

int fail(std::string_view category, const std::string& detail, int code) {
  std::cerr << "error: " << category << "\n" << detail << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form and reference solutions of the SIS and SIR epidemic models"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_path;
  std::optional<double> eps;
  std::string mode = "both";
  bool analytic_limit = false;
  std::size_t jobs = 1;
  epikin::SweepSpec sweep;
  std::string scale = "linear";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Scenario JSON file")->required();
    sub->add_option("--eps", eps, "Discrepancy threshold for the validity horizon");
    sub->add_option("--out", out_path, "Output file (default: standard output)");
    sub->add_flag("--analytic-limit", analytic_limit,
                  "Use the analytic limit when r*k - alpha or lambda is zero");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "Write closed-form and/or reference trajectories as CSV");
  common(simulate);
  simulate->add_option("--mode", mode, "closed, reference or both")
      ->check(CLI::IsMember({"closed", "reference", "both"}));

  CLI::App* compare = app.add_subcommand("compare", "Write a JSON error report of closed form vs reference");
  common(compare);

  CLI::App* horizon = app.add_subcommand("horizon", "Write the closed form's validity horizon as JSON");
  common(horizon);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter and tabulate errors as CSV");
  common(sweep_cmd);
  sweep_cmd->add_option("--field", sweep.field, "Parameter to sweep")->required();
  sweep_cmd->add_option("--from", sweep.from, "First value")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of values (>= 2)")->required();
  sweep_cmd->add_option("--scale", scale, "linear or log")->check(CLI::IsMember({"linear", "log"}));
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("UsageError", e.what(), 2);
  }

  try {
    epikin::ScenarioConfig cfg = epikin::parse_scenario(read_file(config_path));
    if (eps) {
      if (!(*eps > 0.0))
        throw epikin::Error(epikin::ErrorKind::ValidationError, "--eps must be > 0");
      cfg.eps = *eps;
    }
    if (const auto* sir = std::get_if<epikin::SirParameters>(&cfg.parameters);
        sir && epikin::sir_composites(*sir).exceeds_unit_population)
      std::cerr << "warning: s0 + i0 > 1; analyzing anyway\n";

    epikin::RunOptions opts;
    opts.limit = analytic_limit ? epikin::LimitPolicy::AnalyticLimit : epikin::LimitPolicy::Reject;
    opts.jobs = jobs;

    std::string result;
    if (*simulate) {
      static const std::map<std::string, epikin::SimulateMode> modes{
          {"closed", epikin::SimulateMode::Closed},
          {"reference", epikin::SimulateMode::Reference},
          {"both", epikin::SimulateMode::Both}};
      result = epikin::cmd_simulate(cfg, modes.at(mode), opts);
    } else if (*compare) {
      result = epikin::cmd_compare(cfg, opts);
    } else if (*horizon) {
      result = epikin::cmd_horizon(cfg, opts);
    } else {
      sweep.scale = scale == "log" ? epikin::SweepScale::Log : epikin::SweepScale::Linear;
      result = epikin::cmd_sweep(cfg, sweep, opts);
    }
    write_output(out_path, result);
  } catch (const epikin::Error& e) {
    return fail(epikin::to_string(e.kind()), e.what(), epikin::exit_code(e.kind()));
  } catch (const std::exception& e) {
    return fail("Internal", e.what(), 1);
  }
  return 0;
}
