#include "epikin/scenario.hpp"

#include <charconv>
#include <initializer_list>
#include <set>

#include "epikin/error.hpp"
#include "json.hpp"

namespace epikin {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::ValidationError, what);
}

const ordered_json& object_at(const ordered_json& parent, const std::string& key,
                              const std::string& path) {
  if (!parent.contains(key)) invalid("missing required key " + path + key);
  const ordered_json& v = parent.at(key);
  if (!v.is_object()) invalid(path + key + " must be an object");
  return v;
}

void reject_unknown(const ordered_json& obj, std::initializer_list<const char*> allowed,
                    const std::string& path) {
  const std::set<std::string> known(allowed.begin(), allowed.end());
  std::string unknown;
  for (const auto& [key, _] : obj.items()) {
    if (known.count(key)) continue;
    if (!unknown.empty()) unknown += ", ";
    unknown += "\"" + path + key + "\"";
  }
  if (!unknown.empty()) invalid("unknown key(s): " + unknown);
}

double number(const ordered_json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) invalid("missing required key " + path + key);
  const ordered_json& v = obj.at(key);
  if (!v.is_number()) invalid(path + key + " must be a number");
  return v.get<double>();
}

double number_or(const ordered_json& obj, const std::string& key, const std::string& path,
                 double fallback) {
  return obj.contains(key) ? number(obj, key, path) : fallback;
}

// Parameter invariant messages start with the field name; prefix the block.
template <typename Params>
void validate_block(const Params& p, const std::string& path) {
  try {
    validate(p);
  } catch (const Error& e) {
    invalid(path + e.what());
  }
}

SisParameters parse_sis(const ordered_json& block) {
  reject_unknown(block, {"r", "alpha", "k", "i0"}, "sis.");
  SisParameters p{number(block, "r", "sis."), number(block, "alpha", "sis."),
                  number(block, "k", "sis."), number(block, "i0", "sis.")};
  validate_block(p, "sis.");
  return p;
}

SirParameters parse_sir(const ordered_json& block) {
  reject_unknown(block, {"beta", "mu", "s0", "i0"}, "sir.");
  SirParameters p{number(block, "beta", "sir."), number(block, "mu", "sir."),
                  number(block, "s0", "sir."), number(block, "i0", "sir.")};
  validate_block(p, "sir.");
  return p;
}

TimeGrid parse_grid(const ordered_json& block) {
  reject_unknown(block, {"t_start", "t_end", "n_points"}, "grid.");
  TimeGrid g;
  g.t_start = number(block, "t_start", "grid.");
  g.t_end = number(block, "t_end", "grid.");
  if (!block.contains("n_points")) invalid("missing required key grid.n_points");
  const ordered_json& n = block.at("n_points");
  if (!n.is_number_integer() || n.get<long long>() < 2)
    invalid("grid.n_points must be an integer >= 2");
  g.n_points = n.get<std::size_t>();
  g.validate();
  return g;
}

IntegratorConfig parse_integrator(const ordered_json& block) {
  reject_unknown(block, {"dt", "halving_check", "tolerance"}, "integrator.");
  IntegratorConfig c;
  c.dt = number_or(block, "dt", "integrator.", c.dt);
  c.tolerance = number_or(block, "tolerance", "integrator.", c.tolerance);
  if (block.contains("halving_check")) {
    if (!block.at("halving_check").is_boolean()) invalid("integrator.halving_check must be a boolean");
    c.halving_check = block.at("halving_check").get<bool>();
  }
  c.validate();
  return c;
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) invalid("scenario must be a JSON object");
  reject_unknown(doc, {"model", "sis", "sir", "grid", "integrator", "eps"}, "");

  if (!doc.contains("model") || !doc.at("model").is_string())
    invalid("missing required string key model");
  const std::string model = doc.at("model").get<std::string>();

  ScenarioConfig cfg;
  if (model == "sis") {
    if (doc.contains("sir")) invalid("block sir not allowed when model is sis");
    cfg.parameters = parse_sis(object_at(doc, "sis", ""));
  } else if (model == "sir") {
    if (doc.contains("sis")) invalid("block sis not allowed when model is sir");
    cfg.parameters = parse_sir(object_at(doc, "sir", ""));
  } else {
    invalid("model must be \"sis\" or \"sir\", got \"" + model + "\"");
  }

  cfg.grid = parse_grid(object_at(doc, "grid", ""));
  if (doc.contains("integrator")) cfg.integrator = parse_integrator(object_at(doc, "integrator", ""));
  cfg.eps = number_or(doc, "eps", "", kDefaultHorizonEps);
  if (!(cfg.eps > 0.0)) invalid("eps must be > 0");
  return cfg;
}

std::string serialize_scenario(const ScenarioConfig& cfg) {
  ordered_json doc;
  doc["model"] = std::string(to_string(cfg.model()));
  if (const auto* sis = std::get_if<SisParameters>(&cfg.parameters)) {
    doc["sis"] = {{"r", sis->r}, {"alpha", sis->alpha}, {"k", sis->k}, {"i0", sis->i0}};
  } else {
    const auto& sir = std::get<SirParameters>(cfg.parameters);
    doc["sir"] = {{"beta", sir.beta}, {"mu", sir.mu}, {"s0", sir.s0}, {"i0", sir.i0}};
  }
  doc["grid"] = {{"t_start", cfg.grid.t_start},
                 {"t_end", cfg.grid.t_end},
                 {"n_points", cfg.grid.n_points}};
  doc["integrator"] = {{"dt", cfg.integrator.dt},
                       {"halving_check", cfg.integrator.halving_check},
                       {"tolerance", cfg.integrator.tolerance}};
  doc["eps"] = cfg.eps;
  return doc.dump(2) + "\n";
}

}  // namespace epikin
