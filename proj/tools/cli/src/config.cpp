#include "weylbrane/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <set>

#include "weylbrane/errors.hpp"

namespace weylbrane::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(std::string_view key, std::string_view v) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(x)) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" + std::string(v) +
                      "' (expected a finite real number)");
  }
  return x;
}

int parse_int(std::string_view key, std::string_view v) {
  int x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" + std::string(v) +
                      "' (expected an integer)");
  }
  return x;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("invalid value for " + std::string(key) + ": '" + std::string(v) +
                    "' (expected true or false)");
}

}  // namespace

void ScenarioConfig::validate() const {
  if (!(grid.t_min > 0.0)) throw ConfigError("t_min must be > 0");
  if (!(grid.t_max > grid.t_min)) throw ConfigError("t_max must be > t_min");
  if (grid.samples < 2) throw ConfigError("samples must be >= 2");
  if (!(t0 > 0.0)) throw ConfigError("t0 must be > 0");
  if (!(a0 > 0.0)) throw ConfigError("a0 must be > 0");
  if (!(A1 > 0.0)) throw ConfigError("A1 must be > 0 (the warp factor B1 = A1 t0^p / a0 must be positive)");
  if (output.empty()) throw ConfigError("output must not be empty");
}

PowerLawScenario ScenarioConfig::scenario() const { return scenario_at(p); }

PowerLawScenario ScenarioConfig::scenario_at(double p_value) const {
  return PowerLawScenario::from_constants(p_value, a0, t0, A1, A2, C1, C2, xi);
}

void SweepSpec::validate() const {
  base.validate();
  if (steps < 1) throw ConfigError("steps must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (!(p_max >= p_min)) throw ConfigError("p_max must be >= p_min");
}

std::vector<double> SweepSpec::p_values() const {
  std::vector<double> ps;
  ps.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) return {p_min};
  for (int i = 0; i < steps; ++i) {
    ps.push_back(i == steps - 1 ? p_max : p_min + (p_max - p_min) * i / (steps - 1));
  }
  return ps;
}

KeyValues parse_key_values(std::string_view text, std::string_view origin) {
  KeyValues out;
  std::set<std::string, std::less<>> seen;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto where = std::string(origin) + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(where + ": expected 'key = value'");
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError(where + ": duplicate key '" + std::string(key) + "'");
    }
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

KeyValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_key_values(ss.str(), path.string());
}

const std::vector<std::string>& scenario_keys() {
  static const std::vector<std::string> keys{"p",     "a0",      "t0",      "A1",
                                             "A2",    "C1",      "C2",      "xi",
                                             "t_min", "t_max",   "samples", "log_spacing",
                                             "l0",    "output"};
  return keys;
}

const std::vector<std::string>& sweep_keys() {
  static const std::vector<std::string> keys{"p_min", "p_max", "steps", "workers"};
  return keys;
}

void apply_setting(ScenarioConfig& c, std::string_view key, std::string_view v) {
  if (key == "p") c.p = parse_real(key, v);
  else if (key == "a0") c.a0 = parse_real(key, v);
  else if (key == "t0") c.t0 = parse_real(key, v);
  else if (key == "A1") c.A1 = parse_real(key, v);
  else if (key == "A2") c.A2 = parse_real(key, v);
  else if (key == "C1") c.C1 = parse_real(key, v);
  else if (key == "C2") c.C2 = parse_real(key, v);
  else if (key == "xi") c.xi = parse_real(key, v);
  else if (key == "t_min") c.grid.t_min = parse_real(key, v);
  else if (key == "t_max") c.grid.t_max = parse_real(key, v);
  else if (key == "samples") c.grid.samples = parse_int(key, v);
  else if (key == "log_spacing") c.grid.log_spacing = parse_bool(key, v);
  else if (key == "l0") c.l0 = parse_real(key, v);
  else if (key == "output") c.output = std::string(v);
  else throw ConfigError("unknown key '" + std::string(key) + "'");
}

void apply_setting(SweepSpec& s, std::string_view key, std::string_view v) {
  if (key == "p_min") s.p_min = parse_real(key, v);
  else if (key == "p_max") s.p_max = parse_real(key, v);
  else if (key == "steps") s.steps = parse_int(key, v);
  else if (key == "workers") s.workers = parse_int(key, v);
  else apply_setting(s.base, key, v);
}

}  // namespace weylbrane::cli
