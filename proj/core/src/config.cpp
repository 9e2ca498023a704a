#include "adsorb/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "adsorb/errors.hpp"

namespace adsorb {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string_view s) {
  std::string t(s);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return t;
}

double to_double(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  std::size_t pos = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + std::string(key) + "': '" + v + "'");
  }
  if (pos != v.size()) {
    throw ConfigError("trailing characters in value for '" + std::string(key) + "': '" + v + "'");
  }
  return parsed;
}

int to_int(std::string_view key, std::string_view value) {
  const double d = to_double(key, value);
  const int i = static_cast<int>(d);
  if (d != i) throw ConfigError("expected an integer for '" + std::string(key) + "'");
  return i;
}

bool to_bool(std::string_view key, std::string_view value) {
  const std::string v = lower(trim(value));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("expected a boolean for '" + std::string(key) + "'");
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      break;
    }
    out.push_back(trim(s.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

std::vector<MeshRegion> parse_regions(std::string_view key, std::string_view value) {
  std::vector<MeshRegion> regions;
  for (const std::string& item : split(value, ',')) {
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("mesh region must be 'end:step' in '" + std::string(key) + "'");
    }
    regions.push_back({to_double(key, item.substr(0, colon)),
                       to_double(key, item.substr(colon + 1))});
  }
  if (regions.empty()) throw ConfigError("empty region list for '" + std::string(key) + "'");
  return regions;
}

FormulationChoice parse_formulation(std::string_view value) {
  const std::string v = lower(trim(value));
  if (v == "auto" || v == "automatic") return FormulationChoice::automatic;
  if (v == "wt") return FormulationChoice::wt;
  if (v == "exp") return FormulationChoice::exp_transform;
  throw ConfigError("formulation must be auto|wt|exp, got '" + v + "'");
}

}  // namespace

RunMode parse_run_mode(std::string_view s) {
  const std::string v = lower(trim(s));
  if (v == "solve") return RunMode::solve;
  if (v == "henry") return RunMode::henry;
  if (v == "asymptote") return RunMode::asymptote;
  if (v == "compare") return RunMode::compare;
  if (v == "sweep") return RunMode::sweep;
  if (v == "classify") return RunMode::classify;
  throw ConfigError("unknown mode '" + v + "'");
}

const char* run_mode_name(RunMode m) {
  switch (m) {
    case RunMode::solve: return "solve";
    case RunMode::henry: return "henry";
    case RunMode::asymptote: return "asymptote";
    case RunMode::compare: return "compare";
    case RunMode::sweep: return "sweep";
    case RunMode::classify: return "classify";
  }
  return "?";
}

void config_set(RunConfig& cfg, std::string_view key_raw, std::string_view value) {
  const std::string key = lower(trim(key_raw));
  if (key == "run.mode") cfg.mode = parse_run_mode(value);
  else if (key == "run.formulation") cfg.formulation = parse_formulation(value);
  else if (key == "run.strict") cfg.strict = to_bool(key, value);
  else if (key == "run.threads") cfg.threads = to_int(key, value);
  else if (key == "run.corrector_iterations") cfg.corrector_iterations = to_int(key, value);
  else if (key == "isotherm.kind") cfg.iso_kind = parse_iso_kind(trim(value));
  else if (key == "isotherm.beta_tilde") cfg.beta_tilde = to_double(key, value);
  else if (key == "params.ba") { cfg.ba = to_double(key, value); cfg.has_dimensionless = true; }
  else if (key == "params.f_e") { cfg.f_e = to_double(key, value); cfg.has_dimensionless = true; }
  else if (key == "params.prefactor") { cfg.prefactor = to_double(key, value); cfg.has_dimensionless = true; }
  else if (key == "physical.d") { cfg.phys.D = to_double(key, value); cfg.has_physical = true; }
  else if (key == "physical.k_a") { cfg.phys.K_a = to_double(key, value); cfg.has_physical = true; }
  else if (key == "physical.k") { cfg.phys.K = to_double(key, value); cfg.has_physical = true; }
  else if (key == "physical.gamma_inf") { cfg.phys.Gamma_inf = to_double(key, value); cfg.has_physical = true; }
  else if (key == "physical.c_e") { cfg.phys.c_e = to_double(key, value); cfg.has_physical = true; }
  else if (key == "physical.beta") { cfg.phys.beta = to_double(key, value); cfg.has_physical = true; }
  else if (key == "physical.kt") { cfg.phys.kT = to_double(key, value); cfg.has_physical = true; }
  else if (key == "physical.sigma0") { cfg.phys.sigma0 = to_double(key, value); cfg.has_physical = true; }
  else if (key == "mesh.regions") cfg.mesh_regions = parse_regions(key, value);
  else if (key == "grid.min") cfg.grid_min = to_double(key, value);
  else if (key == "grid.max") cfg.grid_max = to_double(key, value);
  else if (key == "grid.points") cfg.grid_points = to_int(key, value);
  else if (key == "output.path") cfg.out_path = trim(value);
  else if (key == "output.subsurface") cfg.subsurface = to_bool(key, value);
  else if (key == "sweep.param") cfg.sweep_param = lower(trim(value));
  else if (key == "sweep.values") {
    cfg.sweep_values.clear();
    for (const std::string& item : split(value, ',')) {
      if (!item.empty()) cfg.sweep_values.push_back(to_double(key, item));
    }
  } else if (key == "classify.er") cfg.classify_er = to_double(key, value);
  else if (key == "classify.mixed_lo") cfg.mixed_lo = to_double(key, value);
  else if (key == "classify.mixed_hi") cfg.mixed_hi = to_double(key, value);
  else throw ConfigError("unknown config key '" + key + "'");
}

RunConfig parse_config(std::istream& is) {
  RunConfig cfg;
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      }
      section = lower(trim(t.substr(1, t.size() - 2)));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    }
    const std::string full = section.empty() ? key : section + "." + key;
    try {
      config_set(cfg, full, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(f);
}

void RunConfig::validate() const {
  if (has_dimensionless && has_physical) {
    throw ConfigError("[params] and [physical] are mutually exclusive");
  }
  if (mode != RunMode::henry && !has_dimensionless && !has_physical) {
    throw ConfigError("one of [params] or [physical] is required");
  }
  if (has_dimensionless) {
    if (!(ba >= 0.0)) throw ConfigError("params.ba must be set and nonnegative");
    const bool has_fe = f_e > 0.0, has_pref = prefactor > 0.0;
    if (mode != RunMode::henry && has_fe == has_pref) {
      throw ConfigError("exactly one of params.f_e and params.prefactor is required");
    }
  }
  if (mode == RunMode::henry && !has_physical && !(ba >= 0.0)) {
    throw ConfigError("henry mode needs params.ba (or a [physical] block)");
  }
  if (mode == RunMode::sweep) {
    if (sweep_param.empty() || sweep_values.empty()) {
      throw ConfigError("sweep mode needs sweep.param and sweep.values");
    }
  }
  if (grid_points < 2 || !(grid_max > grid_min) || !(grid_min > 0.0)) {
    throw ConfigError("grid needs 0 < min < max and at least 2 points");
  }
  if (!(mixed_lo > 0.0) || !(mixed_hi > mixed_lo)) {
    throw ConfigError("classify thresholds need 0 < mixed_lo < mixed_hi");
  }
  if (threads < 0) throw ConfigError("run.threads must be >= 0");
  if (corrector_iterations < 0) throw ConfigError("run.corrector_iterations must be >= 0");
}

DimensionlessParams RunConfig::dimensionless() const {
  const Isotherm iso = isotherm();
  if (has_physical) return to_dimensionless(phys, iso);
  if (prefactor > 0.0 && !(f_e > 0.0)) {
    return DimensionlessParams::make_from_prefactor(ba, prefactor, iso);
  }
  return DimensionlessParams::make(ba, f_e, iso);
}

Mesh RunConfig::mesh(bool in_tilde) const {
  if (!mesh_regions.empty()) return Mesh::build(mesh_regions);
  return in_tilde ? Mesh::default_dc() : Mesh::default_mixed();
}

}  // namespace adsorb
