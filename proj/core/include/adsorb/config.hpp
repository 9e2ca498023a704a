#ifndef ADSORB_CONFIG_HPP_
#define ADSORB_CONFIG_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "adsorb/isotherm.hpp"
#include "adsorb/mesh.hpp"
#include "adsorb/scaling.hpp"
#include "adsorb/solver.hpp"

namespace adsorb {

enum class RunMode { solve, henry, asymptote, compare, sweep, classify };

RunMode parse_run_mode(std::string_view s);
const char* run_mode_name(RunMode m);

// Whole-run configuration. Parsed from a `key = value` file with
// [section] headers; every key can also be set or overridden with
// `--set section.key=value`. Exactly one of the dimensionless ([params])
// and physical ([physical]) blocks may be present.
struct RunConfig {
  // [run]
  RunMode mode = RunMode::solve;
  FormulationChoice formulation = FormulationChoice::automatic;
  bool strict = false;
  int threads = 0;  // sweep worker cap; 0 = hardware concurrency
  int corrector_iterations = 0;

  // [isotherm]
  IsoKind iso_kind = IsoKind::henry;
  double beta_tilde = 0.0;

  // [params] (dimensionless)
  bool has_dimensionless = false;
  double ba = -1.0;
  double f_e = -1.0;        // either f_e or prefactor, not both
  double prefactor = -1.0;  // gamma_star_inf * f_e

  // [physical]
  bool has_physical = false;
  PhysicalParams phys{};

  // [mesh]  (empty = default grading)
  std::vector<MeshRegion> mesh_regions;

  // [grid]  (log-spaced t~ grid for the `henry` mode)
  double grid_min = 1e-4;
  double grid_max = 1e3;
  int grid_points = 181;

  // [output]
  std::string out_path = "out.csv";
  bool subsurface = true;

  // [sweep]
  std::string sweep_param;
  std::vector<double> sweep_values;

  // [classify]
  double classify_er = 0.1;
  double mixed_lo = 1e-2;
  double mixed_hi = 1e2;

  // Materialized pieces (validate() must run first).
  Isotherm isotherm() const { return Isotherm(iso_kind, beta_tilde); }
  DimensionlessParams dimensionless() const;
  Mesh mesh(bool in_tilde) const;

  // Cross-field checks; throws ConfigError.
  void validate() const;
};

// Set one key (ConfigError on unknown key or bad value).
void config_set(RunConfig& cfg, std::string_view key, std::string_view value);

RunConfig parse_config(std::istream& is);
RunConfig parse_config_file(const std::string& path);

}  // namespace adsorb

#endif  // ADSORB_CONFIG_HPP_
