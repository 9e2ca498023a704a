#ifndef ADSORB_TRAJECTORY_HPP_
#define ADSORB_TRAJECTORY_HPP_

#include <cstdint>
#include <vector>

#include "adsorb/scaling.hpp"

namespace adsorb {

enum class Formulation { wt, exp_transform };
const char* formulation_name(Formulation f);

// Sampled solution of one run, with full parameter provenance. For ba = 0
// the adsorption-time scale does not exist and t_star holds NaN; the mesh
// is then defined directly in t~ (mesh_in_tilde flag).
struct Trajectory {
  explicit Trajectory(DimensionlessParams p) : params(p) {}

  std::vector<double> t_star;
  std::vector<double> t_tilde;
  std::vector<double> gamma_star;  // Gamma* = Gamma / Gamma_e, starts at 0
  std::vector<double> coverage;    // g = Gamma* * g_e
  std::vector<double> pressure;    // Pi~ = surface_pressure_j(iso, g)

  DimensionlessParams params;
  std::uint64_t mesh_hash = 0;
  Formulation formulation = Formulation::wt;
  bool mesh_in_tilde = false;
  long clamp_count = 0;  // predictor/corrector coverage clamps (diagnostic)

  std::size_t size() const { return gamma_star.size(); }
};

}  // namespace adsorb

#endif  // ADSORB_TRAJECTORY_HPP_
