#ifndef ADSORB_SCALING_HPP_
#define ADSORB_SCALING_HPP_

#include <vector>

#include "adsorb/isotherm.hpp"

namespace adsorb {

// Material and run parameters in a consistent unit system (e.g. SI). The
// library never checks units; only the combinations K*c_e and K*Gamma_inf
// enter the dimensionless groups.
struct PhysicalParams {
  double D;          // diffusion coefficient           [L^2/T]
  double K_a;        // adsorption rate constant        [L/T]
  double K;          // adsorption (surface activity)   [L]
  double Gamma_inf;  // saturation adsorption           [amount/L^2]
  double c_e;        // initial bulk concentration      [amount/L^3]
  double beta = 0.0;   // interaction parameter
  double kT = 0.0;     // thermal energy (needed for pressure output)
  double sigma0 = 0.0; // clean-interface tension

  void validate() const;
};

// The dimensionless groups of a run plus derived equilibrium quantities.
struct DimensionlessParams {
  double ba;    // D / (K_a Gamma_inf K); 0 = diffusion-controlled
  double f_e;   // K c_e
  Isotherm iso;
  // derived
  double g_e;             // equilibrium coverage, f(g_e) = f_e
  double gamma_star_inf;  // 1 / g_e
  double ba_star;         // ba * gamma_star_inf * f_e

  static DimensionlessParams make(double ba, double f_e, Isotherm iso);
  // Variant where the run is specified by prefactor = gamma_star_inf * f_e.
  static DimensionlessParams make_from_prefactor(double ba, double prefactor,
                                                 Isotherm iso);
};

enum class TimeScale { t_tilde, t_star, t_tilde_star };

// Conversion factors: t~ = factor * t. All three scales are proportional;
// t* = t~ * gamma_star_inf * f_e / ba and t~* = t~ / ba_star.
double time_to_tilde(const DimensionlessParams& dp, TimeScale from, double t);
double time_from_tilde(const DimensionlessParams& dp, TimeScale to, double t_tilde);

DimensionlessParams to_dimensionless(const PhysicalParams& p, Isotherm iso);

struct CharacteristicTimes {
  double T_d;    // diffusion time (K Gamma_inf)^2 / D
  double T_a;    // adsorption time Gamma_e / (K_a c_e)
  double ratio;  // T_d / T_a = gamma_star_inf * f_e / ba
};
CharacteristicTimes characteristic_times(const DimensionlessParams& dp,
                                         const PhysicalParams& p);

// Regime boundaries at relative tolerance Er:
// T_BC = Er^2 sqrt(pi)/2 * D/K_a^2, T_DC = 1/(2 Er) * D/K_a^2.
struct RegimeBounds {
  double T_BC;
  double T_DC;
};
RegimeBounds regime_bounds(const PhysicalParams& p, double er);

enum class Regime { diffusion_controlled, mixed, barrier_controlled };

// Classification by Ba*: mixed inside [lo, hi] (defaults 1e-2, 1e2).
Regime classify_regime(const DimensionlessParams& dp, double lo = 1e-2,
                       double hi = 1e2);
const char* regime_name(Regime r);

struct Trajectory;  // defined in trajectory.hpp

// Dimensional post-processing of a trajectory produced with parameters
// consistent with `p` (checked; mismatch is a ConfigError).
struct DimensionalSeries {
  std::vector<double> t;       // [T]
  std::vector<double> gamma;   // Gamma(t)
  std::vector<double> sigma;   // sigma0 - kT Gamma_inf Pi~
  std::vector<double> pi;      // kT Gamma_inf Pi~
};
DimensionalSeries redimensionalize(const Trajectory& traj,
                                   const PhysicalParams& p);

// Subsurface concentration recovered from the flux balance:
// c_s/c_e = f(g)/f_e + (dGamma*/dt*) / Phi(g); the derivative uses
// three-point finite differences on the nonuniform mesh. For ba = 0 the
// direct relation c_s = f(g)/K holds. Returns the dimensionless ratio
// c_s/c_e at every trajectory node.
std::vector<double> subsurface_ratio(const Trajectory& traj);

// Dimensional c_s(t) series; requires consistent PhysicalParams.
std::vector<double> subsurface_concentration(const Trajectory& traj,
                                             const PhysicalParams& p);

}  // namespace adsorb

#endif  // ADSORB_SCALING_HPP_
