#include "adsorb/scaling.hpp"

#include <cmath>

#include "adsorb/errors.hpp"
#include "adsorb/trajectory.hpp"

namespace adsorb {

void PhysicalParams::validate() const {
  auto pos = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!pos(D) || !pos(K_a) || !pos(K) || !pos(Gamma_inf) || !pos(c_e)) {
    throw ModelError("physical parameters D, K_a, K, Gamma_inf, c_e must be positive");
  }
  if (!(beta >= 0.0)) throw ModelError("beta must be nonnegative");
  if (beta > 0.0 && !(kT > 0.0)) throw ModelError("beta > 0 requires kT > 0");
}

DimensionlessParams DimensionlessParams::make(double ba, double f_e, Isotherm iso) {
  if (!(ba >= 0.0)) throw ModelError("ba must be nonnegative");
  if (!(f_e > 0.0)) throw ModelError("f_e must be positive");
  const Equilibrium eq = equilibrium_coverage(iso, f_e);
  return DimensionlessParams{ba, f_e, iso, eq.g_e, eq.gamma_star_inf,
                             ba * eq.gamma_star_inf * f_e};
}

DimensionlessParams DimensionlessParams::make_from_prefactor(double ba,
                                                             double prefactor,
                                                             Isotherm iso) {
  if (!(ba >= 0.0)) throw ModelError("ba must be nonnegative");
  const Equilibrium eq = equilibrium_from_prefactor(iso, prefactor);
  const double f_e = f_iso(iso, eq.g_e);
  return DimensionlessParams{ba, f_e, iso, eq.g_e, eq.gamma_star_inf,
                             ba * eq.gamma_star_inf * f_e};
}

double time_to_tilde(const DimensionlessParams& dp, TimeScale from, double t) {
  switch (from) {
    case TimeScale::t_tilde: return t;
    case TimeScale::t_star:
      if (dp.ba == 0.0) throw DomainError("t* scale is degenerate at ba = 0");
      return t * dp.ba / (dp.gamma_star_inf * dp.f_e);
    case TimeScale::t_tilde_star: return t * dp.ba_star;
  }
  return t;
}

double time_from_tilde(const DimensionlessParams& dp, TimeScale to, double t_tilde) {
  switch (to) {
    case TimeScale::t_tilde: return t_tilde;
    case TimeScale::t_star:
      if (dp.ba == 0.0) throw DomainError("t* scale is degenerate at ba = 0");
      return t_tilde * dp.gamma_star_inf * dp.f_e / dp.ba;
    case TimeScale::t_tilde_star:
      if (dp.ba_star == 0.0) throw DomainError("t~* scale is degenerate at ba* = 0");
      return t_tilde / dp.ba_star;
  }
  return t_tilde;
}

DimensionlessParams to_dimensionless(const PhysicalParams& p, Isotherm iso) {
  p.validate();
  if (iso.kind() == IsoKind::frumkin || iso.kind() == IsoKind::vdw) {
    // beta_tilde = 2 beta Gamma_inf / kT must agree with the isotherm
    const double bt = 2.0 * p.beta * p.Gamma_inf / p.kT;
    if (std::abs(bt - iso.beta_tilde()) > 1e-9 * (1.0 + bt)) {
      iso = Isotherm(iso.kind(), bt);
    }
  }
  const double ba = p.D / (p.K_a * p.Gamma_inf * p.K);
  const double f_e = p.K * p.c_e;
  return DimensionlessParams::make(ba, f_e, iso);
}

CharacteristicTimes characteristic_times(const DimensionlessParams& dp,
                                         const PhysicalParams& p) {
  const double T_d = (p.K * p.Gamma_inf) * (p.K * p.Gamma_inf) / p.D;
  const double Gamma_e = dp.g_e * p.Gamma_inf;
  const double T_a = Gamma_e / (p.K_a * p.c_e);
  return {T_d, T_a, dp.gamma_star_inf * dp.f_e / dp.ba};
}

RegimeBounds regime_bounds(const PhysicalParams& p, double er) {
  if (!(er > 0.0) || !(er < 1.0)) {
    throw DomainError("regime_bounds: tolerance must lie in (0,1)");
  }
  const double scale = p.D / (p.K_a * p.K_a);
  constexpr double kSqrtPi = 1.7724538509055160273;
  return {er * er * kSqrtPi / 2.0 * scale, scale / (2.0 * er)};
}

Regime classify_regime(const DimensionlessParams& dp, double lo, double hi) {
  if (dp.ba_star < lo) return Regime::diffusion_controlled;
  if (dp.ba_star > hi) return Regime::barrier_controlled;
  return Regime::mixed;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::diffusion_controlled: return "diffusion_controlled";
    case Regime::mixed: return "mixed";
    case Regime::barrier_controlled: return "barrier_controlled";
  }
  return "?";
}

namespace {

void check_provenance(const Trajectory& traj, const PhysicalParams& p) {
  const DimensionlessParams dp = to_dimensionless(p, traj.params.iso);
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * (std::abs(a) + std::abs(b) + 1e-300);
  };
  if (!close(dp.ba, traj.params.ba) || !close(dp.f_e, traj.params.f_e) ||
      dp.iso.kind() != traj.params.iso.kind() ||
      !close(dp.iso.beta_tilde(), traj.params.iso.beta_tilde())) {
    throw ConfigError("physical parameters do not match the trajectory provenance");
  }
}

}  // namespace

DimensionalSeries redimensionalize(const Trajectory& traj, const PhysicalParams& p) {
  check_provenance(traj, p);
  const double T_d = (p.K * p.Gamma_inf) * (p.K * p.Gamma_inf) / p.D;
  const double Gamma_e = traj.params.g_e * p.Gamma_inf;
  const double kTG = p.kT * p.Gamma_inf;
  DimensionalSeries out;
  const std::size_t n = traj.size();
  out.t.resize(n);
  out.gamma.resize(n);
  out.sigma.resize(n);
  out.pi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.t[i] = T_d * traj.t_tilde[i];
    out.gamma[i] = Gamma_e * traj.gamma_star[i];
    out.pi[i] = kTG * traj.pressure[i];
    out.sigma[i] = p.sigma0 - out.pi[i];
  }
  return out;
}

std::vector<double> subsurface_ratio(const Trajectory& traj) {
  const std::size_t n = traj.size();
  if (n < 3) throw DomainError("subsurface_ratio: needs at least 3 samples");
  const DimensionlessParams& dp = traj.params;
  // dGamma*/dx on the nonuniform grid, x = t* (or t~ when ba = 0)
  const std::vector<double>& x = traj.mesh_in_tilde ? traj.t_tilde : traj.t_star;
  const std::vector<double>& y = traj.gamma_star;
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      const double h1 = x[1] - x[0], h2 = x[2] - x[1];
      d[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * y[0] +
             (h1 + h2) / (h1 * h2) * y[1] - h1 / (h2 * (h1 + h2)) * y[2];
    } else if (i == n - 1) {
      const double h1 = x[n - 2] - x[n - 3], h2 = x[n - 1] - x[n - 2];
      d[i] = h2 / (h1 * (h1 + h2)) * y[n - 3] - (h1 + h2) / (h1 * h2) * y[n - 2] +
             (h1 + 2.0 * h2) / (h2 * (h1 + h2)) * y[n - 1];
    } else {
      const double h1 = x[i] - x[i - 1], h2 = x[i + 1] - x[i];
      d[i] = -h2 / (h1 * (h1 + h2)) * y[i - 1] + (h2 - h1) / (h1 * h2) * y[i] +
             h1 / (h2 * (h1 + h2)) * y[i + 1];
    }
  }
  std::vector<double> cs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double g = traj.coverage[i];
    const double ph = phi(dp.iso, g);
    if (ph == 0.0) throw SingularError("subsurface_ratio: Phi vanished at g = 1");
    const double fg = f_iso(dp.iso, std::min(g, coverage_cap(dp.iso)));
    if (dp.ba == 0.0) {
      cs[i] = fg / dp.f_e;  // local equilibrium
    } else {
      // c_s/c_e = f(g)/f_e + (dGamma*/dt*)/Phi(g)
      cs[i] = fg / dp.f_e + d[i] / ph;
    }
  }
  return cs;
}

std::vector<double> subsurface_concentration(const Trajectory& traj,
                                             const PhysicalParams& p) {
  check_provenance(traj, p);
  std::vector<double> cs = subsurface_ratio(traj);
  for (double& v : cs) v *= p.c_e;
  return cs;
}

}  // namespace adsorb
