#include "adsorb/asymptote.hpp"

#include <cmath>

#include "adsorb/analytic.hpp"
#include "adsorb/errors.hpp"
#include "adsorb/kernel.hpp"

namespace adsorb {

double first_order(double t_tilde, double ba, double prefactor) {
  if (!(t_tilde >= 0.0)) throw DomainError("first_order: t~ must be nonnegative");
  if (!(ba >= 0.0)) throw DomainError("first_order: ba must be nonnegative");
  return prefactor * Kernel::mixed(ba).I1(t_tilde);
}

double first_order_langmuir(double t_tilde, double ba, double f_e,
                            double gamma_star_inf) {
  if (!(t_tilde >= 0.0)) throw DomainError("first_order_langmuir: t~ must be nonnegative");
  return -gamma_star_inf * std::expm1(-f_e * Kernel::mixed(ba).I1(t_tilde));
}

double second_order_volmer_from_h(double gamma_h, double prefactor) {
  return prefactor * gamma_h;
}

double second_order_langmuir_from_h(double gamma_h, double f_e,
                                    double gamma_star_inf) {
  return -gamma_star_inf * std::expm1(-f_e * gamma_h);
}

double second_order_volmer(double t_tilde, double ba, double prefactor) {
  return second_order_volmer_from_h(henry_mixed(t_tilde, ba), prefactor);
}

double second_order_langmuir(double t_tilde, double ba, double f_e,
                             double gamma_star_inf) {
  return second_order_langmuir_from_h(henry_mixed(t_tilde, ba), f_e,
                                      gamma_star_inf);
}

double coverage_asymptote_from_h(IsoKind kind, double gamma_h, double f_e) {
  if (kind == IsoKind::langmuir || kind == IsoKind::frumkin) {
    return -std::expm1(-f_e * gamma_h);
  }
  return f_e * gamma_h;
}

double coverage_asymptote(IsoKind kind, double t_tilde, double ba, double f_e) {
  return coverage_asymptote_from_h(kind, henry_mixed(t_tilde, ba), f_e);
}

double pressure_asymptote_from_h(const Isotherm& iso, double gamma_h,
                                 double f_e) {
  const double gh = f_e * gamma_h;
  const double bt = iso.beta_tilde();
  switch (iso.kind()) {
    case IsoKind::henry:
      return gh;
    case IsoKind::volmer:
    case IsoKind::vdw:
      if (gh >= 1.0) {
        throw RangeError("pressure_asymptote: f_e Gamma*_H reached 1, Volmer form invalid");
      }
      return gh / (1.0 - gh) - 0.5 * bt * gh * gh;
    case IsoKind::langmuir:
    case IsoKind::frumkin: {
      const double e = -std::expm1(-gh);
      return gh - 0.5 * bt * e * e;
    }
  }
  return gh;
}

double pressure_asymptote(const Isotherm& iso, double t_tilde, double ba,
                          double f_e) {
  return pressure_asymptote_from_h(iso, henry_mixed(t_tilde, ba), f_e);
}

double universal_pressure(double t_tilde, double ba, double f_e) {
  return f_e * henry_mixed(t_tilde, ba);
}

std::vector<double> henry_mixed_grid(const std::vector<double>& t_tilde,
                                     double ba) {
  std::vector<double> out(t_tilde.size());
  for (std::size_t i = 0; i < t_tilde.size(); ++i) {
    out[i] = henry_mixed(t_tilde[i], ba);
  }
  return out;
}

DimensionalAsymptote dimensional_asymptotes(const PhysicalParams& p,
                                            const Isotherm& iso, double t) {
  p.validate();
  if (!(t >= 0.0)) throw DomainError("dimensional_asymptotes: t must be nonnegative");
  const double T_d = (p.K * p.Gamma_inf) * (p.K * p.Gamma_inf) / p.D;
  const double ba = p.D / (p.K_a * p.Gamma_inf * p.K);
  const double gamma_h_star = henry_mixed(t / T_d, ba);
  const double kce = p.K * p.c_e;
  const double gamma_henry = p.Gamma_inf * kce * gamma_h_star;  // Gamma_H(t)
  double gamma = gamma_henry, sigma = p.sigma0;
  switch (iso.kind()) {
    case IsoKind::henry:
      sigma = p.sigma0 - p.kT * gamma_henry;
      break;
    case IsoKind::volmer:
    case IsoKind::vdw:
      if (gamma_henry >= p.Gamma_inf) {
        throw RangeError("dimensional_asymptotes: Gamma_H reached Gamma_inf, Volmer form invalid");
      }
      sigma = p.sigma0 -
              p.kT * p.Gamma_inf * gamma_henry / (p.Gamma_inf - gamma_henry) +
              p.beta * gamma_henry * gamma_henry;
      break;
    case IsoKind::langmuir:
    case IsoKind::frumkin: {
      gamma = -p.Gamma_inf * std::expm1(-kce * gamma_h_star);
      const double e2 = -std::expm1(-gamma_henry / p.Gamma_inf);
      sigma = p.sigma0 - p.kT * gamma_henry +
              p.beta * p.Gamma_inf * p.Gamma_inf * e2 * e2;
      break;
    }
  }
  return {gamma, sigma};
}

ErrorEstimates error_estimates(const Isotherm& iso, double g, double f_e) {
  const Equilibrium eq = equilibrium_coverage(iso, f_e);
  if (!(g >= 0.0) || g >= eq.g_e) {
    throw DomainError("error_estimates: coverage must lie below equilibrium");
  }
  const double gsi = eq.gamma_star_inf;
  const double gamma_star = g * gsi;
  const double er1 = gamma_star / (gsi * f_e);
  const double denom = gsi * gsi * f_e - gamma_star;
  if (!(denom > 0.0)) {
    throw RangeError("error_estimates: Er2 denominator is not positive");
  }
  const double er2 =
      (q_constant(iso) - iso.beta_tilde()) * gamma_star * gamma_star / denom;
  return {er1, er2};
}

}  // namespace adsorb
