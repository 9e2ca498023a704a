#ifndef ADSORB_ASYMPTOTE_HPP_
#define ADSORB_ASYMPTOTE_HPP_

#include <vector>

#include "adsorb/isotherm.hpp"
#include "adsorb/scaling.hpp"

namespace adsorb {

enum class AsymptoteOrder { first, second };
enum class AsymptoteTarget { adsorption_star, coverage, pressure, tension };

// Short-time asymptote for Phi == 1 (and Langmuir at small coverage):
// prefactor * (2 sqrt(t~/pi) + ba exp(t~/ba^2) erfc(sqrt(t~)/ba) - ba),
// i.e. prefactor * I1_mixed(t~); prefactor = gamma_star_inf * f_e.
// ba = 0 reduces to 2 prefactor sqrt(t~/pi).
double first_order(double t_tilde, double ba, double prefactor);

// Saturation-bounded variant for Langmuir/Frumkin:
// gamma_star_inf {1 - exp[-f_e (...)]}. The exponent carries a negative
// sign so the bounded form reduces to first_order in the dilute limit
// gamma_star_inf -> infinity.
double first_order_langmuir(double t_tilde, double ba, double f_e,
                            double gamma_star_inf);

// Small-coverage asymptotes built on the mixed-control Henry solution.
double second_order_volmer(double t_tilde, double ba, double prefactor);
double second_order_langmuir(double t_tilde, double ba, double f_e,
                             double gamma_star_inf);

// The same two asymptotes with a precomputed Gamma*_H(t~) value (one grid
// per ba is shared across every asymptote in a sweep).
double second_order_volmer_from_h(double gamma_h, double prefactor);
double second_order_langmuir_from_h(double gamma_h, double f_e,
                                    double gamma_star_inf);

// Coverage form g~(t~): f_e Gamma*_H for the Volmer group, 1 - exp(-f_e
// Gamma*_H) for the Langmuir group. Henry follows the Volmer expression
// (for which it is exact).
double coverage_asymptote(IsoKind kind, double t_tilde, double ba, double f_e);
double coverage_asymptote_from_h(IsoKind kind, double gamma_h, double f_e);

// Surface-pressure asymptotes Pi~(t~) with g~_H = f_e Gamma*_H:
//   Henry             g~_H                    (exact)
//   Volmer / vdW      g~_H/(1-g~_H) - bt g~_H^2/2   (needs g~_H < 1)
//   Langmuir / Frumkin g~_H - bt (1-exp(-g~_H))^2/2
double pressure_asymptote(const Isotherm& iso, double t_tilde, double ba,
                          double f_e);
double pressure_asymptote_from_h(const Isotherm& iso, double gamma_h,
                                 double f_e);

// Model-independent first-order pressure asymptote f_e Gamma*_H (second
// order for Henry and Langmuir).
double universal_pressure(double t_tilde, double ba, double f_e);

// Memoized Gamma*_H values over a t~ grid.
std::vector<double> henry_mixed_grid(const std::vector<double>& t_tilde,
                                     double ba);

// Dimensional asymptotes at time t: adsorption Gamma_A(t) and surface
// tension sigma_A(t), consistent with redimensionalize applied to the
// dimensionless forms.
struct DimensionalAsymptote {
  double gamma;
  double sigma;
};
DimensionalAsymptote dimensional_asymptotes(const PhysicalParams& p,
                                            const Isotherm& iso, double t);

// Leading relative-error estimates of the first/second order
// approximations of the driving term at coverage g:
//   Er1 = Gamma* / (gamma_star_inf f_e)
//   Er2 = (Q - bt) Gamma*^2 / (gamma_star_inf^2 f_e - Gamma*)
struct ErrorEstimates {
  double er1;
  double er2;
};
ErrorEstimates error_estimates(const Isotherm& iso, double g, double f_e);

}  // namespace adsorb

#endif  // ADSORB_ASYMPTOTE_HPP_
