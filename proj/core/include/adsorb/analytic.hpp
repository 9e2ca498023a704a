#ifndef ADSORB_ANALYTIC_HPP_
#define ADSORB_ANALYTIC_HPP_

#include <complex>

namespace adsorb {

// Diffusion-controlled Henry solution Gamma*_h(t~) = 1 - exp(t~) erfc(sqrt t~),
// evaluated through the scaled erfc (no overflow at any t~).
double henry_dc(double t_tilde);

// Roots of ba x^2 + x + 1 = 0; real pair iff ba <= 1/4. Product is 1/ba and
// sum is -1/ba.
struct RootPair {
  std::complex<double> plus;
  std::complex<double> minus;
  bool real;
};
RootPair lambda_roots(double ba);

// Mixed-control Henry solution Gamma*_H(t~) evaluated from the integral
// representation, rearranged to the cancellation-free positive form
//   (2/pi) Int_0^inf (1 - exp(-r^2 t~)) / ((ba r^2 - 1)^2 + r^2) dr.
// Valid for all t~ >= 0 and ba >= 0; ba = 0 reduces exactly to henry_dc.
// The quadrature splits at the spectral peak r = 1/sqrt(ba).
double henry_mixed(double t_tilde, double ba);

// Partial sum of the power-series form: (1/ba) sum_{n>=1} s_n
// t~^{(n+1)/2} / Gamma((n+3)/2), with s_n = (l+^n - l-^n)/(l+ - l-)
// computed by the real recurrence s_{n+1} = -(s_n + s_{n-1})/ba.
// Reliable for t~/ba <~ 1; throws RangeError when floating-point
// cancellation makes the partial sum meaningless.
double henry_mixed_series(double t_tilde, double ba, int n_terms);

// Four-term small-time expansion, error O((t~/ba)^3).
double henry_mixed_expansion(double t_tilde, double ba);

// Barrier-controlled limit 1 - exp(-t*).
double barrier_control(double t_star);

// Upper envelope of Volmer-type barrier-controlled adsorption: min(t*, 1).
double volmer_barrier_envelope(double t_star);

}  // namespace adsorb

#endif  // ADSORB_ANALYTIC_HPP_
