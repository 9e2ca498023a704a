#ifndef ADSORB_SPECFUN_HPP_
#define ADSORB_SPECFUN_HPP_

#include <functional>

namespace adsorb {

// Gamma function for x > 0. Throws DomainError otherwise.
double gamma_fn(double x);

// Scaled complementary error function exp(x^2) erfc(x) for x >= 0.
// Piecewise Chebyshev on [0,8), asymptotic series beyond; relative error
// below 1e-15 everywhere, so products like exp(t/A^2) erfc(sqrt(t)/A) never
// overflow no matter how large t/A^2 gets.
double erfc_scaled(double x);

// Mittag-Leffler relaxation function E_{1/2}(-z) = exp(z^2) erfc(z), z >= 0.
double mittag_leffler_half(double z);

// Relaxation-kernel parameter. a = 0 selects the pure diffusion kernel.
struct KernelParam {
  double a = 0.0;
};

// Convolution kernel xi_A(t): (1/A) exp(t/A^2) erfc(sqrt(t)/A) for A > 0,
// 1/sqrt(pi t) for A = 0. A = 0, t = 0 is the singular point.
double kernel_xi(KernelParam p, double t);

// Two-term expansions of xi_A, verification-only (never used by the solver):
// small t/A^2:  1/A - 2 sqrt(t) / (A^2 sqrt(pi))
// large t/A^2:  1/sqrt(pi t) - A^2 / (2 sqrt(pi) t^{3/2})
double kernel_xi_small_t(KernelParam p, double t);
double kernel_xi_large_t(KernelParam p, double t);

// Integral of `f` over (0, inf), mapped to (0,1) through r = s*u/(1-u) and
// integrated adaptively. `decay_scale` s sets the substitution scale; the
// integrand may decay exponentially or algebraically (must be o(1/r)).
// Relative target 1e-10 (tighter when reachable). Throws AccuracyError with
// the best estimate when the refinement cap is hit.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double decay_scale);

}  // namespace adsorb

#endif  // ADSORB_SPECFUN_HPP_
