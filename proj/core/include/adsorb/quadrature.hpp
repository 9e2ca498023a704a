#ifndef ADSORB_QUADRATURE_HPP_
#define ADSORB_QUADRATURE_HPP_

#include <functional>

namespace adsorb {

// Adaptive Gauss-Legendre integration of f over [a, b]. An interval is
// accepted when |G12(parent) - G12(left) - G12(right)| passes the mixed
// absolute/relative test; otherwise it is split. Throws AccuracyError
// (carrying the best estimate and its error bound) if the subdivision
// budget runs out before the target is met.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, double rel_tol);

}  // namespace adsorb

#endif  // ADSORB_QUADRATURE_HPP_
