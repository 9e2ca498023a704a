#include "adsorb/specfun.hpp"

#include <cmath>
#include <vector>

#include "adsorb/errors.hpp"
#include "adsorb/quadrature.hpp"

#include "erfcx_table.inc"

namespace adsorb {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kInvSqrtPi = 0.56418958354775628695;
}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be positive");
  return std::tgamma(x);
}

double erfc_scaled(double x) {
  if (!(x >= 0.0)) throw DomainError("erfc_scaled: argument must be nonnegative");
  if (x < 8.0) {
    const int k = static_cast<int>(x);
    const double u = 2.0 * (x - k) - 1.0;  // map [k, k+1) onto [-1, 1]
    const double* c = kErfcxCheb[k];
    double b1 = 0.0, b2 = 0.0;
    for (int j = kErfcxDeg - 1; j >= 1; --j) {
      const double t = 2.0 * u * b1 - b2 + c[j];
      b2 = b1;
      b1 = t;
    }
    return u * b1 - b2 + 0.5 * c[0];
  }
  // asymptotic series in w = 1/(2 x^2); truncation below 6e-16 for x >= 8
  const double w = 1.0 / (2.0 * x * x);
  double s = 1.0, term = 1.0;
  for (int k = 1; k < 14; ++k) {
    term *= -static_cast<double>(2 * k - 1) * w;
    s += term;
  }
  return s * kInvSqrtPi / x;
}

double mittag_leffler_half(double z) {
  if (!(z >= 0.0)) throw DomainError("mittag_leffler_half: argument must be nonnegative");
  return erfc_scaled(z);
}

double kernel_xi(KernelParam p, double t) {
  if (!(p.a >= 0.0)) throw DomainError("kernel_xi: A must be nonnegative");
  if (!(t >= 0.0)) throw DomainError("kernel_xi: t must be nonnegative");
  if (p.a == 0.0) {
    if (t == 0.0) throw SingularError("kernel_xi: diffusion kernel diverges at t = 0");
    return 1.0 / std::sqrt(M_PI * t);
  }
  return erfc_scaled(std::sqrt(t) / p.a) / p.a;
}

double kernel_xi_small_t(KernelParam p, double t) {
  if (!(p.a > 0.0)) throw DomainError("kernel_xi_small_t: A must be positive");
  if (!(t >= 0.0)) throw DomainError("kernel_xi_small_t: t must be nonnegative");
  return 1.0 / p.a - 2.0 * std::sqrt(t) / (p.a * p.a * kSqrtPi);
}

double kernel_xi_large_t(KernelParam p, double t) {
  if (!(p.a > 0.0)) throw DomainError("kernel_xi_large_t: A must be positive");
  if (!(t > 0.0)) throw DomainError("kernel_xi_large_t: t must be positive");
  const double st = std::sqrt(t);
  return 1.0 / (kSqrtPi * st) - p.a * p.a / (2.0 * kSqrtPi * t * st);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double decay_scale) {
  if (!(decay_scale > 0.0)) {
    throw DomainError("integrate_semi_infinite: decay_scale must be positive");
  }
  const double s = decay_scale;
  auto g = [&](double u) {
    const double om = 1.0 - u;
    const double r = s * u / om;
    return f(r) * s / (om * om);
  };
  return integrate_adaptive(g, 0.0, 1.0, 1e-14, 1e-12);
}

}  // namespace adsorb
