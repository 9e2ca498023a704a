#include "adsorb/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "adsorb/errors.hpp"
#include "adsorb/quadrature.hpp"
#include "adsorb/specfun.hpp"

namespace adsorb {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

double henry_dc(double t_tilde) {
  if (!(t_tilde >= 0.0)) throw DomainError("henry_dc: t~ must be nonnegative");
  return 1.0 - erfc_scaled(std::sqrt(t_tilde));
}

RootPair lambda_roots(double ba) {
  if (!(ba > 0.0)) throw DomainError("lambda_roots: ba must be positive (ba = 0 is the dc path)");
  const double disc = 1.0 - 4.0 * ba;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double plus = -2.0 / (1.0 + sq);          // smaller magnitude
    const double minus = -(1.0 + sq) / (2.0 * ba);  // larger magnitude
    return {std::complex<double>(plus, 0.0), std::complex<double>(minus, 0.0), true};
  }
  const double re = -1.0 / (2.0 * ba);
  const double im = std::sqrt(-disc) / (2.0 * ba);
  return {std::complex<double>(re, im), std::complex<double>(re, -im), false};
}

double henry_mixed(double t_tilde, double ba) {
  if (!(t_tilde >= 0.0)) throw DomainError("henry_mixed: t~ must be nonnegative");
  if (!(ba >= 0.0)) throw DomainError("henry_mixed: ba must be nonnegative");
  if (t_tilde == 0.0) return 0.0;
  const double t = t_tilde;
  auto f = [&](double r) {
    const double r2 = r * r;
    const double q = ba * r2 - 1.0;
    return -std::expm1(-r2 * t) / (q * q + r2);
  };
  // breakpoints: the spectral peak at 1/sqrt(ba) and the exponential scale
  std::vector<double> pts{0.0};
  const double r0 = ba > 0.0 ? 1.0 / std::sqrt(ba) : 1.0;
  const double re = 1.0 / std::sqrt(t);
  for (double p : {0.5 * r0, r0, 2.0 * r0, re}) {
    if (p > 0.0 && std::isfinite(p)) pts.push_back(p);
  }
  const double cut = std::max({4.0 * r0, 4.0 * re, 8.0});
  pts.push_back(cut);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i + 1] > cut) break;
    sum += integrate_adaptive(f, pts[i], pts[i + 1], 1e-14, 1e-13);
  }
  // tail r in (cut, inf) through r = cut/v
  auto tail = [&](double v) { return f(cut / v) * cut / (v * v); };
  sum += integrate_adaptive(tail, 0.0, 1.0, 1e-14, 1e-13);
  return sum * (2.0 / M_PI);
}

double henry_mixed_series(double t_tilde, double ba, int n_terms) {
  if (!(t_tilde >= 0.0)) throw DomainError("henry_mixed_series: t~ must be nonnegative");
  if (!(ba > 0.0)) throw DomainError("henry_mixed_series: ba must be positive");
  if (n_terms < 1) throw DomainError("henry_mixed_series: n_terms must be >= 1");
  const double st = std::sqrt(t_tilde);
  double s_prev = 0.0, s_cur = 1.0;  // s_1 = 1
  double pow_t = t_tilde;            // t~^{(n+1)/2} at n = 1
  double sum = 0.0, max_term = 0.0, prev_mag = 0.0;
  bool growing_at_end = false;
  for (int n = 1; n <= n_terms; ++n) {
    const double term = s_cur * pow_t / gamma_fn(0.5 * (n + 3));
    sum += term;
    const double mag = std::abs(term);
    max_term = std::max(max_term, mag);
    growing_at_end = n > 1 && mag > prev_mag;
    prev_mag = mag;
    const double s_next = -(s_cur + s_prev) / ba;
    s_prev = s_cur;
    s_cur = s_next;
    pow_t *= st;
  }
  sum /= ba;
  if (max_term > 1e12 * (std::abs(sum) + 1e-300)) {
    throw RangeError("henry_mixed_series: catastrophic cancellation, partial sum unreliable");
  }
  if (growing_at_end && prev_mag > 1e-6 * (std::abs(sum) + 1e-300)) {
    throw RangeError("henry_mixed_series: terms still growing at truncation");
  }
  return sum;
}

double henry_mixed_expansion(double t_tilde, double ba) {
  if (!(t_tilde >= 0.0)) throw DomainError("henry_mixed_expansion: t~ must be nonnegative");
  if (!(ba > 0.0)) throw DomainError("henry_mixed_expansion: ba must be positive");
  const double t = t_tilde;
  const double st = std::sqrt(t);
  const double b = ba;
  return (t - (4.0 / 3.0) * t * st / (kSqrtPi * b) +
          0.5 * t * t * (1.0 / (b * b) - 1.0 / b) +
          (8.0 * t * t * st / (15.0 * kSqrtPi)) * (2.0 / (b * b) - 1.0 / (b * b * b))) /
         b;
}

double barrier_control(double t_star) {
  if (!(t_star >= 0.0)) throw DomainError("barrier_control: t* must be nonnegative");
  return -std::expm1(-t_star);
}

double volmer_barrier_envelope(double t_star) {
  if (!(t_star >= 0.0)) throw DomainError("volmer_barrier_envelope: t* must be nonnegative");
  return std::min(t_star, 1.0);
}

}  // namespace adsorb
