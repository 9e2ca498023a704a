#include "adsorb/isotherm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

#include "adsorb/errors.hpp"

namespace adsorb {

namespace {

void check_coverage(double g, bool allow_one) {
  const double hi = allow_one ? 1.0 : 1.0 - 1e-15;
  if (!(g >= 0.0) || g > hi || !std::isfinite(g)) {
    throw DomainError("coverage must lie in [0, 1)");
  }
}

}  // namespace

Isotherm::Isotherm(IsoKind kind, double beta_tilde)
    : kind_(kind), beta_tilde_(beta_tilde) {
  if (!(beta_tilde >= 0.0)) {
    throw ModelError("beta_tilde must be nonnegative");
  }
  switch (kind) {
    case IsoKind::henry:
    case IsoKind::langmuir:
    case IsoKind::volmer:
      if (beta_tilde != 0.0) {
        throw ModelError(name() + " model has no interaction term; beta_tilde must be 0");
      }
      break;
    case IsoKind::frumkin:
      if (beta_tilde >= 4.0) {
        throw ModelError("Frumkin requires beta_tilde < 4 (unique equilibrium)");
      }
      break;
    case IsoKind::vdw:
      if (beta_tilde >= 6.75) {
        throw ModelError("van der Waals requires beta_tilde < 6.75 (unique equilibrium)");
      }
      break;
  }
}

std::string Isotherm::name() const {
  switch (kind_) {
    case IsoKind::henry: return "henry";
    case IsoKind::langmuir: return "langmuir";
    case IsoKind::frumkin: return "frumkin";
    case IsoKind::volmer: return "volmer";
    case IsoKind::vdw: return "vdw";
  }
  return "?";
}

IsoKind parse_iso_kind(std::string_view s) {
  std::string t(s);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (t == "henry") return IsoKind::henry;
  if (t == "langmuir") return IsoKind::langmuir;
  if (t == "frumkin") return IsoKind::frumkin;
  if (t == "volmer") return IsoKind::volmer;
  if (t == "vdw") return IsoKind::vdw;
  throw ConfigError("unknown isotherm kind: '" + t + "'");
}

double phi(const Isotherm& iso, double g) {
  check_coverage(g, true);
  return iso.phi_is_unity() ? 1.0 : 1.0 - g;
}

double f_iso(const Isotherm& iso, double g) {
  check_coverage(g, false);
  if (g > coverage_cap(iso)) {
    throw DomainError("f_iso: coverage too close to saturation for " + iso.name());
  }
  const double bt = iso.beta_tilde();
  switch (iso.kind()) {
    case IsoKind::henry: return g;
    case IsoKind::langmuir: return g / (1.0 - g);
    case IsoKind::frumkin: return g / (1.0 - g) * std::exp(-bt * g);
    case IsoKind::volmer: {
      const double r = g / (1.0 - g);
      return r * std::exp(r);
    }
    case IsoKind::vdw: {
      const double r = g / (1.0 - g);
      return r * std::exp(r - bt * g);
    }
  }
  return 0.0;
}

double surface_pressure_j(const Isotherm& iso, double g) {
  check_coverage(g, false);
  const double bt = iso.beta_tilde();
  switch (iso.kind()) {
    case IsoKind::henry: return g;
    case IsoKind::langmuir: return -std::log1p(-g);
    case IsoKind::frumkin: return -std::log1p(-g) - 0.5 * bt * g * g;
    case IsoKind::volmer: return g / (1.0 - g);
    case IsoKind::vdw: return g / (1.0 - g) - 0.5 * bt * g * g;
  }
  return 0.0;
}

int q_constant(const Isotherm& iso) {
  switch (iso.kind()) {
    case IsoKind::henry: return 0;
    case IsoKind::langmuir:
    case IsoKind::frumkin: return 1;
    case IsoKind::volmer:
    case IsoKind::vdw: return 2;
  }
  return 0;
}

double taylor_f2(const Isotherm& iso, double g) {
  check_coverage(g, false);
  return g + (q_constant(iso) - iso.beta_tilde()) * g * g;
}

double coverage_cap(const Isotherm& iso) {
  // exp(g/(1-g)) overflows a double once g/(1-g) > ~709
  if (iso.kind() == IsoKind::volmer || iso.kind() == IsoKind::vdw) {
    return 700.0 / 701.0;
  }
  return 1.0 - 1e-9;
}

namespace {

// Bisection to ~1e-14 on [lo, hi] for a monotone-increasing residual,
// then a few secant polish steps.
double solve_increasing(const std::function<double(double)>& resid, double lo,
                        double hi) {
  double flo = resid(lo), fhi = resid(hi);
  if (!(flo <= 0.0) || !(fhi >= 0.0)) {
    throw DomainError("root not bracketed");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = resid(mid);
    if (fm <= 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  double a = lo, b = hi, fa = flo, fb = fhi;
  for (int it = 0; it < 8; ++it) {
    if (fb == fa) break;
    const double c = b - fb * (b - a) / (fb - fa);
    if (!(c > 0.0) || !(c < 1.0)) break;
    a = b;
    fa = fb;
    b = c;
    fb = resid(c);
    if (fb == 0.0) break;
  }
  return std::abs(fb) < std::abs(fa) ? b : a;
}

}  // namespace

Equilibrium equilibrium_coverage(const Isotherm& iso, double f_e) {
  if (!(f_e > 0.0)) throw DomainError("equilibrium_coverage: f_e must be positive");
  if (iso.kind() == IsoKind::henry) {
    if (f_e >= 1.0) {
      throw ModelError("Henry has no equilibrium coverage below saturation for f_e >= 1");
    }
    return {f_e, 1.0 / f_e};
  }
  const double cap = coverage_cap(iso);
  if (f_iso(iso, cap) < f_e) {
    throw ModelError("equilibrium_coverage: f_e beyond representable range");
  }
  auto resid = [&](double g) { return f_iso(iso, g) - f_e; };
  const double g_e = solve_increasing(resid, 1e-300, cap);
  return {g_e, 1.0 / g_e};
}

Equilibrium equilibrium_from_prefactor(const Isotherm& iso, double prefactor) {
  if (!(prefactor > 0.0)) {
    throw DomainError("equilibrium_from_prefactor: prefactor must be positive");
  }
  if (iso.kind() == IsoKind::henry) {
    if (std::abs(prefactor - 1.0) > 1e-12) {
      throw ModelError("Henry has gamma_star_inf * f_e = 1 identically");
    }
    throw ModelError("Henry equilibrium is not determined by the prefactor; give f_e");
  }
  // f(g)/g equals 1 at g = 0+ and grows without bound toward saturation,
  // but dips below 1 first when beta_tilde > Q. Bracket on the increasing
  // branch beyond the interior minimum.
  const double bt = iso.beta_tilde();
  double lo = 1e-12;
  if (iso.kind() == IsoKind::frumkin && bt > 1.0) {
    lo = 1.0 - 1.0 / bt;
  } else if (iso.kind() == IsoKind::vdw && bt > 2.0) {
    const double y = 0.5 * (std::sqrt(1.0 + 4.0 * bt) - 1.0);  // 1/(1-g) at the minimum
    lo = 1.0 - 1.0 / y;
  }
  lo = std::max(lo, 1e-12);
  const double cap = coverage_cap(iso);
  auto resid = [&](double g) { return f_iso(iso, g) / g - prefactor; };
  if (resid(lo) > 0.0 || resid(cap) < 0.0) {
    throw ModelError("equilibrium_from_prefactor: no solution on the increasing branch");
  }
  const double g_e = solve_increasing(resid, lo, cap);
  return {g_e, 1.0 / g_e};
}

}  // namespace adsorb
