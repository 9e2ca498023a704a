#include <cmath>
#include <random>

#include "adsorb/errors.hpp"
#include "adsorb/isotherm.hpp"
#include "doctest.h"

using namespace adsorb;

namespace {

Isotherm make(IsoKind k, double bt = 0.0) { return Isotherm(k, bt); }

const IsoKind kAll[] = {IsoKind::henry, IsoKind::langmuir, IsoKind::frumkin,
                        IsoKind::volmer, IsoKind::vdw};

// admissible beta_tilde for property sweeps
double bt_for(IsoKind k, double u) {
  if (k == IsoKind::frumkin) return 3.9 * u;
  if (k == IsoKind::vdw) return 6.6 * u;
  return 0.0;
}

}  // namespace

TEST_CASE("isotherm construction enforces validity ranges") {
  CHECK_THROWS_AS(Isotherm(IsoKind::frumkin, 4.0), ModelError);
  CHECK_THROWS_AS(Isotherm(IsoKind::vdw, 6.75), ModelError);
  CHECK_THROWS_AS(Isotherm(IsoKind::henry, 0.5), ModelError);
  CHECK_THROWS_AS(Isotherm(IsoKind::langmuir, 0.1), ModelError);
  CHECK_THROWS_AS(Isotherm(IsoKind::volmer, 1.0), ModelError);
  CHECK_THROWS_AS(Isotherm(IsoKind::frumkin, -0.1), ModelError);
  CHECK_NOTHROW(Isotherm(IsoKind::frumkin, 3.999));
  CHECK_NOTHROW(Isotherm(IsoKind::vdw, 6.749));
}

TEST_CASE("parse_iso_kind") {
  CHECK(parse_iso_kind("henry") == IsoKind::henry);
  CHECK(parse_iso_kind("LANGMUIR") == IsoKind::langmuir);
  CHECK(parse_iso_kind("Frumkin") == IsoKind::frumkin);
  CHECK(parse_iso_kind("volmer") == IsoKind::volmer);
  CHECK(parse_iso_kind("vdW") == IsoKind::vdw);
  CHECK_THROWS_AS(parse_iso_kind("freundlich"), ConfigError);
}

TEST_CASE("phi") {
  CHECK(phi(make(IsoKind::henry), 0.7) == 1.0);
  CHECK(phi(make(IsoKind::langmuir), 0.25) == doctest::Approx(0.75));
  CHECK(phi(make(IsoKind::frumkin, 2.0), 1.0) == doctest::Approx(0.0));
  CHECK(phi(make(IsoKind::volmer), 0.9) == 1.0);
  CHECK(phi(make(IsoKind::vdw, 1.0), 0.9) == 1.0);
}

TEST_CASE("f_iso spot values") {
  CHECK(f_iso(make(IsoKind::henry), 0.5) == doctest::Approx(0.5));
  CHECK(f_iso(make(IsoKind::langmuir), 0.5) == doctest::Approx(1.0));
  CHECK(f_iso(make(IsoKind::frumkin, 2.0), 0.5) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(f_iso(make(IsoKind::volmer), 0.5) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(f_iso(make(IsoKind::vdw, 2.0), 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  for (IsoKind k : kAll) CHECK(f_iso(make(k, bt_for(k, 0.5)), 0.0) == 0.0);
  CHECK_THROWS_AS(f_iso(make(IsoKind::langmuir), 1.0), DomainError);
  CHECK_THROWS_AS(f_iso(make(IsoKind::volmer), 0.9999), DomainError);
}

TEST_CASE("f_iso strictly increasing under the validity bounds") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (IsoKind k : kAll) {
    for (int rep = 0; rep < 3; ++rep) {
      const Isotherm iso = make(k, bt_for(k, uni(rng)));
      const double hi = std::min(coverage_cap(iso), 1.0 - 1e-9);
      double prev = 0.0;
      const int n = 10000;
      for (int i = 1; i <= n; ++i) {
        const double g = hi * i / n;
        const double v = f_iso(iso, g);
        CHECK(v > prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("surface_pressure_j") {
  CHECK(surface_pressure_j(make(IsoKind::henry), 0.3) == doctest::Approx(0.3));
  CHECK(surface_pressure_j(make(IsoKind::volmer), 0.5) == doctest::Approx(1.0));
  CHECK(surface_pressure_j(make(IsoKind::vdw, 4.0), 0.5) ==
        doctest::Approx(1.0 - 4.0 * 0.25 / 2.0).epsilon(1e-14));
  CHECK(surface_pressure_j(make(IsoKind::langmuir), 0.0) == 0.0);
  CHECK_THROWS_AS(surface_pressure_j(make(IsoKind::langmuir), 1.0), DomainError);
  // nonnegative under the validity bounds
  for (IsoKind k : kAll) {
    const Isotherm iso = make(k, bt_for(k, 0.95));
    for (int i = 0; i <= 500; ++i) {
      const double g = 0.95 * i / 500.0;
      CHECK(surface_pressure_j(iso, g) >= 0.0);
    }
  }
}

TEST_CASE("pressure derivative is Gibbs-consistent: dPi/dg = g dlnf/dg") {
  const double dg = 1e-6;
  for (IsoKind k : kAll) {
    const Isotherm iso = make(k, bt_for(k, 0.5));
    for (const double g : {0.05, 0.2, 0.4, 0.6}) {
      const double dpi =
          (surface_pressure_j(iso, g + dg) - surface_pressure_j(iso, g - dg)) /
          (2.0 * dg);
      const double dlnf =
          (std::log(f_iso(iso, g + dg)) - std::log(f_iso(iso, g - dg))) /
          (2.0 * dg);
      CHECK(dpi == doctest::Approx(g * dlnf).epsilon(1e-6));
    }
  }
  // Henry: Pi~ = g identically, so dPi~/dg = 1 exactly
  for (const double g : {0.1, 0.3, 0.5, 0.9}) {
    CHECK(surface_pressure_j(make(IsoKind::henry), g) == g);
  }
}

TEST_CASE("q_constant") {
  CHECK(q_constant(make(IsoKind::henry)) == 0);
  CHECK(q_constant(make(IsoKind::langmuir)) == 1);
  CHECK(q_constant(make(IsoKind::frumkin, 1.0)) == 1);
  CHECK(q_constant(make(IsoKind::volmer)) == 2);
  CHECK(q_constant(make(IsoKind::vdw, 2.0)) == 2);
}

TEST_CASE("taylor_f2") {
  for (IsoKind k : kAll) CHECK(taylor_f2(make(k, bt_for(k, 0.3)), 0.0) == 0.0);
  CHECK(taylor_f2(make(IsoKind::langmuir), 0.1) == doctest::Approx(0.11));
  CHECK(f_iso(make(IsoKind::langmuir), 0.1) == doctest::Approx(0.1 / 0.9));
  // Frumkin at beta_tilde = 1: Q - bt = 0, two-term value is g itself
  CHECK(taylor_f2(make(IsoKind::frumkin, 1.0), 0.1) == doctest::Approx(0.1));
  // Henry: taylor_f2 equals f_iso exactly
  for (const double g : {0.1, 0.5, 0.9}) {
    CHECK(taylor_f2(make(IsoKind::henry), g) == f_iso(make(IsoKind::henry), g));
  }
}

TEST_CASE("f_iso - taylor_f2 is O(g^3): cube scaling of the remainder") {
  for (IsoKind k : kAll) {
    for (const double u : {0.0, 0.4, 0.8}) {
      const Isotherm iso = make(k, bt_for(k, u));
      const double e1 = std::abs(f_iso(iso, 0.01) - taylor_f2(iso, 0.01));
      const double e2 = std::abs(f_iso(iso, 0.02) - taylor_f2(iso, 0.02));
      if (k == IsoKind::henry) {
        CHECK(e1 == 0.0);
        CHECK(e2 == 0.0);
        continue;
      }
      const double ratio = e2 / e1;
      CHECK(ratio > 6.0);
      CHECK(ratio < 10.0);
    }
  }
}

TEST_CASE("equilibrium_coverage") {
  CHECK(equilibrium_coverage(make(IsoKind::henry), 0.5).g_e == doctest::Approx(0.5));
  CHECK(equilibrium_coverage(make(IsoKind::langmuir), 1.0).g_e ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(equilibrium_coverage(make(IsoKind::volmer), 10.0).g_e ==
        doctest::Approx(0.635771334693451051).epsilon(1e-12));
  CHECK_THROWS_AS(equilibrium_coverage(make(IsoKind::henry), 1.0), ModelError);
  CHECK_THROWS_AS(equilibrium_coverage(make(IsoKind::henry), -0.5), DomainError);

  // residual and round-trip identity
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (IsoKind k : kAll) {
    for (int rep = 0; rep < 8; ++rep) {
      const Isotherm iso = make(k, bt_for(k, uni(rng)));
      double f_e = std::pow(10.0, -2.0 + 4.0 * uni(rng));
      if (k == IsoKind::henry) f_e = std::min(f_e, 0.99);
      const Equilibrium eq = equilibrium_coverage(iso, f_e);
      CHECK(eq.g_e > 0.0);
      CHECK(eq.g_e < 1.0);
      CHECK(eq.gamma_star_inf == doctest::Approx(1.0 / eq.g_e));
      CHECK(f_iso(iso, eq.g_e) == doctest::Approx(f_e).epsilon(1e-10));
    }
  }

  // independent plain-bisection oracle for the Volmer example
  {
    const Isotherm iso = make(IsoKind::volmer);
    double lo = 1e-12, hi = 0.99;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (f_iso(iso, mid) < 10.0 ? lo : hi) = mid;
    }
    CHECK(equilibrium_coverage(iso, 10.0).g_e ==
          doctest::Approx(0.5 * (lo + hi)).epsilon(1e-12));
  }
}

TEST_CASE("equilibrium_from_prefactor: caption values") {
  // gamma_star_inf for vdW at prefactor 5, beta_tilde 0/2/4
  CHECK(equilibrium_from_prefactor(make(IsoKind::vdw, 0.0), 5.0).gamma_star_inf ==
        doctest::Approx(2.05881082182).epsilon(1e-10));
  CHECK(equilibrium_from_prefactor(make(IsoKind::vdw, 2.0), 5.0).gamma_star_inf ==
        doctest::Approx(1.53781347947).epsilon(1e-10));
  CHECK(equilibrium_from_prefactor(make(IsoKind::vdw, 4.0), 5.0).gamma_star_inf ==
        doctest::Approx(1.31039376156).epsilon(1e-10));
  // and prefactor 1.2
  CHECK(equilibrium_from_prefactor(make(IsoKind::vdw, 0.0), 1.2).gamma_star_inf ==
        doctest::Approx(11.7288693301).epsilon(1e-10));
  CHECK(equilibrium_from_prefactor(make(IsoKind::vdw, 2.0), 1.2).gamma_star_inf ==
        doctest::Approx(3.35571819718).epsilon(1e-10));
  CHECK(equilibrium_from_prefactor(make(IsoKind::vdw, 4.0), 1.2).gamma_star_inf ==
        doctest::Approx(1.58506174648).epsilon(1e-10));
  // Langmuir closed form: gamma_star_inf = C/(C-1)
  CHECK(equilibrium_from_prefactor(make(IsoKind::langmuir), 11.0).gamma_star_inf ==
        doctest::Approx(1.1).epsilon(1e-12));
  CHECK_THROWS_AS(equilibrium_from_prefactor(make(IsoKind::henry), 1.0), ModelError);
  CHECK_THROWS_AS(equilibrium_from_prefactor(make(IsoKind::langmuir), 0.5), ModelError);
}
