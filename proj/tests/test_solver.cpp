#include <chrono>
#include <cmath>
#include <random>

#include "adsorb/analytic.hpp"
#include "adsorb/errors.hpp"
#include "adsorb/solver.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace adsorb;

namespace {

DimensionlessParams henry_dp(double ba, double f_e = 0.5) {
  return DimensionlessParams::make(ba, f_e, Isotherm(IsoKind::henry));
}

std::vector<std::size_t> log_sample(std::size_t n, std::size_t count) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(
        std::pow(static_cast<double>(n), (i + 1.0) / count));
    if (idx.empty() || k > idx.back()) idx.push_back(std::min(k, n));
  }
  return idx;
}

}  // namespace

TEST_CASE("build_mesh") {
  const Mesh def = Mesh::default_mixed();
  CHECK(def.steps() == 10360);
  CHECK(def.nodes().front() == 0.0);
  CHECK(def.nodes().back() == doctest::Approx(1000.0));
  const Mesh one = Mesh::build({{1.0, 0.1}});
  CHECK(one.steps() == 10);
  CHECK(one.nodes()[3] == doctest::Approx(0.3));
  CHECK_THROWS_AS(Mesh::build({{1.0, 0.1}, {0.5, 0.1}}), ConfigError);
  CHECK_THROWS_AS(Mesh::build({{1.0, 0.3}}), ConfigError);
  CHECK_THROWS_AS(Mesh::build({{1.0, -0.1}}), ConfigError);
  CHECK_THROWS_AS(Mesh::build({}), ConfigError);
  // strictly increasing nodes
  const Mesh dc = Mesh::default_dc();
  for (std::size_t i = 1; i < dc.nodes().size(); ++i) {
    CHECK(dc.nodes()[i] > dc.nodes()[i - 1]);
  }
  CHECK(def.hash() != dc.hash());
}

TEST_CASE("weights: first panel, partition of unity, linear exactness") {
  // rectangle, diffusion kernel, uniform step: C_{n-1,n} = 2 sqrt(h/pi)
  {
    std::vector<double> nodes;
    const double h = 0.01;
    for (int i = 0; i <= 20; ++i) nodes.push_back(h * i);
    const auto c = weights(Kernel::diffusion(), nodes, 20, Scheme::rectangle);
    CHECK(c[19] == doctest::Approx(2.0 * std::sqrt(h / M_PI)).epsilon(1e-13));
    CHECK(c[20] == 0.0);
  }
  // nonuniform 3-region mesh, both kernels, every n
  const Mesh mesh = Mesh::build({{0.2, 0.02}, {1.0, 0.05}, {3.0, 0.1}});
  const std::vector<double>& nodes = mesh.nodes();
  for (const Kernel& k :
       {Kernel::diffusion(), Kernel::mixed(1.0), Kernel::unit()}) {
    for (std::size_t n = 1; n < nodes.size(); n += 3) {
      const double i1 = k.I1(nodes[n]);
      const double i2 = k.I2(nodes[n]);
      for (const Scheme s : {Scheme::rectangle, Scheme::trapezoid}) {
        const auto c = weights(k, nodes, n, s);
        double sum = 0.0;
        for (double w : c) sum += w;
        CHECK(sum == doctest::Approx(i1).epsilon(1e-12));  // partition of unity
      }
      // trapezoid integrates u(tau) = tau against the kernel exactly:
      // int xi(t_n - tau) tau dtau = I2(t_n)
      const auto c2 = weights(k, nodes, n, Scheme::trapezoid);
      double acc = 0.0;
      for (std::size_t j = 0; j <= n; ++j) acc += c2[j] * nodes[j];
      CHECK(acc == doctest::Approx(i2).epsilon(1e-11));
    }
  }
}

TEST_CASE("weights match an adaptive quadrature of kernel x basis") {
  const Mesh mesh = Mesh::build({{1.0, 0.05}, {3.0, 0.1}, {13.0, 0.125}});
  const std::vector<double>& nodes = mesh.nodes();
  auto hat = [&](std::size_t j) {
    return [&, j](double tau) {
      const double tl = j > 0 ? nodes[j - 1] : 0.0;
      const double tr = j + 1 < nodes.size() ? nodes[j + 1] : nodes[j];
      if (tau <= tl || tau >= tr) return tau == nodes[j] ? 1.0 : 0.0;
      if (tau <= nodes[j]) return (tau - tl) / (nodes[j] - tl);
      return (tr - tau) / (tr - nodes[j]);
    };
  };
  for (const double ba : {0.0, 1.0}) {
    const Kernel k = ba > 0.0 ? Kernel::mixed(ba) : Kernel::diffusion();
    auto xi2s = [&](double s) {
      // xi(s^2) * 2 s, smooth through s = 0
      if (ba > 0.0) return 2.0 * s / ba * erfc_scaled(s / ba);
      return 2.0 / std::sqrt(M_PI);
    };
    for (const std::size_t n : {std::size_t{1}, std::size_t{10}, std::size_t{100}}) {
      const auto rect = weights(k, nodes, n, Scheme::rectangle);
      const auto trap = weights(k, nodes, n, Scheme::trapezoid);
      for (std::size_t j = 0; j <= n; ++j) {
        // rectangle: indicator of (t_j, t_{j+1})
        if (j < n) {
          const double ref = oracles::weight_integral(
              xi2s, [](double) { return 1.0; }, nodes[n], nodes[j], nodes[j + 1]);
          CHECK(rect[j] == doctest::Approx(ref).epsilon(1e-10));
        }
        // trapezoid: hat at t_j over its support clipped to [0, t_n]
        const double lo = j > 0 ? nodes[j - 1] : 0.0;
        const double hi = std::min(nodes[std::min(j + 1, n)], nodes[n]);
        double ref = 0.0;
        if (hi > lo) {
          ref = oracles::weight_integral(xi2s, hat(j), nodes[n], lo, hi);
        }
        CHECK(trap[j] == doctest::Approx(ref).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("stepper stream equals the reference weights") {
  // drive one PECE solve by hand through weights() and compare
  const Mesh mesh = Mesh::build({{0.01, 0.002}, {0.1, 0.01}, {0.6, 0.025}});
  const DimensionlessParams dp = henry_dp(0.8);
  const Trajectory traj = solve(dp, mesh);

  const Kernel k = Kernel::mixed(dp.ba);
  const double conv = dp.ba / (dp.gamma_star_inf * dp.f_e);
  std::vector<double> t(mesh.nodes().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = conv * mesh.nodes()[i];
  std::vector<double> gamma{0.0}, r{dp.gamma_star_inf * dp.f_e};
  auto rhs = [&](double gs) {
    return dp.gamma_star_inf * (dp.f_e - f_iso(dp.iso, gs * dp.g_e));
  };
  for (std::size_t n = 1; n < t.size(); ++n) {
    const auto c1 = weights(k, t, n, Scheme::rectangle);
    const auto c2 = weights(k, t, n, Scheme::trapezoid);
    double pred = 0.0;
    for (std::size_t j = 0; j < n; ++j) pred += c1[j] * r[j];
    double corr = c2[n] * rhs(pred);
    for (std::size_t j = 0; j < n; ++j) corr += c2[j] * r[j];
    gamma.push_back(corr);
    r.push_back(rhs(corr));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(traj.gamma_star[i] == doctest::Approx(gamma[i]).epsilon(5e-12));
  }
}

TEST_CASE("solve: henry vs analytic on the default mesh") {
  const Mesh mesh = Mesh::default_mixed();
  const DimensionlessParams dp = henry_dp(1.0);
  const Trajectory traj = solve(dp, mesh);
  CHECK(traj.gamma_star.front() == 0.0);
  CHECK(traj.clamp_count == 0);
  double worst = 0.0;
  for (const std::size_t n : log_sample(mesh.steps(), 40)) {
    const double ref = henry_mixed(traj.t_tilde[n], dp.ba);
    worst = std::max(worst, std::abs(traj.gamma_star[n] - ref) / ref);
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("solve: ba = 0 reduces to the dc solution") {
  const DimensionlessParams dp = henry_dp(0.0);
  const Trajectory traj = solve(dp, Mesh::default_dc());
  CHECK(traj.mesh_in_tilde);
  CHECK(std::isnan(traj.t_star[1]));
  double worst = 0.0;
  for (std::size_t n = 1; n < traj.size(); ++n) {
    const double ref = henry_dc(traj.t_tilde[n]);
    worst = std::max(worst, std::abs(traj.gamma_star[n] - ref) / ref);
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("solve: langmuir equilibrates and respects the envelopes") {
  const DimensionlessParams dp =
      DimensionlessParams::make(1.0, 1.0, Isotherm(IsoKind::langmuir));
  const Trajectory traj = solve(dp, Mesh::default_mixed());
  CHECK(traj.formulation == Formulation::exp_transform);
  CHECK(std::abs(traj.gamma_star.back() - 1.0) < 1e-2);
  // structurally below saturation
  for (double g : traj.gamma_star) CHECK(g < dp.gamma_star_inf);
  // quick sandwich check on a subsample
  for (const std::size_t n : log_sample(traj.size() - 1, 25)) {
    const double ts = traj.t_star[n];
    CHECK(traj.gamma_star[n] >= henry_mixed(dp.ba * ts, dp.ba) - 2e-3);
    CHECK(traj.gamma_star[n] <= barrier_control(ts) + 2e-3);
  }
}

TEST_CASE("solve: initial slope in t* is 1") {
  for (const double ba : {0.01, 1.0, 100.0}) {
    const Trajectory traj = solve(henry_dp(ba), Mesh::default_mixed());
    CHECK(std::abs(traj.gamma_star[1] / traj.t_star[1] - 1.0) < 0.05);
  }
  const DimensionlessParams dpl =
      DimensionlessParams::make(2.0, 5.0, Isotherm(IsoKind::langmuir));
  const Trajectory traj = solve(dpl, Mesh::default_mixed());
  CHECK(std::abs(traj.gamma_star[1] / traj.t_star[1] - 1.0) < 0.05);
}

TEST_CASE("solve: equilibration window and dc-end values at t* = 1000") {
  // ba* in {1, 10, 100}: equilibrium is reached by t* = 1000
  for (const double ba : {1.0, 10.0, 100.0}) {
    const Trajectory traj = solve(henry_dp(ba), Mesh::default_mixed());
    CHECK(traj.gamma_star.back() >= 0.98);
    CHECK(traj.gamma_star.back() <= 1.001);
  }
  // the diffusion-controlled end has not equilibrated; values pinned to the
  // exact solution instead
  {
    const Trajectory traj = solve(henry_dp(0.01), Mesh::default_mixed());
    CHECK(traj.gamma_star.back() ==
          doctest::Approx(0.829283235035148087).epsilon(2e-3));
  }
  {
    const Trajectory traj = solve(henry_dp(0.1), Mesh::default_mixed());
    CHECK(traj.gamma_star.back() ==
          doctest::Approx(0.943804102755780967).epsilon(2e-3));
  }
}

TEST_CASE("solve: formulation validation") {
  const DimensionlessParams langmuir =
      DimensionlessParams::make(1.0, 1.0, Isotherm(IsoKind::langmuir));
  const DimensionlessParams volmer =
      DimensionlessParams::make(1.0, 1.0, Isotherm(IsoKind::volmer));
  const DimensionlessParams langmuir_dc =
      DimensionlessParams::make(0.0, 1.0, Isotherm(IsoKind::langmuir));
  const Mesh mesh = Mesh::build({{0.1, 0.01}});
  CHECK_THROWS_AS(solve(langmuir, mesh, FormulationChoice::wt), ConfigError);
  CHECK_THROWS_AS(solve(volmer, mesh, FormulationChoice::exp_transform), ConfigError);
  CHECK_THROWS_AS(solve(langmuir_dc, mesh, FormulationChoice::exp_transform), ConfigError);
  // ba = 0 Langmuir solves through the classical diffusion-kernel form
  const Trajectory traj = solve(langmuir_dc, mesh);
  CHECK(traj.formulation == Formulation::wt);
}

TEST_CASE("solve: PECE converges at second order on uniform meshes") {
  const DimensionlessParams dp = henry_dp(1.0);
  double prev_err = 0.0;
  for (const double h : {0.02, 0.01, 0.005}) {
    const Mesh mesh = Mesh::build({{2.0, h}});
    const Trajectory traj = solve(dp, mesh);
    double err = 0.0;
    for (std::size_t n = 1; n < traj.size(); ++n) {
      err = std::max(err,
                     std::abs(traj.gamma_star[n] - henry_mixed(traj.t_tilde[n], dp.ba)));
    }
    if (prev_err > 0.0) CHECK(prev_err / err >= 3.5);
    prev_err = err;
  }
}

TEST_CASE("solve: van der Waals runs bounded with the wt path") {
  const DimensionlessParams dp =
      DimensionlessParams::make_from_prefactor(10.0, 5.0, Isotherm(IsoKind::vdw, 2.0));
  const Trajectory traj = solve(dp, Mesh::default_mixed());
  CHECK(traj.formulation == Formulation::wt);
  for (double g : traj.gamma_star) {
    CHECK(g >= 0.0);
    CHECK(g <= dp.gamma_star_inf * (1.0 + 1e-9));
  }
  CHECK(std::abs(traj.gamma_star.back() - 1.0) < 2e-2);
  // pressure column is consistent with the equation of state
  for (const std::size_t n : log_sample(traj.size() - 1, 10)) {
    CHECK(traj.pressure[n] ==
          doctest::Approx(surface_pressure_j(dp.iso, traj.coverage[n])).epsilon(1e-12));
  }
}

TEST_CASE("solve: subsurface concentration approaches c_e") {
  const DimensionlessParams dp =
      DimensionlessParams::make(1.0, 1.0, Isotherm(IsoKind::langmuir));
  const Trajectory traj = solve(dp, Mesh::default_mixed());
  const std::vector<double> cs = subsurface_ratio(traj);
  CHECK(cs.front() == doctest::Approx(1.0).epsilon(1e-2));  // barrier-control start
  CHECK(cs.back() == doctest::Approx(1.0).epsilon(1e-2));   // equilibrium
}

TEST_CASE("solve: wall time scales no worse than quadratically") {
  const DimensionlessParams dp = henry_dp(1.0);
  auto timed = [&](std::size_t n_steps) {
    const Mesh mesh = Mesh::build({{1.0, 1.0 / static_cast<double>(n_steps)}});
    const auto t0 = std::chrono::steady_clock::now();
    solve(dp, mesh);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
  };
  timed(500);  // warm up
  const double t1 = timed(2000);
  const double t2 = timed(4000);
  const double t3 = timed(8000);
  // quadratic scaling doubles cost by 4x per doubling; allow generous slack
  CHECK(t3 / std::max(t2, 1e-9) < 10.0);
  CHECK(t2 / std::max(t1, 1e-9) < 10.0);
}
