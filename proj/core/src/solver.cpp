#include "adsorb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adsorb/errors.hpp"
#include "adsorb/isotherm.hpp"

namespace adsorb {

const char* formulation_name(Formulation f) {
  switch (f) {
    case Formulation::wt: return "wt";
    case Formulation::exp_transform: return "exp";
  }
  return "?";
}

std::vector<double> weights(const Kernel& kernel,
                            const std::vector<double>& nodes, std::size_t n,
                            Scheme scheme) {
  if (n < 1 || n >= nodes.size()) throw DomainError("weights: node index out of range");
  std::vector<double> i1(n + 1), i2(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    kernel.eval(nodes[n] - nodes[j], &i1[j], &i2[j]);
  }
  std::vector<double> c(n + 1, 0.0);
  if (scheme == Scheme::rectangle) {
    for (std::size_t j = 0; j < n; ++j) c[j] = i1[j] - i1[j + 1];
    return c;
  }
  auto h = [&](std::size_t j) { return nodes[j] - nodes[j - 1]; };
  if (n == 1) {
    c[0] = i1[0] + (i2[1] - i2[0]) / h(1);
    c[1] = i2[0] / h(1);
    return c;
  }
  c[0] = i1[0] + (i2[1] - i2[0]) / h(1);
  for (std::size_t j = 1; j < n; ++j) {
    c[j] = (i2[j - 1] - i2[j]) / h(j) - (i2[j] - i2[j + 1]) / h(j + 1);
  }
  c[n] = i2[n - 1] / h(n);
  return c;
}

namespace detail {

Grid Grid::make(const Mesh& mesh, double scale) {
  Grid g;
  const std::vector<double>& nodes = mesh.nodes();
  g.T.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) g.T[i] = scale * nodes[i];
  g.h.assign(nodes.size(), 0.0);
  g.span_of.assign(nodes.size(), 0);
  for (const Mesh::Span& s : mesh.spans()) {
    const double step = scale * s.step;
    g.spans.push_back({s.first, s.count, step});
    for (std::size_t j = s.first; j < s.first + s.count; ++j) {
      g.h[j] = step;
      g.span_of[j] = static_cast<std::uint32_t>(g.spans.size() - 1);
    }
  }
  return g;
}

KernelTable::KernelTable(const Kernel& k, const Grid& g) {
  i1.resize(g.spans.size());
  i2.resize(g.spans.size());
  for (std::size_t s = 0; s < g.spans.size(); ++s) {
    const std::size_t m = g.spans[s].count + 1;
    i1[s].resize(m + 1);
    i2[s].resize(m + 1);
    for (std::size_t d = 0; d <= m; ++d) {
      k.eval(static_cast<double>(d) * g.spans[s].step, &i1[s][d], &i2[s][d]);
    }
  }
}

namespace {

// Streams panels p = 1..n-1 of the convolution history for node n,
// accumulating the rectangle (predictor) and trapezoid (corrector) sums.
// Same-region distances are integer multiples of the region step and come
// from the table; earlier-region distances are evaluated fresh.
// On return: pred = sum_{p<=n-1} (I1(a_{p-1}) - I1(a_p)) u[p-1]
//            corr = I1(a_0) u[0] + sum_{p<=n-1} (I2(a_{p-1})-I2(a_p))/h_p (u[p]-u[p-1])
//            i1_last = I1(a_{n-1}), i2_last = I2(a_{n-1})  (a_{n-1} = h_n)
struct StreamSums {
  double pred, corr, i1_last, i2_last;
};

StreamSums stream_history(const Grid& g, const Kernel& k, const KernelTable& tab,
                          const std::vector<double>& u, std::size_t n) {
  const std::uint32_t sn = g.span_of[n];
  const Grid::Span& span = g.spans[sn];
  const std::size_t lattice_lo = span.first - 1;  // boundary node is on the lattice
  const std::vector<double>& t1 = tab.i1[sn];
  const std::vector<double>& t2 = tab.i2[sn];

  double i1_prev = 0.0, i2_prev = 0.0;
  if (0 >= lattice_lo) {
    i1_prev = t1[n];
    i2_prev = t2[n];
  } else {
    k.eval(g.T[n] - g.T[0], &i1_prev, &i2_prev);
  }
  double pred = 0.0;
  double corr = i1_prev * u[0];
  const std::size_t fresh_end = std::min(lattice_lo, n);
  std::size_t p = 1;
  for (; p < fresh_end; ++p) {
    double i1 = 0.0, i2 = 0.0;
    k.eval(g.T[n] - g.T[p], &i1, &i2);
    pred += (i1_prev - i1) * u[p - 1];
    corr += (i2_prev - i2) / g.h[p] * (u[p] - u[p - 1]);
    i1_prev = i1;
    i2_prev = i2;
  }
  for (; p < n; ++p) {
    const std::size_t d = n - p;
    const double i1 = t1[d];
    const double i2 = t2[d];
    pred += (i1_prev - i1) * u[p - 1];
    corr += (i2_prev - i2) / g.h[p] * (u[p] - u[p - 1]);
    i1_prev = i1;
    i2_prev = i2;
  }
  return {pred, corr, i1_prev, i2_prev};
}

double clamp_coverage(double g, double cap, long* clamps) {
  if (g > cap) {
    ++*clamps;
    return cap;
  }
  if (g < 0.0) {
    ++*clamps;
    return 0.0;
  }
  return g;
}

}  // namespace

}  // namespace detail

WtStepper::WtStepper(const DimensionlessParams& dp, const Mesh& mesh,
                     SolveOptions opts)
    : dp_(dp),
      grid_(detail::Grid::make(
          mesh, dp.ba > 0.0 ? dp.ba / (dp.gamma_star_inf * dp.f_e) : 1.0)),
      kernel_(dp.ba > 0.0 ? Kernel::mixed(dp.ba) : Kernel::diffusion()),
      table_(kernel_, grid_),
      opts_(opts),
      mesh_in_tilde_(dp.ba == 0.0) {
  if (dp.ba > 0.0 && !dp.iso.phi_is_unity()) {
    throw ConfigError("wt formulation needs Phi == 1 (or ba = 0)");
  }
  gamma_.reserve(grid_.T.size());
  r_.reserve(grid_.T.size());
  gamma_.push_back(0.0);
  r_.push_back(dp_.gamma_star_inf * dp_.f_e);
}

double WtStepper::rhs(double gamma) {
  const double g =
      detail::clamp_coverage(gamma * dp_.g_e, coverage_cap(dp_.iso), &clamps_);
  return dp_.gamma_star_inf * (dp_.f_e - f_iso(dp_.iso, g));
}

double WtStepper::step(std::size_t n) {
  if (n != gamma_.size() || n >= grid_.T.size()) {
    throw DomainError("WtStepper::step: nodes must be advanced in order");
  }
  const auto s = detail::stream_history(grid_, kernel_, table_, r_, n);
  const double predicted = s.pred + s.i1_last * r_[n - 1];
  double r_end = rhs(predicted);
  double gamma_n = s.corr + s.i2_last / grid_.h[n] * (r_end - r_[n - 1]);
  for (int it = 0; it < opts_.corrector_iterations; ++it) {
    r_end = rhs(gamma_n);
    gamma_n = s.corr + s.i2_last / grid_.h[n] * (r_end - r_[n - 1]);
  }
  gamma_.push_back(gamma_n);
  r_.push_back(rhs(gamma_n));
  return gamma_n;
}

ExpStepper::ExpStepper(const DimensionlessParams& dp, const Mesh& mesh,
                       SolveOptions opts)
    : dp_(dp),
      grid_(detail::Grid::make(mesh, dp.ba / (dp.gamma_star_inf * dp.f_e))),
      diff_(Kernel::diffusion()),
      table_(diff_, grid_),
      opts_(opts) {
  if (!(dp.ba > 0.0)) {
    throw ConfigError("exp formulation needs ba > 0 (use wt at ba = 0)");
  }
  if (dp.iso.phi_is_unity()) {
    throw ConfigError("exp formulation applies to Langmuir/Frumkin only");
  }
  gamma_.reserve(grid_.T.size());
  u1_.reserve(grid_.T.size());
  gamma_.push_back(0.0);
  u1_.push_back(dp_.f_e);
}

double ExpStepper::desorption_residual(double gamma) {
  const double g =
      detail::clamp_coverage(gamma * dp_.g_e, coverage_cap(dp_.iso), &clamps_);
  return dp_.f_e - f_iso(dp_.iso, g);
}

double ExpStepper::step(std::size_t n) {
  if (n != gamma_.size() || n >= grid_.T.size()) {
    throw DomainError("ExpStepper::step: nodes must be advanced in order");
  }
  const double gsi = dp_.gamma_star_inf;
  const double h_n = grid_.h[n];
  // half-order history of Gamma*
  const auto s = detail::stream_history(grid_, diff_, table_, gamma_, n);
  // predictor: rectangle J1 and rectangle J^{1/2}
  const double s1p = s1_pred_ + h_n * u1_[n - 1];
  const double s2p = s.pred + s.i1_last * gamma_[n - 1];
  const double f_pred = (gsi * s1p - s2p) / dp_.ba;
  const double predicted = -gsi * std::expm1(-f_pred / gsi);

  auto correct = [&](double gamma_end) {
    const double u_end = desorption_residual(gamma_end);
    const double s1c = s1_corr_ + 0.5 * h_n * (u1_[n - 1] + u_end);
    const double s2c = s.corr + s.i2_last / h_n * (gamma_end - gamma_[n - 1]);
    const double f_corr = (gsi * s1c - s2c) / dp_.ba;
    return -gsi * std::expm1(-f_corr / gsi);
  };
  double gamma_n = correct(predicted);
  for (int it = 0; it < opts_.corrector_iterations; ++it) gamma_n = correct(gamma_n);

  gamma_.push_back(gamma_n);
  u1_.push_back(desorption_residual(gamma_n));
  s1_pred_ = s1p;
  s1_corr_ += 0.5 * h_n * (u1_[n - 1] + u1_[n]);
  return gamma_n;
}

namespace {

Formulation resolve_formulation(const DimensionlessParams& dp,
                                FormulationChoice choice) {
  const bool exp_applicable = !dp.iso.phi_is_unity() && dp.ba > 0.0;
  switch (choice) {
    case FormulationChoice::automatic:
      return exp_applicable ? Formulation::exp_transform : Formulation::wt;
    case FormulationChoice::wt:
      if (!dp.iso.phi_is_unity() && dp.ba > 0.0) {
        throw ConfigError("wt formulation is invalid for Langmuir/Frumkin at ba > 0");
      }
      return Formulation::wt;
    case FormulationChoice::exp_transform:
      if (!exp_applicable) {
        throw ConfigError("exp formulation requires Langmuir/Frumkin and ba > 0");
      }
      return Formulation::exp_transform;
  }
  return Formulation::wt;
}

}  // namespace

Trajectory solve(const DimensionlessParams& dp, const Mesh& mesh,
                 FormulationChoice choice, SolveOptions opts) {
  const Formulation form = resolve_formulation(dp, choice);
  Trajectory traj(dp);
  traj.formulation = form;
  traj.mesh_hash = mesh.hash();
  traj.mesh_in_tilde = dp.ba == 0.0;

  const std::size_t n_nodes = mesh.nodes().size();
  if (form == Formulation::wt) {
    WtStepper st(dp, mesh, opts);
    for (std::size_t n = 1; n < n_nodes; ++n) st.step(n);
    traj.gamma_star = st.gamma_star();
    traj.t_tilde = st.grid().T;
    traj.clamp_count = st.clamp_count();
  } else {
    ExpStepper st(dp, mesh, opts);
    for (std::size_t n = 1; n < n_nodes; ++n) st.step(n);
    traj.gamma_star = st.gamma_star();
    traj.t_tilde = st.grid().T;
    traj.clamp_count = st.clamp_count();
  }

  traj.t_star.resize(n_nodes);
  traj.coverage.resize(n_nodes);
  traj.pressure.resize(n_nodes);
  const double nan = std::nan("");
  const double cap = coverage_cap(dp.iso);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    traj.t_star[i] = traj.mesh_in_tilde ? nan : mesh.nodes()[i];
    const double gamma = traj.gamma_star[i];
    if (!std::isfinite(gamma)) {
      throw AccuracyError("solve: non-finite adsorption value produced", gamma,
                          std::numeric_limits<double>::infinity());
    }
    const double g = std::clamp(gamma * dp.g_e, 0.0, cap);
    traj.coverage[i] = g;
    traj.pressure[i] = surface_pressure_j(dp.iso, g);
  }
  return traj;
}

}  // namespace adsorb
