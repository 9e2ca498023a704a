#ifndef ADSORB_SOLVER_HPP_
#define ADSORB_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "adsorb/kernel.hpp"
#include "adsorb/mesh.hpp"
#include "adsorb/scaling.hpp"
#include "adsorb/trajectory.hpp"

namespace adsorb {

enum class Scheme { rectangle, trapezoid };

// Quadrature weights C_{j,n}, j = 0..n, for int_0^{t_n} xi(t_n - tau)
// phi_j(tau) dtau on the given node set. Rectangle uses left samples
// (C_{n,n} = 0, explicit); trapezoid uses hat functions (implicit in the
// j = n sample). All panel integrals come from the closed forms I1/I2,
// including the singular last panel. Reference implementation; the
// steppers below evaluate the same formulas in streaming form.
std::vector<double> weights(const Kernel& kernel,
                            const std::vector<double>& nodes, std::size_t n,
                            Scheme scheme);

struct SolveOptions {
  int corrector_iterations = 0;  // extra fixed-point passes after PECE
};

enum class FormulationChoice { automatic, wt, exp_transform };

namespace detail {

// Solver-time grid: mesh nodes scaled to t~, with per-region uniform steps
// kept exact (same-region time differences are formed as integer multiples
// of the region step and served from per-region I1/I2 tables).
struct Grid {
  std::vector<double> T;              // t~ nodes
  std::vector<double> h;              // h[j] = T[j] - T[j-1]
  std::vector<std::uint32_t> span_of; // span index per node (node 0 -> 0)
  struct Span {
    std::size_t first;
    std::size_t count;
    double step;
  };
  std::vector<Span> spans;

  static Grid make(const Mesh& mesh, double scale);
};

// Per-span lookup tables I1(delta*step), I2(delta*step).
struct KernelTable {
  std::vector<std::vector<double>> i1, i2;
  KernelTable() = default;
  KernelTable(const Kernel& k, const Grid& g);
};

}  // namespace detail

// One PECE step of the generalized Ward-Tordai form (Phi == 1 models, or
// ba = 0 with the diffusion kernel): predictor on rectangle weights,
// one trapezoid correction with the predicted endpoint sample.
class WtStepper {
 public:
  WtStepper(const DimensionlessParams& dp, const Mesh& mesh,
            SolveOptions opts = {});

  // Advance to node n (must be called with n = 1, 2, ...). Returns Gamma*_n.
  double step(std::size_t n);

  const detail::Grid& grid() const { return grid_; }
  const std::vector<double>& gamma_star() const { return gamma_; }
  long clamp_count() const { return clamps_; }
  bool mesh_in_tilde() const { return mesh_in_tilde_; }

 private:
  double rhs(double gamma);  // R(Gamma*) = Gsi (f_e - f(g)), clamping g

  DimensionlessParams dp_;
  detail::Grid grid_;
  Kernel kernel_;
  detail::KernelTable table_;
  SolveOptions opts_;
  std::vector<double> gamma_, r_;
  long clamps_ = 0;
  bool mesh_in_tilde_;
};

// One PECE step of the exponential-transformed formulation for
// Langmuir/Frumkin with ba > 0:
//   F = (Gsi J1[f_e - f(g)] - J^{1/2}[Gamma*]) / ba,
//   Gamma* = Gsi (1 - exp(-F / Gsi)).
class ExpStepper {
 public:
  ExpStepper(const DimensionlessParams& dp, const Mesh& mesh,
             SolveOptions opts = {});

  double step(std::size_t n);

  const detail::Grid& grid() const { return grid_; }
  const std::vector<double>& gamma_star() const { return gamma_; }
  long clamp_count() const { return clamps_; }

 private:
  double desorption_residual(double gamma);  // f_e - f(g), clamping g

  DimensionlessParams dp_;
  detail::Grid grid_;
  Kernel diff_;
  detail::KernelTable table_;
  SolveOptions opts_;
  std::vector<double> gamma_, u1_;
  double s1_pred_ = 0.0;  // cumulative rectangle J1 over u1
  double s1_corr_ = 0.0;  // cumulative trapezoid J1 over u1 (complete panels)
  long clamps_ = 0;
};

// Full run. `automatic` picks the exponential form for Langmuir/Frumkin
// with ba > 0 and the Ward-Tordai form otherwise (ba = 0 always solves the
// classical equation with the diffusion kernel; the mesh is then read in
// t~ units). Initial slope in t* is 1 by construction.
Trajectory solve(const DimensionlessParams& dp, const Mesh& mesh,
                 FormulationChoice choice = FormulationChoice::automatic,
                 SolveOptions opts = {});

}  // namespace adsorb

#endif  // ADSORB_SOLVER_HPP_
