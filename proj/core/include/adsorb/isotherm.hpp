#ifndef ADSORB_ISOTHERM_HPP_
#define ADSORB_ISOTHERM_HPP_

#include <string>
#include <string_view>

namespace adsorb {

enum class IsoKind { henry, langmuir, frumkin, volmer, vdw };

// Kinetic model: kind plus the dimensionless interaction parameter
// beta_tilde = 2 beta Gamma_inf / (kT). Construction enforces the validity
// ranges: beta_tilde = 0 for Henry/Langmuir/Volmer, beta_tilde < 4 for
// Frumkin and < 6.75 for van der Waals (uniqueness of the equilibrium;
// beyond these the model predicts negative surface elasticity).
class Isotherm {
 public:
  explicit Isotherm(IsoKind kind, double beta_tilde = 0.0);

  IsoKind kind() const { return kind_; }
  double beta_tilde() const { return beta_tilde_; }

  // True for Henry/Volmer/van der Waals (Phi == 1), i.e. the kinetic factor
  // is linear in the composite-operator sense.
  bool phi_is_unity() const {
    return kind_ != IsoKind::langmuir && kind_ != IsoKind::frumkin;
  }

  std::string name() const;

 private:
  IsoKind kind_;
  double beta_tilde_;
};

// Parse "henry" / "langmuir" / "frumkin" / "volmer" / "vdw", case-insensitive.
IsoKind parse_iso_kind(std::string_view s);

// Kinetic factor Phi at coverage g: 1, or 1 - g for Langmuir/Frumkin.
double phi(const Isotherm& iso, double g);

// Dimensionless desorption function f in coverage form, g in [0, 1).
//   Henry      g
//   Langmuir   g/(1-g)
//   Frumkin    g/(1-g) exp(-bt g)
//   Volmer     g/(1-g) exp(g/(1-g))
//   vdW        g/(1-g) exp(g/(1-g) - bt g)
double f_iso(const Isotherm& iso, double g);

// Dimensionless surface pressure Pi~ = J(g Gamma_inf)/Gamma_inf.
double surface_pressure_j(const Isotherm& iso, double g);

// Taylor classification constant Q: 0 Henry, 1 Langmuir/Frumkin,
// 2 Volmer/vdW.
int q_constant(const Isotherm& iso);

// Two-term Taylor value g + (Q - bt) g^2; differs from f_iso by O(g^3).
double taylor_f2(const Isotherm& iso, double g);

struct Equilibrium {
  double g_e;             // coverage with f(g_e) = f_e, unique in (0,1)
  double gamma_star_inf;  // 1 / g_e
};

// Solve f(g_e) = f_e on (0,1). Bracketed bisection plus a secant polish;
// relative residual below 1e-12. Henry needs f_e < 1 (f is bounded by 1).
Equilibrium equilibrium_coverage(const Isotherm& iso, double f_e);

// Solve f(g)/g = prefactor (= gamma_star_inf * f_e) on the increasing
// branch. Used when runs are specified by the product instead of f_e.
Equilibrium equilibrium_from_prefactor(const Isotherm& iso, double prefactor);

// Largest coverage accepted by f_iso before exp(g/(1-g)) leaves the
// representable range (Volmer/vdW); 1 - 1e-9 for the other models.
double coverage_cap(const Isotherm& iso);

}  // namespace adsorb

#endif  // ADSORB_ISOTHERM_HPP_
