#ifndef ADSORB_KERNEL_HPP_
#define ADSORB_KERNEL_HPP_

#include <cmath>

#include "adsorb/specfun.hpp"

namespace adsorb {

// Convolution kernel with closed-form first and second antiderivatives.
//   diffusion: xi(t) = 1/sqrt(pi t)
//   mixed:     xi(t) = (1/ba) exp(t/ba^2) erfc(sqrt(t)/ba)
//   unit:      xi(t) = 1  (plain first-order integral, used by the
//              exponential-transformed formulation)
// I1 is the antiderivative of xi with I1(0) = 0 and I2 of I1 with I2(0) = 0.
class Kernel {
 public:
  enum class Variant { diffusion, mixed, unit };

  static Kernel diffusion() { return Kernel(Variant::diffusion, 0.0); }
  static Kernel unit() { return Kernel(Variant::unit, 0.0); }
  static Kernel mixed(double ba) {
    return ba > 0.0 ? Kernel(Variant::mixed, ba) : diffusion();
  }

  Variant variant() const { return variant_; }
  double ba() const { return ba_; }

  double xi(double t) const {
    switch (variant_) {
      case Variant::diffusion: return kernel_xi(KernelParam{0.0}, t);
      case Variant::mixed: return kernel_xi(KernelParam{ba_}, t);
      case Variant::unit: return 1.0;
    }
    return 0.0;
  }

  double I1(double t) const {
    double i1, i2;
    eval(t, &i1, &i2);
    return i1;
  }

  double I2(double t) const {
    double i1, i2;
    eval(t, &i1, &i2);
    return i2;
  }

  // Both antiderivatives with a single erfcx evaluation.
  void eval(double t, double* i1, double* i2) const {
    constexpr double kTwoInvSqrtPi = 1.1283791670955125739;  // 2/sqrt(pi)
    switch (variant_) {
      case Variant::unit:
        *i1 = t;
        *i2 = 0.5 * t * t;
        return;
      case Variant::diffusion: {
        const double st = std::sqrt(t);
        *i1 = kTwoInvSqrtPi * st;
        *i2 = (2.0 / 3.0) * t * *i1;
        return;
      }
      case Variant::mixed: {
        const double st = std::sqrt(t);
        const double base = kTwoInvSqrtPi * st;
        const double e = erfc_scaled(st / ba_);
        *i1 = base + ba_ * (e - 1.0);
        *i2 = (2.0 / 3.0) * t * base + ba_ * (ba_ * *i1 - t);
        return;
      }
    }
  }

 private:
  Kernel(Variant v, double ba) : variant_(v), ba_(ba) {}
  Variant variant_;
  double ba_;
};

}  // namespace adsorb

#endif  // ADSORB_KERNEL_HPP_
