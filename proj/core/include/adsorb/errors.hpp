#ifndef ADSORB_ERRORS_HPP_
#define ADSORB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace adsorb {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation requested exactly at an integrable singularity.
class SingularError : public DomainError {
 public:
  explicit SingularError(const std::string& msg) : DomainError(msg) {}
};

// Parameters outside the validity range of a kinetic model
// (e.g. beta_tilde at or above the uniqueness bound).
class ModelError : public Error {
 public:
  explicit ModelError(const std::string& msg) : Error(msg) {}
};

// A numerical routine could not reach its accuracy target. Carries the
// best estimate and the error bound it did achieve.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& msg, double estimate, double error_bound)
      : Error(msg), estimate(estimate), error_bound(error_bound) {}
  double estimate;
  double error_bound;
};

// Bad run configuration: unparseable input, mutually exclusive blocks,
// misordered mesh regions, trajectory/parameter provenance mismatch.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A partial sum started to diverge before reaching the requested order.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& msg) : Error(msg) {}
};

}  // namespace adsorb

#endif  // ADSORB_ERRORS_HPP_
