#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace eigres {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller-side precondition that is not a pure domain restriction
/// (e.g. geometric admissibility of a probe point).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of refinement levels.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> last,
                   std::complex<double> previous, long nodes)
      : std::runtime_error(what), last_(last), previous_(previous), nodes_(nodes) {}

  std::complex<double> last() const { return last_; }
  std::complex<double> previous() const { return previous_; }
  long nodes() const { return nodes_; }

 private:
  std::complex<double> last_;
  std::complex<double> previous_;
  long nodes_;
};

}  // namespace eigres
