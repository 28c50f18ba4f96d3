#pragma once

#include <stdexcept>
#include <string>

namespace graphonlab {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad graph, asymmetric graphon, unknown name).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or contraction would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An iterative generator failed to reach its residual target.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace graphonlab
