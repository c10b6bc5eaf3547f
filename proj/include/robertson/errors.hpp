#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace robertson {

using cplx = std::complex<double>;

/// Argument outside the domain of a function (|z| >= 1, w = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative or adaptive method stopped short of its tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

/// A quotient in a functional vanished in the denominator at `point`.
class DegenerateError : public std::runtime_error {
 public:
  DegenerateError(const std::string& what, cplx point)
      : std::runtime_error(what), point_(point) {}
  cplx point() const noexcept { return point_; }

 private:
  cplx point_;
};

/// Improper integral with a non-integrable endpoint singularity.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No parameter satisfies all constraints of a construction.
class NoAdmissibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Angular sampling too sparse for nearest-branch continuation.
class GridTooCoarseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace robertson
