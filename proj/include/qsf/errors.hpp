#pragma once

#include <stdexcept>
#include <string>

namespace qsf {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function or family.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole (e.g. Gamma at a non-positive integer).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The result is not representable as a finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A series or iteration did not reach its tolerance within the term budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The function value is genuinely infinite (e.g. 2F1 at z = 1 with c-a-b <= 0).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A quartic root needed by a Jacobi-type solution is not real.
class NonRealRootError : public Error {
 public:
  using Error::Error;
};

/// The auxiliary quantity xi of the Jacobi-type quartic is complex.
class ComplexXiError : public Error {
 public:
  using Error::Error;
};

/// A quadrature rule met a non-finite integrand sample.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsf
