#pragma once

// Solutions of the Legendre-type equation
//   (x^2-1)^2 y'''' + 8x(x^2-1) y''' + (4A+12)(x^2-1) y'' + 8A x y' = lambda y,
// on -1 < x < 1.

#include <complex>
#include <vector>

#include "qsf/eval_result.hpp"

namespace qsf::legendre_type {

enum class Sign { plus, minus };

struct Params {
  double A = 1.0;
  double lambda = 1.0;

  /// Throws DomainError unless A > 0 and lambda is finite.
  void validate() const;
};

struct GammaOmega {
  double gamma;
  double omega;
};

/// Gamma = +-sqrt(4A^2 - 4A + 1 + lambda), Omega = sqrt(5 - 8A + 4 Gamma).
/// DomainError naming the radicand that is negative.
GammaOmega gamma_omega(Sign sign, double lambda, double A);

/// Legendre degree nu = sqrt(9 - 8A + 4 Gamma + 4 Omega)/2 - 1/2 of the branch.
double degree(Sign sign, double lambda, double A);

/// -(lambda + 3 - 4A + 4A^2) + Omega - 3 Gamma + Omega Gamma + (lambda + 4A + 4A^2) x^2
/// with principal complex square roots, so it is defined for every real
/// lambda. At lambda = -(4A + 4A^2) it vanishes for both signs.
std::complex<double> bracket_factor(Sign sign, double lambda, double A, double x);

/// Solution index r: 1 = (+, P), 2 = (-, P), 3 = (+, Q), 4 = (-, Q).
Sign sign_of(int r);

/// Le_r(x) = -(1 + Omega)/2 x F(nu, x) + bracket / (lambda + 4A + 4A^2) F'(nu, x)
/// with F = P for r in {1, 2} and F = Q for r in {3, 4}. Within
/// kSingularTol * (4A + 4A^2) of lambda = -(4A + 4A^2) the value is
/// interpolated from the two sides of the removable singularity.
EvalResult solution_Le(int r, const Params& p, double x);

/// Relative half-width of the window around lambda = -(4A + 4A^2).
inline constexpr double kSingularTol = 1e-6;

/// [y, y', ..., y^(max_order)], max_order <= 3.
std::vector<double> solution_Le_derivs(int r, const Params& p, double x, int max_order);

}  // namespace qsf::legendre_type
