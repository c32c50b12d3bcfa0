#pragma once

// Solutions of the Laguerre-type equation
//   x^2 y'''' + (-2x^2 + 4x) y''' + (x^2 - (2A+6)x) y'' + ((2A+2)x - 2A) y'
//     = lambda y,   x > 0.

#include <vector>

#include "qsf/eval_result.hpp"

namespace qsf::laguerre_type {

struct Params {
  double A = 1.0;
  double lambda = 0.0;

  /// Throws DomainError unless A > 0 and 4A^2 + 4A + 1 + 4 lambda >= 0.
  void validate() const;
};

/// Largest x accepted; the regular Kummer function overflows near x = 709.
inline constexpr double kXMax = 700.0;

/// Gamma(lambda, A) = sqrt(4A^2 + 4A + 1 + 4 lambda).
double gamma_la(double lambda, double A);

/// True when a = 1/2 + A - Gamma/2 is a non-positive integer. Then U(a,1,.)
/// is a multiple of M(a,1,.) and L2, L4 are proportional (lambda = 0 is
/// the first such case).
bool degenerate(const Params& p);

/// L_r(x) = (1/2 + s Gamma/2) F(x) - F'(x) with F(x) = x^(-1/2) e^(x/2) Z(-A - s Gamma/2, 0; x),
/// Z = Whittaker M for r in {1,2} and W for r in {3,4}, s = +1 for r odd and
/// -1 for r even. The prefactor cancels against the Whittaker definition, so
/// F is evaluated as Kummer M or U (second parameter 1) with first parameter
/// 1/2 + A + s Gamma/2.
EvalResult solution_L(int r, const Params& p, double x);

/// The r = 1 (regular) or r = 3 (irregular) formula with an explicit, signed
/// value of Gamma in place of gamma_la.
EvalResult formula_with_gamma(bool irregular, double gamma, const Params& p, double x);

/// [y, y', ..., y^(max_order)], max_order <= 3.
std::vector<double> solution_L_derivs(int r, const Params& p, double x, int max_order);

}  // namespace qsf::laguerre_type
