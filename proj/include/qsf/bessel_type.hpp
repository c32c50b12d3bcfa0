#pragma once

// Solutions of the fourth-order Bessel-type equation
//   (x y'')'' - ((9/x + 8x/M) y')' = Lambda x y,   x > 0,
// with Lambda = lambda^2 (lambda^2 + 8/M).

#include <string_view>
#include <vector>

#include "qsf/eval_result.hpp"

namespace qsf::bessel_type {

enum class Kind { J, Y, I, K };

struct Params {
  double M = 1.0;
  double lambda = 1.0;

  /// Throws DomainError unless M > 0 and lambda is finite.
  void validate() const;
  /// c = sqrt(lambda^2 + 8/M).
  double c() const;
  /// d = 1 + M (lambda/2)^2.
  double d() const;
};

Kind parse_kind(std::string_view s);
const char* kind_name(Kind k);

/// Lambda = lambda^2 (lambda^2 + 8/M). DomainError when M <= 0.
double lambda_cap(double lambda, double M);

/// J: d J0(lambda x) - 2M(lambda/2)^2 (lambda x)^-1 J1(lambda x), likewise Y.
/// I: -d I0(c x) + (cM/2) x^-1 I1(c x);  K: d K0(c x) + (cM/2) x^-1 K1(c x).
/// J and I accept x = 0, where both equal 1. Y uses |lambda| and needs
/// lambda != 0.
EvalResult solution(Kind kind, const Params& p, double x);

/// [y, y', ..., y^(max_order)], max_order <= 3, computed analytically.
std::vector<double> solution_derivs(Kind kind, const Params& p, double x, int max_order);

}  // namespace qsf::bessel_type
