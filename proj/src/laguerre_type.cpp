#include "qsf/laguerre_type.hpp"

#include <cmath>
#include <string>

#include "qsf/jet.hpp"
#include "qsf/sfkernel.hpp"

namespace qsf::laguerre_type {

namespace {

constexpr int kOrder = 5;
using J5 = Jet<kOrder>;

void check_r(int r) {
  if (r < 1 || r > 4) throw DomainError("laguerre_type: r must be 1, 2, 3 or 4");
}

void check_x(double x) {
  if (!(x > 0.0)) throw DomainError("laguerre_type: requires x > 0");
  if (x > kXMax) {
    throw OverflowError("laguerre_type: x beyond x_max = " + std::to_string(kXMax));
  }
}

// F = M(a,1,x) or U(a,1,x) solves x F'' + (1 - x) F' - a F = 0.
J5 formula_jet(bool irregular, double gamma, const Params& p, double x, double* err) {
  check_x(x);
  const double a = 0.5 + p.A + 0.5 * gamma;
  const EvalResult f = irregular ? sf::kummer_u(a, 1.0, x) : sf::kummer_m(a, 1.0, x);
  const EvalResult df = irregular ? sf::kummer_u_dz(a, 1.0, x) : sf::kummer_m_dz(a, 1.0, x);
  const J5 xj = J5::variable(x);
  const J5 F = ode_series(xj, 1.0 - xj, J5::constant(-a), f.value, df.value);
  const double coef = 0.5 + 0.5 * gamma;
  *err = std::abs(coef) * f.abs_err + df.abs_err +
         2.0 * kEps * (std::abs(coef * f.value) + std::abs(df.value));
  return coef * F - derivative(F);
}

J5 solution_jet(int r, const Params& p, double x, double* err) {
  check_r(r);
  p.validate();
  const double g = gamma_la(p.lambda, p.A);
  const double s = (r == 1 || r == 3) ? 1.0 : -1.0;
  return formula_jet(r >= 3, s * g, p, x, err);
}

}  // namespace

void Params::validate() const {
  if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("laguerre_type: requires A > 0");
  if (!std::isfinite(lambda)) throw DomainError("laguerre_type: lambda must be finite");
  if (4.0 * A * A + 4.0 * A + 1.0 + 4.0 * lambda < 0.0) {
    throw DomainError("laguerre_type: 4A^2 + 4A + 1 + 4 lambda < 0 (complex Gamma)");
  }
}

double gamma_la(double lambda, double A) {
  const double rad = 4.0 * A * A + 4.0 * A + 1.0 + 4.0 * lambda;
  if (rad < 0.0) throw DomainError("gamma_la: 4A^2 + 4A + 1 + 4 lambda < 0 (complex Gamma)");
  return std::sqrt(rad);
}

bool degenerate(const Params& p) {
  p.validate();
  const double a = 0.5 + p.A - 0.5 * gamma_la(p.lambda, p.A);
  return a < 0.5 && std::abs(a - std::round(a)) < 1e-12;
}

EvalResult solution_L(int r, const Params& p, double x) {
  double err = 0.0;
  const J5 y = solution_jet(r, p, x, &err);
  return make_result(y.value(), err, "laguerre_type::solution_L");
}

EvalResult formula_with_gamma(bool irregular, double gamma, const Params& p, double x) {
  if (!(p.A > 0.0)) throw DomainError("laguerre_type: requires A > 0");
  double err = 0.0;
  const J5 y = formula_jet(irregular, gamma, p, x, &err);
  return make_result(y.value(), err, "laguerre_type::formula_with_gamma");
}

std::vector<double> solution_L_derivs(int r, const Params& p, double x, int max_order) {
  if (max_order < 0 || max_order > 3) {
    throw DomainError("laguerre_type: max_order must be in 0..3");
  }
  double err = 0.0;
  const J5 y = solution_jet(r, p, x, &err);
  std::vector<double> out;
  for (int k = 0; k <= max_order; ++k) {
    const double v = y.deriv(k);
    if (!std::isfinite(v)) throw OverflowError("laguerre_type: derivative not representable");
    out.push_back(v);
  }
  return out;
}

}  // namespace qsf::laguerre_type
