#include "qsf/legendre_type.hpp"

#include <cmath>
#include <string>

#include "qsf/jet.hpp"
#include "qsf/sfkernel.hpp"

namespace qsf::legendre_type {

namespace {

constexpr int kOrder = 5;
using J5 = Jet<kOrder>;

void check_r(int r) {
  if (r < 1 || r > 4) throw DomainError("legendre_type: r must be 1, 2, 3 or 4");
}

void check_x(double x) {
  if (!(x > -1.0 && x < 1.0)) throw DomainError("legendre_type: requires -1 < x < 1");
}

// Jet of Le_r at a lambda away from the removable singularity.
J5 direct_jet(int r, double lambda, double A, double x, double* err) {
  const Sign sign = sign_of(r);
  const GammaOmega go = gamma_omega(sign, lambda, A);
  const double nu = degree(sign, lambda, A);
  const double d = lambda + 4.0 * A + 4.0 * A * A;
  const double lead = -(lambda + 3.0 - 4.0 * A + 4.0 * A * A);
  const double b0 = lead + go.omega - 3.0 * go.gamma + go.omega * go.gamma;
  const double b0_mag = std::abs(lead) + std::abs(go.omega) + 3.0 * std::abs(go.gamma) +
                        std::abs(go.omega * go.gamma);
  const sf::LegendreKind kind = r <= 2 ? sf::LegendreKind::P : sf::LegendreKind::Q;
  const EvalResult f = sf::legendre(kind, nu, x);
  const EvalResult df = sf::legendre_dx(kind, nu, x);
  const J5 xj = J5::variable(x);
  const J5 F = ode_series(1.0 - xj * xj, -2.0 * xj, J5::constant(nu * (nu + 1.0)), f.value,
                          df.value);
  const double c1 = -0.5 * (1.0 + go.omega);
  const double ratio = b0 / d;
  const J5 y = c1 * (xj * F) + (ratio + xj * xj) * derivative(F);
  const double c2 = ratio + x * x;
  *err = std::abs(c1 * x) * f.abs_err + std::abs(c2) * df.abs_err +
         4.0 * kEps * (std::abs(c1 * x * f.value) + std::abs(c2 * df.value)) +
         4.0 * kEps * b0_mag / std::abs(d) * std::abs(df.value);
  return y;
}

J5 solution_jet(int r, const Params& p, double x, double* err) {
  check_r(r);
  p.validate();
  check_x(x);
  const double shift = 4.0 * p.A + 4.0 * p.A * p.A;
  const double eps = kSingularTol * shift;
  const double star = -shift;
  if (std::abs(p.lambda - star) >= eps) return direct_jet(r, p.lambda, p.A, x, err);
  // Linear interpolation between lambda* - eps and lambda* + eps; the
  // function is smooth in lambda, so the error is O(eps^2).
  double e_lo = 0.0, e_hi = 0.0;
  const J5 lo = direct_jet(r, star - eps, p.A, x, &e_lo);
  const J5 hi = direct_jet(r, star + eps, p.A, x, &e_hi);
  const double t = (p.lambda - (star - eps)) / (2.0 * eps);
  *err = std::max(e_lo, e_hi) + std::abs(hi.value() - lo.value()) * 1e-6;
  return (1.0 - t) * lo + t * hi;
}

}  // namespace

void Params::validate() const {
  if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("legendre_type: requires A > 0");
  if (!std::isfinite(lambda)) throw DomainError("legendre_type: lambda must be finite");
}

GammaOmega gamma_omega(Sign sign, double lambda, double A) {
  const double rg = 4.0 * A * A - 4.0 * A + 1.0 + lambda;
  if (rg < 0.0) {
    throw DomainError("gamma_omega: radicand 4A^2 - 4A + 1 + lambda is negative");
  }
  const double g = (sign == Sign::plus ? 1.0 : -1.0) * std::sqrt(rg);
  const double ro = 5.0 - 8.0 * A + 4.0 * g;
  if (ro < 0.0) {
    throw DomainError(std::string("gamma_omega: radicand 5 - 8A + 4 Gamma is negative for sign ") +
                      (sign == Sign::plus ? "+" : "-"));
  }
  return {g, std::sqrt(ro)};
}

double degree(Sign sign, double lambda, double A) {
  const GammaOmega go = gamma_omega(sign, lambda, A);
  const double rad = 9.0 - 8.0 * A + 4.0 * go.gamma + 4.0 * go.omega;
  if (rad < 0.0) throw DomainError("legendre_type: radicand 9 - 8A + 4 Gamma + 4 Omega is negative");
  return 0.5 * std::sqrt(rad) - 0.5;
}

std::complex<double> bracket_factor(Sign sign, double lambda, double A, double x) {
  using C = std::complex<double>;
  const C g = (sign == Sign::plus ? 1.0 : -1.0) * std::sqrt(C(4.0 * A * A - 4.0 * A + 1.0 + lambda));
  const C om = std::sqrt(5.0 - 8.0 * A + 4.0 * g);
  const double d = lambda + 4.0 * A + 4.0 * A * A;
  return -(lambda + 3.0 - 4.0 * A + 4.0 * A * A) + om - 3.0 * g + om * g + d * x * x;
}

Sign sign_of(int r) {
  check_r(r);
  return (r == 1 || r == 3) ? Sign::plus : Sign::minus;
}

EvalResult solution_Le(int r, const Params& p, double x) {
  double err = 0.0;
  const J5 y = solution_jet(r, p, x, &err);
  return make_result(y.value(), err, "legendre_type::solution_Le");
}

std::vector<double> solution_Le_derivs(int r, const Params& p, double x, int max_order) {
  if (max_order < 0 || max_order > 3) {
    throw DomainError("legendre_type: max_order must be in 0..3");
  }
  double err = 0.0;
  const J5 y = solution_jet(r, p, x, &err);
  std::vector<double> out;
  for (int k = 0; k <= max_order; ++k) out.push_back(y.deriv(k));
  return out;
}

}  // namespace qsf::legendre_type
