#include "qsf/bessel_type.hpp"

#include <cmath>
#include <string>

#include "qsf/jet.hpp"
#include "qsf/sfkernel.hpp"

namespace qsf::bessel_type {

namespace {

constexpr int kOrder = 5;
using J5 = Jet<kOrder>;

struct Shape {
  sf::BesselKind base;
  double k;        // argument scale of G(x) = Z0(k x)
  double s;        // G satisfies x G'' + G' + s k^2 x G = 0
  double sign_g;   // y = sign_g d G + sign_h (M/2) G'/x
  double sign_h;
  double dg_sign;  // G' = dg_sign k Z1(k x)
};

Shape shape(Kind kind, const Params& p) {
  switch (kind) {
    case Kind::J: return {sf::BesselKind::J, std::abs(p.lambda), 1.0, 1.0, 1.0, -1.0};
    case Kind::Y: return {sf::BesselKind::Y, std::abs(p.lambda), 1.0, 1.0, 1.0, -1.0};
    case Kind::I: return {sf::BesselKind::I, p.c(), -1.0, -1.0, 1.0, 1.0};
    case Kind::K: return {sf::BesselKind::K, p.c(), -1.0, 1.0, -1.0, -1.0};
  }
  throw DomainError("bessel_type: unknown kind");
}

void check_x(Kind kind, const Params& p, double x) {
  p.validate();
  if (!std::isfinite(x)) throw DomainError("bessel_type: x must be finite");
  const bool closed = kind == Kind::J || kind == Kind::I;
  if (closed ? x < 0.0 : x <= 0.0) {
    throw DomainError(std::string("bessel_type: ") + kind_name(kind) +
                      (closed ? " requires x >= 0" : " requires x > 0"));
  }
  if (kind == Kind::Y && p.lambda == 0.0) {
    throw DomainError("bessel_type: Y requires lambda != 0");
  }
}

// J and I are even entire functions of x: y = sum_i e_i x^(2i) with
//   e_i = t_i (1 + sigma i (1 + m)) / (i + 1),  t_i = (-sigma k^2/4)^i / (i!)^2,
// sigma = +1 for J, -1 for I, m = M lambda^2 / 4. Free of the cancellation
// in d G + (M/2) G'/x near x = 0.
bool use_series(Kind kind, const Shape& sh, double x) {
  return (kind == Kind::J || kind == Kind::I) && sh.k * x <= 2.0;
}

J5 series_jet(Kind kind, const Params& p, const Shape& sh, double x0, double* err) {
  const double sigma = kind == Kind::J ? 1.0 : -1.0;
  const double m = p.M * p.lambda * p.lambda / 4.0;
  const double q = -sigma * sh.k * sh.k / 4.0;
  J5 y;
  double mag = 0.0;
  double t = 1.0;
  // k x0 <= 2, so (k x0 / 2)^(2i) / (i!)^2 is below 1e-60 by i = 40.
  for (int i = 0; i < 40; ++i) {
    if (i > 0) t *= q / (double(i) * i);
    const double e = t * (1.0 + sigma * i * (1.0 + m)) / (i + 1.0);
    // Taylor coefficients of x^(2i) about x0: binom(2i, k) x0^(2i-k).
    const int n = 2 * i;
    double binom = 1.0;
    for (int k = 0; k <= kOrder && k <= n; ++k) {
      if (k > 0) binom *= double(n - k + 1) / k;
      const double term = e * binom * std::pow(x0, n - k);
      y.c[k] += term;
    }
    mag += std::abs(e) * std::pow(x0, n);
    if (t == 0.0) break;
  }
  *err = 4.0 * kEps * mag;
  return y;
}

J5 closed_jet(const Params& p, const Shape& sh, double x0, double* err) {
  const double kx = sh.k * x0;
  const EvalResult g = sf::bessel(sh.base, 0, kx);
  const EvalResult z1 = sf::bessel(sh.base, 1, kx);
  const double dg = sh.dg_sign * sh.k * z1.value;
  const J5 xj = J5::variable(x0);
  const J5 G = ode_series(xj, J5::constant(1.0), sh.s * sh.k * sh.k * xj, g.value, dg);
  const J5 inv_x = pow_linear<kOrder>(x0, 1.0, -1.0);
  const double d = p.d();
  const J5 y = (sh.sign_g * d) * G + (sh.sign_h * 0.5 * p.M) * (derivative(G) * inv_x);
  const double h = 0.5 * p.M / x0;
  *err = d * g.abs_err + h * sh.k * z1.abs_err +
         2.0 * kEps * (d * std::abs(g.value) + h * std::abs(dg));
  return y;
}

J5 solution_jet(Kind kind, const Params& p, double x, double* err) {
  check_x(kind, p, x);
  const Shape sh = shape(kind, p);
  if (use_series(kind, sh, x)) return series_jet(kind, p, sh, x, err);
  return closed_jet(p, sh, x, err);
}

}  // namespace

void Params::validate() const {
  if (!(M > 0.0) || !std::isfinite(M)) throw DomainError("bessel_type: requires M > 0");
  if (!std::isfinite(lambda)) throw DomainError("bessel_type: lambda must be finite");
}

double Params::c() const { return std::sqrt(lambda * lambda + 8.0 / M); }
double Params::d() const { return 1.0 + M * (lambda / 2.0) * (lambda / 2.0); }

Kind parse_kind(std::string_view s) {
  if (s == "J") return Kind::J;
  if (s == "Y") return Kind::Y;
  if (s == "I") return Kind::I;
  if (s == "K") return Kind::K;
  throw DomainError("bessel_type: solution must be one of J, Y, I, K");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::J: return "J";
    case Kind::Y: return "Y";
    case Kind::I: return "I";
    case Kind::K: return "K";
  }
  return "?";
}

double lambda_cap(double lambda, double M) {
  if (!(M > 0.0)) throw DomainError("lambda_cap: requires M > 0");
  return lambda * lambda * (lambda * lambda + 8.0 / M);
}

EvalResult solution(Kind kind, const Params& p, double x) {
  double err = 0.0;
  const J5 y = solution_jet(kind, p, x, &err);
  return make_result(y.value(), err, "bessel_type::solution");
}

std::vector<double> solution_derivs(Kind kind, const Params& p, double x, int max_order) {
  if (max_order < 0 || max_order > 3) {
    throw DomainError("bessel_type: max_order must be in 0..3");
  }
  double err = 0.0;
  const J5 y = solution_jet(kind, p, x, &err);
  std::vector<double> out;
  for (int k = 0; k <= max_order; ++k) {
    const double v = y.deriv(k);
    if (!std::isfinite(v)) throw OverflowError("bessel_type: derivative not representable");
    out.push_back(v);
  }
  return out;
}

}  // namespace qsf::bessel_type
