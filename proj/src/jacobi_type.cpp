#include "qsf/jacobi_type.hpp"

#include <cmath>
#include <string>

#include "qsf/jet.hpp"
#include "qsf/quadrature.hpp"
#include "qsf/sfkernel.hpp"

namespace qsf::jacobi_type {

namespace {

constexpr int kOrder = 5;
using J5 = Jet<kOrder>;

double k_of(double alpha, double A) { return 4.0 * A * std::exp2(alpha); }

void check_alpha_a(double alpha, double A) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("jacobi_type: requires alpha > -1");
  }
  if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("jacobi_type: requires A > 0");
}

void check_n(int n) {
  if (n < 0) throw DomainError("jacobi_type: requires n >= 0");
}

void check_open(double x) {
  if (!(x > -1.0 && x < 1.0)) throw DomainError("jacobi_type: requires -1 < x < 1");
}

void check_order(int max_order) {
  if (max_order < 0 || max_order > 3) throw DomainError("jacobi_type: max_order must be in 0..3");
}

// Jet of a solution of the classical Jacobi equation (beta = 0)
//   (1-x^2) F'' + (-a - (a+2) x) F' + q F = 0
// from its value and slope at x.
J5 jacobi_jet(double a, double q, double x, double f, double df) {
  const J5 xj = J5::variable(x);
  return ode_series(1.0 - xj * xj, -a - (a + 2.0) * xj, J5::constant(q), f, df);
}

// (1-x)^-alpha about x.
J5 weight_jet(double alpha, double x) { return pow_linear<kOrder>(1.0 - x, -1.0, -alpha); }

struct Seed {
  EvalResult f, df;
};

// Degree-nu Jacobi function with parameter a: JP when the Gamma prefactor is
// usable, otherwise the regular function of eigenvalue q.
Seed seed(bool real_root, double nu, double a, double q, double x) {
  if (real_root && sf::jp_prefactor_regular(nu, a)) {
    return {sf::jp(nu, a, 0.0, x), sf::jp_dx(nu, a, 0.0, x)};
  }
  return {sf::jacobi_regular(q, a, 0.0, x), sf::jacobi_regular_dx(q, a, 0.0, x)};
}

J5 s1_jet(int n, double alpha, double A, double x, double* err) {
  check_n(n);
  check_alpha_a(alpha, A);
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("jacobi_type: S1 requires -1 <= x <= 1");
  const double nn = n;
  const double c = nn * alpha + 2.0 * A * std::exp2(alpha) + nn + nn * nn;
  // F^(k) = (n+alpha+1)_k / 2^k P_{n-k}^(alpha+k, k): exact up to the endpoints.
  std::array<double, kOrder + 2> fd{};
  std::array<double, kOrder + 2> fe{};
  double poch = 1.0;
  for (int k = 0; k <= kOrder + 1 && k <= n; ++k) {
    const EvalResult v = sf::jp(nn - k, alpha + k, k, x);
    fd[k] = poch * v.value;
    fe[k] = std::abs(poch) * v.abs_err;
    poch *= 0.5 * (nn + alpha + 1.0 + k);
  }
  J5 y;
  double fact = 1.0;
  for (int j = 0; j <= kOrder; ++j) {
    if (j > 0) fact *= j;
    // y^(j) = c F^(j) + (1-x) F^(j+1) - j F^(j)
    y.c[j] = ((c - j) * fd[j] + (1.0 - x) * fd[j + 1]) / fact;
  }
  *err = std::abs(c) * fe[0] + (1.0 - x) * fe[1] +
         4.0 * kEps * (std::abs(c * fd[0]) + std::abs((1.0 - x) * fd[1]));
  return y;
}

J5 s2_jet(int n, double alpha, double A, double x, double* err) {
  check_n(n);
  check_alpha_a(alpha, A);
  check_open(x);
  const double nn = n;
  const double q = (nn + 1.0) * (nn + alpha);
  const EvalResult f = sf::jacobi_regular(q, -alpha, 0.0, x);
  const EvalResult df = sf::jacobi_regular_dx(q, -alpha, 0.0, x);
  const double c = (nn + 1.0) * alpha + A * std::exp2(alpha + 1.0) + nn + nn * nn;
  const J5 F = jacobi_jet(-alpha, q, x, f.value, df.value);
  const J5 w = weight_jet(alpha, x);
  const J5 y = w * (c * F + (1.0 - J5::variable(x)) * derivative(F));
  const double wv = std::abs(w.value());
  *err = wv * (std::abs(c) * f.abs_err + (1.0 - x) * df.abs_err) + 4.0 * kEps * std::abs(y.value());
  return y;
}

J5 jcal_jet(int r, const Params& p, double x, double* err) {
  if (r < 1 || r > 4) throw DomainError("jacobi_type: r must be 1, 2, 3 or 4");
  p.validate();
  check_open(x);
  const QuarticRoots roots = quartic_roots(p.alpha, p.A, p.lambda);
  const double alpha = p.alpha;
  const double kk = k_of(alpha, p.A);
  const double xi = roots.xi;
  const bool first = r == 1 || r == 3;
  const std::complex<double> rho = roots.rho[first ? 0 : 2];
  const bool real = rho.imag() == 0.0;
  // rho (rho + alpha + 1) from the quadratic in t, free of root round-off.
  const double t = 0.5 * (-(kk + alpha) + (first ? xi : -xi));
  const J5 xj = J5::variable(x);
  if (r <= 2) {
    const Seed s = seed(real, rho.real(), alpha, t, x);
    const double coef = r == 1 ? 0.5 * (alpha - xi) : 0.5 * (alpha + xi);
    const J5 F = jacobi_jet(alpha, t, x, s.f.value, s.df.value);
    *err = std::abs(coef) * s.f.abs_err + (1.0 - x) * s.df.abs_err +
           4.0 * kEps * (std::abs(coef * s.f.value) + std::abs((1.0 - x) * s.df.value));
    return coef * F - (1.0 - xj) * derivative(F);
  }
  const Seed s = seed(real, -1.0 - rho.real(), -alpha, t + alpha, x);
  const double coef = r == 3 ? -0.5 * (alpha + xi) : -0.5 * (alpha - xi);
  const J5 G = jacobi_jet(-alpha, t + alpha, x, s.f.value, s.df.value);
  const J5 w = weight_jet(alpha, x);
  const double wv = std::abs(w.value());
  *err = wv * (std::abs(coef) * s.f.abs_err + (1.0 - x) * s.df.abs_err +
               4.0 * kEps * (std::abs(coef * s.f.value) + std::abs((1.0 - x) * s.df.value)));
  return w * (coef * G - (1.0 - xj) * derivative(G));
}

std::vector<double> to_derivs(const J5& y, int max_order) {
  check_order(max_order);
  std::vector<double> out;
  for (int k = 0; k <= max_order; ++k) out.push_back(y.deriv(k));
  return out;
}

}  // namespace

void Params::validate() const {
  check_alpha_a(alpha, A);
  if (!std::isfinite(lambda)) throw DomainError("jacobi_type: lambda must be finite");
}

double eigenvalue(int n, double alpha, double A) {
  check_n(n);
  check_alpha_a(alpha, A);
  const double nn = n;
  return nn * (nn + alpha + 1.0) * (nn * nn + (alpha + 1.0) * nn + k_of(alpha, A) + alpha);
}

std::complex<double> quartic(std::complex<double> rho, double alpha, double A, double lambda) {
  return rho * (rho + alpha + 1.0) * (rho * rho + (alpha + 1.0) * rho + k_of(alpha, A) + alpha) -
         lambda;
}

std::string jcal_degeneracy(const Params& p) {
  p.validate();
  if (p.alpha > -0.5 && std::abs(p.alpha - std::round(p.alpha)) < kDegenerateTol) {
    return "integer alpha >= 0: J3 and J4 are multiples of J1 and J2";
  }
  if (quartic_roots(p.alpha, p.A, p.lambda).degenerate) return "coincident quartic roots";
  return {};
}

QuarticRoots quartic_roots(double alpha, double A, double lambda) {
  check_alpha_a(alpha, A);
  const double kk = k_of(alpha, A);
  const double rad = alpha * alpha + 2.0 * alpha * kk + kk * kk + 4.0 * lambda;
  if (rad < 0.0) {
    throw ComplexXiError("quartic_roots: xi is complex (alpha^2 + 8 alpha A 2^alpha + "
                         "16 A^2 2^(2 alpha) + 4 lambda < 0)");
  }
  QuarticRoots out;
  out.xi = std::sqrt(rad);
  const double base = alpha * alpha + 1.0 - 2.0 * kk;
  const std::complex<double> s1 = std::sqrt(std::complex<double>(base + 2.0 * out.xi, 0.0));
  const std::complex<double> s3 = std::sqrt(std::complex<double>(base - 2.0 * out.xi, 0.0));
  const double h = -0.5 * (alpha + 1.0);
  out.rho = {h + 0.5 * s1, h - 0.5 * s1, h + 0.5 * s3, h - 0.5 * s3};
  bool degenerate = out.xi < kDegenerateTol;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(out.rho[i] - out.rho[j]) < kDegenerateTol) degenerate = true;
    }
  }
  out.degenerate = degenerate;
  return out;
}

EvalResult solution_S1(int n, double alpha, double A, double x) {
  double err = 0.0;
  const J5 y = s1_jet(n, alpha, A, x, &err);
  return make_result(y.value(), err, "jacobi_type::solution_S1");
}

EvalResult solution_S2(int n, double alpha, double A, double x) {
  double err = 0.0;
  const J5 y = s2_jet(n, alpha, A, x, &err);
  return make_result(y.value(), err, "jacobi_type::solution_S2");
}

EvalResult solution_Jcal(int r, const Params& p, double x) {
  double err = 0.0;
  const J5 y = jcal_jet(r, p, x, &err);
  return make_result(y.value(), err, "jacobi_type::solution_Jcal");
}

std::vector<double> solution_S1_derivs(int n, double alpha, double A, double x, int max_order) {
  double err = 0.0;
  return to_derivs(s1_jet(n, alpha, A, x, &err), max_order);
}

std::vector<double> solution_S2_derivs(int n, double alpha, double A, double x, int max_order) {
  double err = 0.0;
  return to_derivs(s2_jet(n, alpha, A, x, &err), max_order);
}

std::vector<double> solution_Jcal_derivs(int r, const Params& p, double x, int max_order) {
  double err = 0.0;
  return to_derivs(jcal_jet(r, p, x, &err), max_order);
}

double mu_hat(double x, const JacobiMeasure& m) {
  check_alpha_a(m.alpha, m.A);
  const double top = std::exp2(m.alpha + 1.0);
  const double scale = m.A / (2.0 * (m.alpha + 1.0));
  if (x < -1.0) return -0.5;
  if (x > 1.0) return scale * top;
  return scale * (top - std::pow(1.0 - x, m.alpha + 1.0));
}

double inner_product(const std::function<double(double)>& f, const std::function<double(double)>& g,
                     const JacobiMeasure& m, int degree_hint) {
  check_alpha_a(m.alpha, m.A);
  if (degree_hint < 0) throw DomainError("inner_product: degree_hint must be >= 0");
  const int nodes = (2 * degree_hint + 2) / 2 + 2;
  const auto rule = gauss_jacobi(nodes, m.alpha, 0.0);
  const double fm = f(-1.0), gm = g(-1.0);
  if (!std::isfinite(fm) || !std::isfinite(gm)) {
    throw QuadratureError("inner_product: non-finite sample at x = -1");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    const double x = rule->nodes[i];
    const double v = f(x) * g(x);
    if (!std::isfinite(v)) {
      throw QuadratureError("inner_product: non-finite sample at x = " + std::to_string(x));
    }
    sum += rule->weights[i] * v;
  }
  return 0.5 * fm * gm + 0.5 * m.A * sum;
}

}  // namespace qsf::jacobi_type
