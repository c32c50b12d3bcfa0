#include "qsf/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "qsf/errors.hpp"
#include "qsf/jet.hpp"

namespace qsf::verifier {

namespace {

using J2 = Jet<2>;

Coefficient from_jet(const J2& j) { return {j.deriv(0), j.deriv(1), j.deriv(2)}; }

double k_of(const FamilyParams& p) { return 4.0 * p.A * std::exp2(p.alpha); }

Coefficients bessel_coefficients(const FamilyParams& p, double x) {
  const J2 xj = J2::variable(x);
  const J2 q = 9.0 * pow_linear<2>(x, 1.0, -1.0) + (8.0 / p.M) * xj;
  Coefficients c;
  c.p = from_jet(xj);
  c.q = from_jet(q);
  c.w = from_jet(xj);
  c.a = {0.0, 9.0 / (x * x) - 8.0 / p.M, -(9.0 / x + 8.0 * x / p.M), 2.0, x};
  c.w_frobenius = x;
  return c;
}

Coefficients laguerre_coefficients(const FamilyParams& p, double x) {
  const J2 xj = J2::variable(x);
  const J2 e = exp_linear<2>(-1.0, x);
  Coefficients c;
  c.p = from_jet(xj * xj * e);
  c.q = from_jet(((2.0 * p.A + 2.0) * xj + 2.0) * e);
  c.w = from_jet(e);
  c.a = {0.0, (2.0 * p.A + 2.0) * x - 2.0 * p.A, x * x - (2.0 * p.A + 6.0) * x,
         -2.0 * x * x + 4.0 * x, x * x};
  c.w_frobenius = 1.0;
  return c;
}

Coefficients legendre_coefficients(const FamilyParams& p, double x) {
  const J2 xj = J2::variable(x);
  const J2 u = 1.0 - xj * xj;
  Coefficients c;
  c.p = from_jet(u * u);
  c.q = from_jet(8.0 + 4.0 * p.A * u);
  c.w = {1.0, 0.0, 0.0};
  const double s = x * x - 1.0;
  c.a = {0.0, 8.0 * p.A * x, (4.0 * p.A + 12.0) * s, 8.0 * x * s, s * s};
  c.w_frobenius = 1.0;
  return c;
}

Coefficients jacobi_coefficients(const FamilyParams& p, double x) {
  const double al = p.alpha;
  const double k = k_of(p);
  const J2 xj = J2::variable(x);
  const J2 one_plus = 1.0 + xj;
  Coefficients c;
  c.p = from_jet(pow_linear<2>(1.0 - x, -1.0, al + 2.0) * one_plus * one_plus);
  c.q = from_jet(pow_linear<2>(1.0 - x, -1.0, al + 1.0) *
                 ((k + 2.0 * al + 2.0) * xj + (k + 2.0 * al + 6.0)));
  c.w = from_jet(pow_linear<2>(1.0 - x, -1.0, al));
  const double u = 1.0 - x * x;
  c.a[4] = u * u;
  c.a[3] = -2.0 * u * ((al + 4.0) * x + al);
  c.a[2] = (1.0 + x) * ((k + al * al + 9.0 * al + 14.0) * x + (-k + al * al - 3.0 * al - 10.0));
  c.a[1] = (k * al + 2.0 * k + 2.0 * al * al + 6.0 * al + 4.0) * x +
           (k * al + 2.0 * al * al + 6.0 * al + 4.0);
  c.a[0] = 0.0;
  c.w_frobenius = 1.0;
  return c;
}

void check_domain(const OperatorSpec& spec, double x) {
  const auto [lo, hi] = spec.domain();
  if (!(x > lo && x < hi)) {
    throw DomainError(std::string("verifier: x = ") + fmt(x) + " outside the " +
                      family_name(spec.family) + " domain");
  }
}

// One pass of the seven-point stencil for the second derivative of g = y''.
double stencil(const DerivProvider& y, double x, double h) {
  static constexpr std::array<double, 7> w = {2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0};
  double s = 0.0;
  for (int j = -3; j <= 3; ++j) {
    const std::vector<double> d = y(x + j * h);
    if (d.size() < 3) throw DomainError("verifier: provider must return at least y''");
    s += w[j + 3] * d[2];
  }
  return s / (180.0 * h * h);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::bessel: return "bessel";
    case Family::laguerre: return "laguerre";
    case Family::legendre: return "legendre";
    case Family::jacobi: return "jacobi";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "bessel") return Family::bessel;
  if (s == "laguerre") return Family::laguerre;
  if (s == "legendre") return Family::legendre;
  if (s == "jacobi") return Family::jacobi;
  throw DomainError("unknown family '" + s + "' (bessel, laguerre, legendre, jacobi)");
}

const char* form_name(Form f) { return f == Form::frobenius ? "frobenius" : "lagrange"; }

void OperatorSpec::validate() const {
  switch (family) {
    case Family::bessel:
      if (!(params.M > 0.0)) throw DomainError("bessel: requires M > 0");
      break;
    case Family::laguerre:
    case Family::legendre:
      if (!(params.A > 0.0)) throw DomainError(std::string(family_name(family)) + ": requires A > 0");
      break;
    case Family::jacobi:
      if (!(params.A > 0.0)) throw DomainError("jacobi: requires A > 0");
      if (!(params.alpha > -1.0)) throw DomainError("jacobi: requires alpha > -1");
      break;
  }
}

std::pair<double, double> OperatorSpec::domain() const {
  if (family == Family::bessel || family == Family::laguerre) {
    return {0.0, std::numeric_limits<double>::infinity()};
  }
  return {-1.0, 1.0};
}

Coefficients OperatorSpec::coefficients(double x) const {
  validate();
  check_domain(*this, x);
  switch (family) {
    case Family::bessel: return bessel_coefficients(params, x);
    case Family::laguerre: return laguerre_coefficients(params, x);
    case Family::legendre: return legendre_coefficients(params, x);
    case Family::jacobi: return jacobi_coefficients(params, x);
  }
  throw DomainError("verifier: unknown family");
}

double OperatorSpec::apply(const std::array<double, 5>& d, double x) const {
  const Coefficients c = coefficients(x);
  if (form == Form::lagrange) {
    return c.p.v * d[4] + 2.0 * c.p.d1 * d[3] + (c.p.d2 - c.q.v) * d[2] - c.q.d1 * d[1];
  }
  double s = 0.0;
  for (int k = 0; k < 5; ++k) s += c.a[k] * d[k];
  return s;
}

double OperatorSpec::term_scale(const std::array<double, 5>& d, double x) const {
  const Coefficients c = coefficients(x);
  std::array<double, 5> e = c.a;
  if (form == Form::lagrange) e = {0.0, -c.q.d1, c.p.d2 - c.q.v, 2.0 * c.p.d1, c.p.v};
  double dmax = 0.0;
  for (double v : d) dmax = std::max(dmax, std::abs(v));
  double s = std::abs(e[4]) * dmax;
  for (int k = 0; k < 4; ++k) s += std::abs(e[k] * d[k]);
  return s;
}

double OperatorSpec::weight(double x) const {
  const Coefficients c = coefficients(x);
  return form == Form::lagrange ? c.w.v : c.w_frobenius;
}

double fourth_derivative(const DerivProvider& y, double x) {
  const double h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / 6.0) *
                   std::max(1.0, std::abs(x));
  const double coarse = stencil(y, x, h);
  const double fine = stencil(y, x, 0.5 * h);
  return (64.0 * fine - coarse) / 63.0;
}

std::array<double, 5> derivatives(const DerivProvider& y, double x) {
  const std::vector<double> d = y(x);
  if (d.size() < 4) throw DomainError("verifier: provider must return [y, y', y'', y''']");
  std::array<double, 5> out{d[0], d[1], d[2], d[3], 0.0};
  out[4] = d.size() >= 5 ? d[4] : fourth_derivative(y, x);
  return out;
}

ResidualReport residual(const OperatorSpec& spec, const DerivProvider& y, double spectral, double x,
                        double tolerance) {
  spec.validate();
  check_domain(spec, x);
  const double h = 3.0 * std::pow(std::numeric_limits<double>::epsilon(), 1.0 / 6.0) *
                   std::max(1.0, std::abs(x));
  check_domain(spec, x - h);
  check_domain(spec, x + h);
  const std::array<double, 5> d = derivatives(y, x);
  ResidualReport r;
  r.family = spec.family;
  r.form = spec.form;
  r.params = spec.params;
  r.spectral = spectral;
  r.x = x;
  r.lhs = spec.apply(d, x);
  r.rhs = spectral * spec.weight(x) * d[0];
  r.term_scale = spec.term_scale(d, x);
  const double scale = std::max({std::abs(r.lhs), std::abs(r.rhs), r.term_scale, kScaleFloor});
  r.rel_residual = std::abs(r.lhs - r.rhs) / scale;
  r.tolerance = tolerance;
  r.pass = r.rel_residual <= tolerance;
  return r;
}

double scaled_determinant(std::array<std::array<double, 4>, 4> m) {
  for (auto& row : m) {
    double n = 0.0;
    for (double v : row) n += v * v;
    n = std::sqrt(n);
    if (n == 0.0) return 0.0;
    for (double& v : row) v /= n;
  }
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

double wronskian(const std::array<DerivProvider, 4>& solutions, double x) {
  std::array<std::array<double, 4>, 4> rows{};
  for (int i = 0; i < 4; ++i) {
    const std::vector<double> d = solutions[i](x);
    if (d.size() < 4) throw DomainError("wronskian: provider must return [y, y', y'', y''']");
    for (int k = 0; k < 4; ++k) rows[i][k] = d[k];
  }
  return scaled_determinant(rows);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::excluded: return "excluded";
  }
  return "?";
}

CheckReport make_check(std::string name, std::string inputs, double residual, double tolerance,
                       std::string relation) {
  CheckReport c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.residual = residual;
  c.tolerance = tolerance;
  c.relation = std::move(relation);
  const bool ok = c.relation == ">" ? residual > tolerance : residual <= tolerance;
  c.verdict = ok ? Verdict::pass : Verdict::fail;
  return c;
}

std::vector<CheckReport> grid_report(const OperatorSpec& spec,
                                     const std::vector<SolutionFactory>& solutions,
                                     const std::vector<ParamCell>& param_grid,
                                     const std::vector<double>& x_grid, double tolerance,
                                     unsigned threads) {
  if (solutions.empty() || param_grid.empty() || x_grid.empty()) {
    throw DomainError("empty grid");
  }
  const std::size_t total = solutions.size() * param_grid.size();
  std::vector<CheckReport> out(total);
  auto run = [&](std::size_t idx) {
    const SolutionFactory& sol = solutions[idx / param_grid.size()];
    const ParamCell& cell = param_grid[idx % param_grid.size()];
    const std::string inputs = "solution=" + sol.name + (cell.label.empty() ? "" : " " + cell.label);
    const std::string name = std::string(family_name(spec.family)) + "_residual";
    try {
      OperatorSpec s = spec;
      s.params = cell.params;
      const DerivProvider y = sol.make(cell);
      double worst = 0.0;
      for (double x : x_grid) {
        const ResidualReport r = residual(s, y, cell.spectral, x, tolerance);
        if (!(r.rel_residual <= worst)) worst = r.rel_residual;
      }
      out[idx] = make_check(name, inputs, worst, tolerance);
    } catch (const std::exception& e) {
      CheckReport c = make_check(name, inputs, std::numeric_limits<double>::quiet_NaN(), tolerance);
      c.verdict = Verdict::fail;
      c.detail = e.what();
      out[idx] = c;
    }
  };
  unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n = static_cast<unsigned>(std::min<std::size_t>(n, total));
  if (n <= 1) {
    for (std::size_t i = 0; i < total; ++i) run(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) run(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw DomainError("linspace: requires n >= 1");
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace qsf::verifier
