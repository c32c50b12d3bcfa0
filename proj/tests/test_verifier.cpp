#include <cmath>
#include <vector>

#include "doctest.h"
#include "qsf/bessel_type.hpp"
#include "qsf/errors.hpp"
#include "qsf/laguerre_type.hpp"
#include "qsf/verifier.hpp"

using namespace qsf;
using namespace qsf::verifier;

namespace {

OperatorSpec make_spec(Family f, Form form) {
  OperatorSpec s;
  s.family = f;
  s.form = form;
  return s;
}

DerivProvider bessel_j(double m, double lam) {
  return [=](double x) { return bessel_type::solution_derivs(bessel_type::Kind::J, {m, lam}, x, 3); };
}

}  // namespace

TEST_CASE("known solution passes, a wrong function fails") {
  for (Form form : {Form::frobenius, Form::lagrange}) {
    OperatorSpec s = make_spec(Family::bessel, form);
    s.params.M = 1.0;
    const double cap = bessel_type::lambda_cap(1.3, 1.0);
    for (double x : {0.5, 2.0, 7.0}) {
      const ResidualReport r = residual(s, bessel_j(1.0, 1.3), cap, x);
      CHECK(r.pass);
      CHECK(r.rel_residual <= 1e-6);
    }
    DerivProvider x5 = [](double x) {
      return std::vector<double>{std::pow(x, 5), 5 * std::pow(x, 4), 20 * std::pow(x, 3), 60 * x * x, 120 * x};
    };
    for (double x : {0.2, 1.5, 2.0, 5.0}) {
      const ResidualReport r = residual(s, x5, cap, x);
      INFO("x = " << x);
      CHECK(r.rel_residual >= 1e-2);
      CHECK_FALSE(r.pass);
    }
    // The wrong spectral parameter is also caught.
    CHECK(residual(s, bessel_j(1.0, 1.3), bessel_type::lambda_cap(1.31, 1.0), 2.0).rel_residual >= 1e-3);
  }
}

TEST_CASE("zero function passes through the scale floor") {
  DerivProvider zero = [](double) { return std::vector<double>(4, 0.0); };
  for (Family f : {Family::bessel, Family::laguerre, Family::legendre, Family::jacobi}) {
    const OperatorSpec s = make_spec(f, Form::frobenius);
    const double x = (f == Family::bessel || f == Family::laguerre) ? 1.0 : 0.3;
    const ResidualReport r = residual(s, zero, 3.0, x);
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == 0.0);
    CHECK(r.rel_residual == 0.0);
    CHECK(r.pass);
  }
}

TEST_CASE("residual domain checks") {
  OperatorSpec s = make_spec(Family::laguerre, Form::frobenius);
  DerivProvider y = [](double x) { return laguerre_type::solution_L_derivs(1, {1.0, 1.0}, x, 3); };
  CHECK_THROWS_AS(residual(s, y, 1.0, -1.0), DomainError);
  CHECK_THROWS_AS(residual(s, y, 1.0, 0.0), DomainError);
  s = make_spec(Family::jacobi, Form::lagrange);
  DerivProvider p = [](double) { return std::vector<double>{1.0, 0.0, 0.0, 0.0}; };
  CHECK_THROWS_AS(residual(s, p, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(residual(s, p, 0.0, -0.99999), DomainError);
  s.params.alpha = -1.5;
  CHECK_THROWS_AS(residual(s, p, 0.0, 0.0), DomainError);
  s = make_spec(Family::bessel, Form::frobenius);
  s.params.M = -1.0;
  CHECK_THROWS_AS(residual(s, p, 0.0, 1.0), DomainError);
  DerivProvider short_p = [](double) { return std::vector<double>{1.0, 0.0}; };
  CHECK_THROWS_AS(residual(make_spec(Family::bessel, Form::frobenius), short_p, 0.0, 1.0), DomainError);
}

TEST_CASE("fourth derivative stencil") {
  for (double x : {-0.7, 0.0, 0.4, 3.0, 12.0}) {
    DerivProvider e = [](double t) {
      const double v = std::exp(0.8 * t);
      return std::vector<double>{v, 0.8 * v, 0.64 * v, 0.512 * v};
    };
    const double want_e = 0.4096 * std::exp(0.8 * x);
    CHECK(std::abs(fourth_derivative(e, x) - want_e) <= 1e-6 * std::abs(want_e));
    DerivProvider s = [](double t) {
      return std::vector<double>{std::sin(t), std::cos(t), -std::sin(t), -std::cos(t)};
    };
    CHECK(std::abs(fourth_derivative(s, x) - std::sin(x)) <= 1e-6 * std::max(std::abs(std::sin(x)), 1e-2));
  }
  DerivProvider five = [](double) { return std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0}; };
  CHECK(derivatives(five, 0.0)[4] == 5.0);
}

TEST_CASE("coefficients of the two forms agree up to the weight ratio") {
  for (Family f : {Family::bessel, Family::laguerre, Family::legendre, Family::jacobi}) {
    OperatorSpec fr = make_spec(f, Form::frobenius);
    fr.params = {2.0, 0.7, 0.3};
    OperatorSpec lg = fr;
    lg.form = Form::lagrange;
    const double x = (f == Family::bessel || f == Family::laguerre) ? 1.7 : -0.35;
    const std::array<double, 5> d{0.3, -1.1, 0.8, 2.5, -0.4};
    const double ratio = lg.weight(x) / fr.weight(x);
    CHECK(lg.apply(d, x) == doctest::Approx(ratio * fr.apply(d, x)).epsilon(1e-12));
  }
  // Bessel-type Frobenius coefficients, expanded by hand.
  OperatorSpec b = make_spec(Family::bessel, Form::frobenius);
  b.params.M = 2.0;
  const Coefficients c = b.coefficients(1.5);
  CHECK(c.a[4] == doctest::Approx(1.5));
  CHECK(c.a[3] == doctest::Approx(2.0));
  CHECK(c.a[2] == doctest::Approx(-(9.0 / 1.5 + 8.0 * 1.5 / 2.0)));
  CHECK(c.a[1] == doctest::Approx(9.0 / (1.5 * 1.5) - 4.0));
  CHECK(c.a[0] == 0.0);
}

TEST_CASE("wronskian") {
  std::array<DerivProvider, 4> basis;
  for (int i = 0; i < 4; ++i) {
    basis[i] = [i](double) {
      std::vector<double> v(4, 0.0);
      v[i] = 1.0;
      return v;
    };
  }
  CHECK(wronskian(basis, 0.0) == doctest::Approx(1.0));
  std::swap(basis[0], basis[1]);
  CHECK(wronskian(basis, 0.0) == doctest::Approx(-1.0));
  basis[2] = basis[3];
  CHECK(wronskian(basis, 0.0) == 0.0);
  // Scaling a row does not change the scaled determinant.
  std::array<std::array<double, 4>, 4> m{{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  CHECK(scaled_determinant(m) == doctest::Approx(1.0));
  m[0] = {1e8, 0, 0, 0};
  CHECK(scaled_determinant(m) == doctest::Approx(1.0));
  // exp(k x), k = 1..4, are independent.
  std::array<DerivProvider, 4> ex;
  for (int k = 1; k <= 4; ++k) {
    ex[k - 1] = [k](double x) {
      const double v = std::exp(k * x);
      return std::vector<double>{v, k * v, k * k * v, k * k * k * v};
    };
  }
  CHECK(std::abs(wronskian(ex, 0.3)) > 1e-8);
}

TEST_CASE("grid reports") {
  const OperatorSpec s = make_spec(Family::bessel, Form::lagrange);
  std::vector<SolutionFactory> sols = {
      {"J", [](const ParamCell& c) { return bessel_j(c.params.M, 1.0); }},
      {"broken", [](const ParamCell&) -> DerivProvider {
         return [](double) -> std::vector<double> { throw OverflowError("boom"); };
       }}};
  std::vector<ParamCell> cells(2);
  cells[0].params.M = 1.0;
  cells[0].spectral = bessel_type::lambda_cap(1.0, 1.0);
  cells[0].label = "a";
  cells[1].params.M = 4.0;
  cells[1].spectral = bessel_type::lambda_cap(1.0, 4.0);
  cells[1].label = "b";
  const auto rep = grid_report(s, sols, cells, linspace(0.5, 3.0, 5), 1e-6, 3);
  REQUIRE(rep.size() == 4);
  CHECK(rep[0].verdict == Verdict::pass);
  CHECK(rep[0].inputs.find("a") != std::string::npos);
  CHECK(rep[1].inputs.find("b") != std::string::npos);
  CHECK(rep[2].verdict == Verdict::fail);
  CHECK(rep[2].detail.find("boom") != std::string::npos);
  // Deterministic regardless of thread count.
  const auto one = grid_report(s, sols, cells, linspace(0.5, 3.0, 5), 1e-6, 1);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    CHECK((rep[i].residual == one[i].residual || (std::isnan(rep[i].residual) && std::isnan(one[i].residual))));
    CHECK(rep[i].inputs == one[i].inputs);
  }
  // One-point grid.
  CHECK(grid_report(s, {sols[0]}, {cells[0]}, {2.0}).size() == 1);
  CHECK_THROWS_AS(grid_report(s, sols, cells, {}), DomainError);
  CHECK_THROWS_AS(grid_report(s, {}, cells, {1.0}), DomainError);
}

TEST_CASE("checks and helpers") {
  CHECK(make_check("a", "", 1e-7, 1e-6).verdict == Verdict::pass);
  CHECK(make_check("a", "", 1e-5, 1e-6).verdict == Verdict::fail);
  CHECK(make_check("a", "", 1e-5, 1e-6, ">").verdict == Verdict::pass);
  CHECK(make_check("a", "", std::nan(""), 1e-6).verdict == Verdict::fail);
  CHECK(make_check("a", "", std::nan(""), 1e-6, ">").verdict == Verdict::fail);
  CHECK(linspace(0.0, 1.0, 3) == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(linspace(2.0, 5.0, 1) == std::vector<double>{2.0});
  CHECK(parse_family("legendre") == Family::legendre);
  CHECK_THROWS_AS(parse_family("hermite"), DomainError);
  CHECK(fmt(0.1) == "0.10000000000000001");
}
