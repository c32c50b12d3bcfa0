#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qsf/bessel_type.hpp"
#include "qsf/jacobi_type.hpp"
#include "qsf/laguerre_type.hpp"
#include "qsf/legendre_type.hpp"
#include "qsf/oracle_table.hpp"
#include "qsf/quadrature.hpp"
#include "qsf/sfkernel.hpp"

using namespace qsf;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Richardson-extrapolated central difference.
double central_diff(const std::function<double(double)>& f, double x, double h) {
  auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

// Each derivative entry k against the difference of entry k-1.
void check_derivs(const std::function<std::vector<double>(double)>& y, double x, double h) {
  const std::vector<double> d = y(x);
  REQUIRE(d.size() == 4);
  for (int k = 1; k <= 3; ++k) {
    const double fd = central_diff([&](double t) { return y(t)[k - 1]; }, x, h);
    INFO("order " << k << " at x = " << x << ": analytic " << d[k] << " fd " << fd);
    CHECK(std::abs(d[k] - fd) <= 1e-7 * std::max(1.0, std::abs(d[k])));
  }
}

}  // namespace

TEST_CASE("family values reproduce the arbitrary-precision table") {
  const auto rows = oracle::load(oracle::default_path());
  int families = 0;
  for (const auto& r : rows) {
    if (r.function.find("_type_") == std::string::npos) continue;
    const double got = oracle::evaluate(r);
    INFO(r.function << " " << r.args[0] << " " << r.args[1] << " " << r.args[2] << " " << r.args[3]
                    << " got " << got << " want " << r.value);
    CHECK(oracle::relative_error(got, r.value) <= oracle::tolerance(r.function));
    ++families;
  }
  CHECK(families >= 60);
}

TEST_CASE("oracle table metric and tolerances") {
  CHECK(oracle::relative_error(1.0 + 1e-11, 1.0) == doctest::Approx(1e-11).epsilon(1e-4));
  CHECK(oracle::relative_error(1e-3 + 1e-13, 1e-3) == doctest::Approx(1e-10).epsilon(1e-3));
  CHECK(oracle::relative_error(2e-15, 0.0) == 2e-15);
  CHECK(oracle::tolerance("legendre_Q") == 1e-9);
  CHECK(oracle::tolerance("kummer_u_dz") == 1e-9);
  CHECK(oracle::tolerance("bessel_J0") == 1e-10);
  CHECK(oracle::known("jacobi_type_S2"));
  CHECK_FALSE(oracle::known("no_such_function"));
  CHECK_THROWS_AS(oracle::load("/nonexistent/table.csv"), DomainError);
}

TEST_CASE("bessel-type spectral parameter and coefficients") {
  CHECK(bessel_type::lambda_cap(0.0, 2.0) == 0.0);
  CHECK(bessel_type::lambda_cap(1.0, 1.0) == 9.0);
  CHECK(bessel_type::lambda_cap(-1.7, 0.3) == bessel_type::lambda_cap(1.7, 0.3));
  CHECK_THROWS_AS(bessel_type::lambda_cap(1.0, 0.0), DomainError);
  for (double lam : {0.5, 1.0, 2.0}) {
    for (double m : {0.5, 1.0, 4.0}) {
      const bessel_type::Params p{m, lam};
      const double lhs = std::pow(0.5 * p.c() * m, 2);
      const double rhs = m * (2.0 + m * std::pow(0.5 * lam, 2));
      CHECK(rel(lhs, rhs) < 1e-14);
    }
  }
}

TEST_CASE("bessel-type solutions") {
  using bessel_type::Kind;
  for (double lam : {-2.0, 0.0, 0.5, 2.0}) {
    for (double m : {0.5, 4.0}) {
      const bessel_type::Params p{m, lam};
      CHECK(bessel_type::solution(Kind::J, p, 0.0).value == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(bessel_type::solution(Kind::I, p, 0.0).value == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(bessel_type::solution(Kind::J, p, 1e-9).value - 1.0) < 1e-9);
    }
  }
  // Continuity through the series switch at k x = 2.
  const bessel_type::Params p{1.0, 1.0};
  for (auto kind : {Kind::J, Kind::I}) {
    const double k = kind == Kind::J ? 1.0 : p.c();
    const double lo = bessel_type::solution(kind, p, 2.0 / k - 1e-9).value;
    const double hi = bessel_type::solution(kind, p, 2.0 / k + 1e-9).value;
    CHECK(std::abs(hi - lo) < 1e-8 * std::abs(lo));
  }
  // Small lambda approaches the lambda = 0 limit smoothly.
  CHECK(std::abs(bessel_type::solution(Kind::J, {1.0, 1e-10}, 3.0).value -
                 bessel_type::solution(Kind::J, {1.0, 0.0}, 3.0).value) < 1e-12);
  CHECK(bessel_type::solution(Kind::J, {1.0, 0.0}, 3.0).value == 1.0);
  CHECK_THROWS_AS(bessel_type::solution(Kind::Y, {1.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_type::solution(Kind::K, p, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_type::solution(Kind::J, p, -0.1), DomainError);
  CHECK_THROWS_AS(bessel_type::solution(Kind::J, {0.0, 1.0}, 1.0), DomainError);
  CHECK(bessel_type::solution(Kind::Y, {1.0, -1.5}, 2.0).value ==
        bessel_type::solution(Kind::Y, {1.0, 1.5}, 2.0).value);
  CHECK(bessel_type::parse_kind("K") == Kind::K);
  CHECK_THROWS_AS(bessel_type::parse_kind("Z"), DomainError);
}

TEST_CASE("bessel-type derivatives match differences") {
  using bessel_type::Kind;
  for (auto kind : {Kind::J, Kind::Y, Kind::I, Kind::K}) {
    for (double x : {0.3, 1.0, 1.9, 2.1, 4.5, 9.0}) {
      const bessel_type::Params p{0.7, 1.3};
      check_derivs([&](double t) { return bessel_type::solution_derivs(kind, p, t, 3); }, x, 1e-3);
    }
    const auto d0 = bessel_type::solution_derivs(kind, {1.0, 1.0}, 1.0, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == bessel_type::solution(kind, {1.0, 1.0}, 1.0).value);
  }
  CHECK_THROWS_AS(bessel_type::solution_derivs(Kind::J, {1.0, 1.0}, 1.0, 4), DomainError);
}

TEST_CASE("laguerre-type Gamma and solutions") {
  CHECK(laguerre_type::gamma_la(0.0, 1.0) == 3.0);
  CHECK(laguerre_type::gamma_la(-2.25, 1.0) == 0.0);
  CHECK(laguerre_type::gamma_la(2.0, 0.5) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
  CHECK_THROWS_AS(laguerre_type::gamma_la(-3.0, 1.0), DomainError);
  const laguerre_type::Params p{1.0, 1.0};
  CHECK_THROWS_AS(laguerre_type::solution_L(1, p, 0.0), DomainError);
  CHECK_THROWS_AS(laguerre_type::solution_L(5, p, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre_type::solution_L(1, p, laguerre_type::kXMax + 1.0), OverflowError);
  CHECK_THROWS_AS(laguerre_type::solution_L(1, {0.0, 1.0}, 1.0), DomainError);
  // Gamma -> -Gamma exchanges L1 with L2 and L3 with L4.
  const double g = laguerre_type::gamma_la(p.lambda, p.A);
  for (double x : {0.5, 2.0, 4.0}) {
    CHECK(laguerre_type::formula_with_gamma(false, -g, p, x).value ==
          laguerre_type::solution_L(2, p, x).value);
    CHECK(laguerre_type::formula_with_gamma(true, -g, p, x).value ==
          laguerre_type::solution_L(4, p, x).value);
  }
  CHECK(laguerre_type::degenerate({1.0, 0.0}));
  CHECK_FALSE(laguerre_type::degenerate({1.0, 1.0}));
  for (int r = 1; r <= 4; ++r) {
    for (double x : {0.5, 1.7, 5.0}) {
      check_derivs([&](double t) { return laguerre_type::solution_L_derivs(r, {0.5, 5.0}, t, 3); }, x, 1e-3);
    }
  }
}

TEST_CASE("legendre-type Gamma, Omega and degree") {
  using legendre_type::Sign;
  const auto a = legendre_type::gamma_omega(Sign::plus, 0.0, 1.0);
  CHECK(a.gamma == 1.0);
  CHECK(a.omega == 1.0);
  CHECK_THROWS_AS(legendre_type::gamma_omega(Sign::minus, 0.0, 1.0), DomainError);
  const auto b = legendre_type::gamma_omega(Sign::plus, 3.0, 1.0);
  CHECK(b.gamma == 2.0);
  CHECK(b.omega == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  // nu (nu + 1) = 2 - 2A + Gamma + Omega.
  const double nu = legendre_type::degree(Sign::plus, 3.0, 1.0);
  CHECK(nu * (nu + 1.0) == doctest::Approx(2.0 - 2.0 + b.gamma + b.omega).epsilon(1e-14));
  CHECK(legendre_type::sign_of(2) == Sign::minus);
  CHECK(legendre_type::sign_of(3) == Sign::plus);
}

TEST_CASE("legendre-type bracket and the removable singularity") {
  using legendre_type::Sign;
  CHECK(std::abs(legendre_type::bracket_factor(Sign::plus, -8.0, 1.0, 0.3)) < 1e-10);
  CHECK(std::abs(legendre_type::bracket_factor(Sign::minus, -8.0, 1.0, -0.7)) < 1e-10);
  // (+, 0, 1, 0): -(0 + 3 - 4 + 4) + 1 - 3 + 1 = -4.
  CHECK(legendre_type::bracket_factor(Sign::plus, 0.0, 1.0, 0.0).real() == doctest::Approx(-4.0));
  // Values converge as lambda approaches -(4A + 4A^2); the branch is real for A <= 1/8.
  const double A = 0.1, star = -(4.0 * A + 4.0 * A * A);
  for (int r : {1, 3}) {
    double prev = legendre_type::solution_Le(r, {A, star + 1e-3}, 0.4).value;
    for (double eps : {1e-4, 1e-5, 1e-6, 1e-7}) {
      const double v = legendre_type::solution_Le(r, {A, star + eps}, 0.4).value;
      CHECK(std::abs(v - prev) < 1e-3 * std::max(1.0, std::abs(v)));
      prev = v;
    }
    const double at = legendre_type::solution_Le(r, {A, star}, 0.4).value;
    const double below = legendre_type::solution_Le(r, {A, star - 1e-5}, 0.4).value;
    const double above = legendre_type::solution_Le(r, {A, star + 1e-5}, 0.4).value;
    CHECK(std::abs(at - 0.5 * (below + above)) < 1e-6 * std::max(1.0, std::abs(at)));
  }
}

TEST_CASE("legendre-type solutions and derivatives") {
  CHECK_THROWS_AS(legendre_type::solution_Le(1, {1.0, 1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(legendre_type::solution_Le(2, {1.0, 1.0}, 0.2), DomainError);
  CHECK_THROWS_AS(legendre_type::solution_Le(0, {1.0, 1.0}, 0.2), DomainError);
  for (int r = 1; r <= 4; ++r) {
    const legendre_type::Params p{0.25, 0.2};
    for (double x = -0.9; x <= 0.9; x += 0.3) {
      const auto d = legendre_type::solution_Le_derivs(r, p, x, 3);
      for (double v : d) CHECK(std::isfinite(v));
      check_derivs([&](double t) { return legendre_type::solution_Le_derivs(r, p, t, 3); }, x, 1e-4);
    }
  }
}

TEST_CASE("jacobi-type eigenvalues and quartic roots") {
  CHECK(jacobi_type::eigenvalue(0, 0.7, 2.0) == 0.0);
  CHECK(jacobi_type::eigenvalue(1, 0.0, 1.0) == 12.0);
  // 2 (3.5) (4 + 3 + 4 sqrt 2 + 0.5)
  CHECK(jacobi_type::eigenvalue(2, 0.5, 1.0) ==
        doctest::Approx(7.0 * (7.5 + 4.0 * std::sqrt(2.0))).epsilon(1e-14));
  const auto r0 = jacobi_type::quartic_roots(0.0, 1.0, 0.0);
  bool has0 = false, has_m1 = false;
  for (auto rho : r0.rho) {
    has0 = has0 || std::abs(rho) < 1e-12;
    has_m1 = has_m1 || std::abs(rho + 1.0) < 1e-12;
  }
  CHECK(has0);
  CHECK(has_m1);
  CHECK_THROWS_AS(jacobi_type::quartic_roots(0.0, 1.0, -10.0), ComplexXiError);
  // xi = 0 makes rho_1 = rho_3.
  const double K = 4.0 * 1.0;
  const auto d = jacobi_type::quartic_roots(0.0, 1.0, -K * K / 4.0);
  CHECK(d.degenerate);
  CHECK_FALSE(jacobi_type::quartic_roots(0.5, 1.0, 2.0).degenerate);
  const auto c = jacobi_type::quartic_roots(0.5, 1.0, 2.0);
  CHECK(c.is_real(1));
  CHECK_FALSE(c.is_real(3));
}

TEST_CASE("jacobi-type polynomial solutions") {
  for (double alpha : {-0.5, 0.0, 1.5}) {
    for (double x : {-0.9, 0.0, 0.7, 1.0}) {
      CHECK(jacobi_type::solution_S1(0, alpha, 1.3, x).value ==
            doctest::Approx(2.0 * 1.3 * std::pow(2.0, alpha)).epsilon(1e-14));
    }
  }
  CHECK(jacobi_type::solution_S1(1, 0.0, 1.0, 0.5).value == doctest::Approx(2.5).epsilon(1e-15));
  // S1,n is a polynomial of degree n: its (n+1)-th difference vanishes.
  for (int n = 0; n <= 5; ++n) {
    const double h = 0.1;
    double diff = 0.0;
    for (int k = 0; k <= n + 1; ++k) {
      const double binom = std::tgamma(n + 2.0) / (std::tgamma(k + 1.0) * std::tgamma(n + 2.0 - k));
      diff += ((k % 2) ? -1.0 : 1.0) * binom * jacobi_type::solution_S1(n, 0.5, 1.0, -0.4 + k * h).value;
    }
    CHECK(std::abs(diff) < 1e-9);
  }
  for (int n = 0; n <= 4; ++n) {
    for (double x : {-0.6, 0.1, 0.5}) {
      check_derivs([&](double t) { return jacobi_type::solution_S1_derivs(n, 0.5, 1.0, t, 3); }, x, 1e-3);
      check_derivs([&](double t) { return jacobi_type::solution_S2_derivs(n, 0.5, 1.0, t, 3); }, x, 1e-3);
    }
  }
  CHECK_THROWS_AS(jacobi_type::solution_S2(1, 0.5, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(jacobi_type::solution_S1(1, -1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("jacobi-type J1 is proportional to S1 at an eigenvalue") {
  for (int n = 1; n <= 4; ++n) {
    const double alpha = 0.5, A = 1.0;
    const jacobi_type::Params p{alpha, A, jacobi_type::eigenvalue(n, alpha, A)};
    const double ratio0 = jacobi_type::solution_Jcal(1, p, -0.5).value /
                          jacobi_type::solution_S1(n, alpha, A, -0.5).value;
    for (double x : {-0.2, 0.3, 0.8}) {
      const double ratio = jacobi_type::solution_Jcal(1, p, x).value /
                           jacobi_type::solution_S1(n, alpha, A, x).value;
      CHECK(rel(ratio, ratio0) < 1e-10);
    }
  }
}

TEST_CASE("jacobi-type solution degeneracy") {
  CHECK(jacobi_type::jcal_degeneracy({0.5, 1.0, 2.0}).empty());
  CHECK_FALSE(jacobi_type::jcal_degeneracy({1.0, 1.0, 2.0}).empty());
  CHECK_FALSE(jacobi_type::jcal_degeneracy({0.0, 1.0, 2.0}).empty());
  CHECK_FALSE(jacobi_type::jcal_degeneracy({0.0, 1.0, -4.0}).empty());
  for (int r = 1; r <= 4; ++r) {
    for (double x : {-0.5, 0.2}) {
      check_derivs([&](double t) { return jacobi_type::solution_Jcal_derivs(r, {0.5, 1.0, 7.0}, t, 3); }, x, 1e-3);
    }
  }
  CHECK_THROWS_AS(jacobi_type::solution_Jcal(0, {0.5, 1.0, 7.0}, 0.2), DomainError);
}

TEST_CASE("orthogonality measure") {
  const jacobi_type::JacobiMeasure m{0.0, 1.0};
  CHECK(jacobi_type::mu_hat(-2.0, m) == -0.5);
  CHECK(jacobi_type::mu_hat(-1.0, m) == 0.0);
  CHECK(jacobi_type::mu_hat(2.0, m) == doctest::Approx(1.0).epsilon(1e-15));
  // Monotone and continuous from the right.
  const jacobi_type::JacobiMeasure m2{0.5, 2.0};
  double prev = jacobi_type::mu_hat(-3.0, m2);
  for (double x = -2.5; x <= 3.0; x += 0.05) {
    const double v = jacobi_type::mu_hat(x, m2);
    CHECK(v >= prev);
    prev = v;
  }
  // Total mass: 1/2 + (A/2) 2^(alpha+1)/(alpha+1).
  auto one = [](double) { return 1.0; };
  const double mass = jacobi_type::inner_product(one, one, m2, 0);
  CHECK(mass == doctest::Approx(0.5 + 1.0 * std::pow(2.0, 1.5) / 1.5).epsilon(1e-14));
  CHECK(jacobi_type::mu_hat(5.0, m2) - jacobi_type::mu_hat(-5.0, m2) == doctest::Approx(mass).epsilon(1e-14));
  auto bad = [](double) { return std::nan(""); };
  CHECK_THROWS_AS(jacobi_type::inner_product(bad, one, m2, 2), QuadratureError);
}

TEST_CASE("gauss-jacobi rules") {
  for (double alpha : {-0.5, 0.0, 0.5, 2.0}) {
    for (int n : {1, 3, 8, 20}) {
      const auto rule = gauss_jacobi(n, alpha);
      REQUIRE(rule->nodes.size() == std::size_t(n));
      double w = 0.0, m1 = 0.0;
      for (int i = 0; i < n; ++i) {
        w += rule->weights[i];
        m1 += rule->weights[i] * rule->nodes[i];
      }
      // int (1-x)^alpha dx = 2^(alpha+1)/(alpha+1); int x (1-x)^alpha dx = -2^(alpha+1)/((alpha+1)(alpha+2)) * alpha
      const double w_exact = std::pow(2.0, alpha + 1.0) / (alpha + 1.0);
      CHECK(rel(w, w_exact) < 1e-13);
      if (n >= 2) {
        const double m1_exact = -alpha * std::pow(2.0, alpha + 1.0) / ((alpha + 1.0) * (alpha + 2.0));
        CHECK(std::abs(m1 - m1_exact) < 1e-13 * w_exact);
      }
    }
  }
  CHECK(gauss_jacobi(5, 0.5) == gauss_jacobi(5, 0.5));
  CHECK_THROWS_AS(gauss_jacobi(0, 0.5), DomainError);
  CHECK_THROWS_AS(gauss_jacobi(4, -1.0), DomainError);
}
