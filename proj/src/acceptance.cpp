#include "qsf/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "qsf/bessel_type.hpp"
#include "qsf/jacobi_type.hpp"
#include "qsf/laguerre_type.hpp"
#include "qsf/legendre_type.hpp"
#include "qsf/oracle_table.hpp"

namespace qsf::acceptance {

namespace {

using verifier::CheckReport;
using verifier::DerivProvider;
using verifier::Family;
using verifier::Form;
using verifier::make_check;
using verifier::OperatorSpec;
using verifier::ParamCell;
using verifier::SolutionFactory;
using verifier::Verdict;

constexpr double kResidualTol = 1e-6;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

CheckReport excluded(std::string name, std::string inputs, double tol, std::string why,
                     std::string relation = "<=") {
  CheckReport c = make_check(std::move(name), std::move(inputs), kNaN, tol, std::move(relation));
  c.verdict = Verdict::excluded;
  c.detail = std::move(why);
  return c;
}

CheckReport failed(std::string name, std::string inputs, double tol, std::string why,
                   std::string relation = "<=") {
  CheckReport c = make_check(std::move(name), std::move(inputs), kNaN, tol, std::move(relation));
  c.verdict = Verdict::fail;
  c.detail = std::move(why);
  return c;
}

void append(std::vector<CheckReport>& to, const std::vector<CheckReport>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// ---- grids ----------------------------------------------------------------

const std::vector<double> kBesselLambda = {0.5, 1.0, 2.0};
const std::vector<double> kBesselM = {0.5, 1.0, 4.0};
const std::vector<double> kLaguerreA = {0.5, 1.0, 2.0};
const std::vector<double> kLaguerreLambda = {0.0, 1.0, 5.0};
const std::vector<double> kLegendreA = {0.5, 1.0};
const std::vector<double> kLegendreLambda = {1.0, 5.0};
const std::vector<double> kJacobiAlpha = {-0.5, 0.0, 0.5, 1.0};
const std::vector<double> kJacobiA = {0.5, 1.0, 2.0};
const std::vector<double> kJcalAlpha = {0.5, 1.0};
const std::vector<double> kJcalLambda = {2.0, 7.0};
// Non-integer alpha cells added to the independence check.
const std::vector<double> kJcalExtraAlpha = {-0.5, 0.0, 2.5};
// Extra Legendre-type cells where the minus branch is real, so that Le2
// and Le4 are exercised at all.
const std::vector<std::pair<double, double>> kLegendreExtra = {{0.25, 0.1}, {0.25, 0.2}, {0.5, 0.05}};

std::vector<ParamCell> bessel_cells() {
  std::vector<ParamCell> cells;
  for (double lam : kBesselLambda) {
    for (double m : kBesselM) {
      ParamCell c;
      c.params.M = m;
      c.spectral = bessel_type::lambda_cap(lam, m);
      c.label = "lambda=" + num(lam) + " M=" + num(m);
      cells.push_back(c);
    }
  }
  return cells;
}

double bessel_lambda(const ParamCell& c) {
  // Recovers lambda > 0 from Lambda = lambda^2 (lambda^2 + 8/M).
  const double b = 8.0 / c.params.M;
  const double l2 = 0.5 * (-b + std::sqrt(b * b + 4.0 * c.spectral));
  return std::sqrt(l2);
}

std::vector<SolutionFactory> bessel_solutions() {
  std::vector<SolutionFactory> out;
  for (auto kind : {bessel_type::Kind::J, bessel_type::Kind::Y, bessel_type::Kind::I,
                    bessel_type::Kind::K}) {
    out.push_back({bessel_type::kind_name(kind), [kind](const ParamCell& c) -> DerivProvider {
                     const bessel_type::Params p{c.params.M, bessel_lambda(c)};
                     return [=](double x) { return bessel_type::solution_derivs(kind, p, x, 3); };
                   }});
  }
  return out;
}

std::vector<ParamCell> laguerre_cells() {
  std::vector<ParamCell> cells;
  for (double a : kLaguerreA) {
    for (double lam : kLaguerreLambda) {
      ParamCell c;
      c.params.A = a;
      c.spectral = lam;
      c.label = "A=" + num(a) + " lambda=" + num(lam);
      cells.push_back(c);
    }
  }
  return cells;
}

SolutionFactory laguerre_solution(int r) {
  return {"L" + std::to_string(r), [r](const ParamCell& c) -> DerivProvider {
            const laguerre_type::Params p{c.params.A, c.spectral};
            return [=](double x) { return laguerre_type::solution_L_derivs(r, p, x, 3); };
          }};
}

ParamCell legendre_cell(double a, double lam) {
  ParamCell c;
  c.params.A = a;
  c.spectral = lam;
  c.label = "A=" + num(a) + " lambda=" + num(lam);
  return c;
}

SolutionFactory legendre_solution(int r) {
  return {"Le" + std::to_string(r), [r](const ParamCell& c) -> DerivProvider {
            const legendre_type::Params p{c.params.A, c.spectral};
            return [=](double x) { return legendre_type::solution_Le_derivs(r, p, x, 3); };
          }};
}

// Empty when the branch of Le_r is real at (A, lambda), else the reason.
std::string legendre_inadmissible(int r, double a, double lam) {
  try {
    legendre_type::degree(legendre_type::sign_of(r), lam, a);
    return {};
  } catch (const DomainError& e) {
    return e.what();
  }
}

ParamCell jacobi_cell(double alpha, double a, double lam) {
  ParamCell c;
  c.params.alpha = alpha;
  c.params.A = a;
  c.spectral = lam;
  c.label = "alpha=" + num(alpha) + " A=" + num(a) + " lambda=" + num(lam);
  return c;
}

SolutionFactory jcal_solution(int r) {
  return {"Jcal" + std::to_string(r), [r](const ParamCell& c) -> DerivProvider {
            const jacobi_type::Params p{c.params.alpha, c.params.A, c.spectral};
            return [=](double x) { return jacobi_type::solution_Jcal_derivs(r, p, x, 3); };
          }};
}

OperatorSpec spec_of(Family f, Form form) {
  OperatorSpec s;
  s.family = f;
  s.form = form;
  return s;
}

// ---- criteria -------------------------------------------------------------

std::vector<CheckReport> criterion1(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckReport> out =
      verifier::grid_report(spec_of(Family::bessel, Form::lagrange), bessel_solutions(),
                            bessel_cells(), verifier::linspace(0.2, 10.0, 20), kResidualTol,
                            opt.threads);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.push_back(make_check("bessel_residual_runtime_seconds", "grid of 720 residuals", secs,
                           kCriterion1Seconds));
  return out;
}

std::vector<CheckReport> criterion2() {
  std::vector<CheckReport> out;
  for (double lam : kBesselLambda) {
    for (double m : kBesselM) {
      const bessel_type::Params p{m, lam};
      for (auto kind : {bessel_type::Kind::J, bessel_type::Kind::I}) {
        for (double x : {0.0, 1e-10}) {
          const std::string inputs = std::string("solution=") + bessel_type::kind_name(kind) +
                                     " lambda=" + num(lam) + " M=" + num(m) + " x=" + num(x);
          try {
            const double v = bessel_type::solution(kind, p, x).value;
            out.push_back(make_check("bessel_boundary_value", inputs, std::abs(v - 1.0), 1e-9));
          } catch (const std::exception& e) {
            out.push_back(failed("bessel_boundary_value", inputs, 1e-9, e.what()));
          }
        }
      }
    }
  }
  return out;
}

std::vector<CheckReport> criterion3(const Options& opt) {
  std::vector<SolutionFactory> sols;
  for (int r = 1; r <= 4; ++r) sols.push_back(laguerre_solution(r));
  const std::vector<double> xs = verifier::linspace(0.5, 5.0, 15);
  std::vector<CheckReport> out = verifier::grid_report(
      spec_of(Family::laguerre, Form::frobenius), sols, laguerre_cells(), xs, kResidualTol, opt.threads);
  for (const ParamCell& c : laguerre_cells()) {
    const laguerre_type::Params p{c.params.A, c.spectral};
    for (int r : {2, 4}) {
      const std::string inputs = "L" + std::to_string(r) + " vs L" + std::to_string(r - 1) +
                                 " with Gamma -> -Gamma " + c.label;
      try {
        const double g = laguerre_type::gamma_la(p.lambda, p.A);
        double worst = 0.0;
        for (double x : xs) {
          const double lhs = laguerre_type::solution_L(r, p, x).value;
          const double rhs = laguerre_type::formula_with_gamma(r == 4, -g, p, x).value;
          worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
        }
        out.push_back(make_check("laguerre_gamma_swap", inputs, worst, 1e-12));
      } catch (const std::exception& e) {
        out.push_back(failed("laguerre_gamma_swap", inputs, 1e-12, e.what()));
      }
    }
  }
  return out;
}

std::vector<CheckReport> criterion4(const Options& opt) {
  std::vector<CheckReport> out;
  const OperatorSpec spec = spec_of(Family::legendre, Form::frobenius);
  const std::vector<double> xs = verifier::linspace(-0.8, 0.8, 15);
  auto run_cell = [&](int r, double a, double lam, const std::string& tag) {
    const std::string why = legendre_inadmissible(r, a, lam);
    const ParamCell cell = legendre_cell(a, lam);
    if (!why.empty()) {
      out.push_back(excluded("legendre_residual" + tag, "solution=Le" + std::to_string(r) + " " +
                             cell.label, kResidualTol, "non-real branch: " + why));
      return;
    }
    append(out, verifier::grid_report(spec, {legendre_solution(r)}, {cell}, xs, kResidualTol,
                                      opt.threads));
    if (!tag.empty()) out.back().name += tag;
  };
  for (int r = 1; r <= 4; ++r) {
    for (double a : kLegendreA) {
      for (double lam : kLegendreLambda) run_cell(r, a, lam, "");
    }
  }
  for (int r = 1; r <= 4; ++r) {
    for (auto [a, lam] : kLegendreExtra) run_cell(r, a, lam, "_extra_cell");
  }
  for (double a : kLegendreA) {
    const double star = -(4.0 * a + 4.0 * a * a);
    for (auto sign : {legendre_type::Sign::plus, legendre_type::Sign::minus}) {
      double worst = 0.0;
      for (double x : xs) worst = std::max(worst, std::abs(legendre_type::bracket_factor(sign, star, a, x)));
      out.push_back(make_check("legendre_bracket_zero",
                               std::string("sign=") + (sign == legendre_type::Sign::plus ? "+" : "-") +
                                   " A=" + num(a) + " lambda=" + num(star),
                               worst, 1e-10));
    }
  }
  return out;
}

std::vector<CheckReport> criterion5() {
  std::vector<CheckReport> out;
  for (double alpha : kJacobiAlpha) {
    for (double a : kJacobiA) {
      std::vector<double> lambdas;
      double worst_slice = 0.0, worst_match = 0.0;
      for (int n = 0; n <= 6; ++n) {
        const double lam = jacobi_type::eigenvalue(n, alpha, a);
        lambdas.push_back(lam);
        const double scale = std::max(1.0, std::abs(lam));
        worst_slice = std::max(worst_slice, std::abs(jacobi_type::quartic(double(n), alpha, a, lam)) / scale);
        const auto roots = jacobi_type::quartic_roots(alpha, a, lam);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& rho : roots.rho) best = std::min(best, std::abs(rho - double(n)));
        worst_match = std::max(worst_match, best);
      }
      const std::string cell = "alpha=" + num(alpha) + " A=" + num(a);
      out.push_back(make_check("jacobi_eigen_slice", cell + " n=0..6", worst_slice, 1e-9));
      out.push_back(make_check("jacobi_root_equals_n", cell + " n=0..6", worst_match, 1e-9));
      lambdas.insert(lambdas.end(), {-0.1, 2.0, 7.0, 100.0});
      double worst_sum = 0.0, worst_prod = 0.0, worst_root = 0.0;
      for (double lam : lambdas) {
        try {
          const auto roots = jacobi_type::quartic_roots(alpha, a, lam);
          std::complex<double> sum = 0.0, prod = 1.0;
          const double scale = std::max(1.0, std::abs(lam));
          for (const auto& rho : roots.rho) {
            sum += rho;
            prod *= rho;
            worst_root = std::max(worst_root, std::abs(jacobi_type::quartic(rho, alpha, a, lam)) / scale);
          }
          worst_sum = std::max(worst_sum, std::abs(sum + 2.0 * (alpha + 1.0)));
          worst_prod = std::max(worst_prod, std::abs(prod + lam) / scale);
        } catch (const ComplexXiError&) {
          // lambda = -0.1 can make xi complex for small A; not part of the identity.
        }
      }
      out.push_back(make_check("jacobi_vieta_sum", cell, worst_sum, 1e-9));
      out.push_back(make_check("jacobi_vieta_product", cell, worst_prod, 1e-9));
      out.push_back(make_check("jacobi_root_residual", cell, worst_root, 1e-9));
    }
  }
  return out;
}

std::vector<CheckReport> criterion6(const Options& opt) {
  const OperatorSpec spec = spec_of(Family::jacobi, Form::frobenius);
  const std::vector<double> xs = verifier::linspace(-0.6, 0.6, 13);
  std::vector<SolutionFactory> poly;
  for (int n = 0; n <= 4; ++n) {
    poly.push_back({"S1," + std::to_string(n), [n](const ParamCell& c) -> DerivProvider {
                      const double al = c.params.alpha, a = c.params.A;
                      return [=](double x) { return jacobi_type::solution_S1_derivs(n, al, a, x, 3); };
                    }});
    poly.push_back({"S2," + std::to_string(n), [n](const ParamCell& c) -> DerivProvider {
                      const double al = c.params.alpha, a = c.params.A;
                      return [=](double x) { return jacobi_type::solution_S2_derivs(n, al, a, x, 3); };
                    }});
  }
  std::vector<CheckReport> out;
  // S_{i,n} is a solution only at lambda_n, so each n gets its own cells.
  for (const SolutionFactory& s : poly) {
    const int n = std::stoi(s.name.substr(3));
    std::vector<ParamCell> cells;
    for (double alpha : kJacobiAlpha) {
      for (double a : kJacobiA) {
        cells.push_back(jacobi_cell(alpha, a, jacobi_type::eigenvalue(n, alpha, a)));
      }
    }
    append(out, verifier::grid_report(spec, {s}, cells, xs, kResidualTol, opt.threads));
  }
  std::vector<SolutionFactory> jcal;
  for (int r = 1; r <= 4; ++r) jcal.push_back(jcal_solution(r));
  std::vector<ParamCell> cells;
  for (double alpha : kJcalAlpha) {
    for (double lam : kJcalLambda) cells.push_back(jacobi_cell(alpha, 1.0, lam));
  }
  append(out, verifier::grid_report(spec, jcal, cells, xs, kResidualTol, opt.threads));
  return out;
}

std::vector<CheckReport> criterion7() {
  std::vector<CheckReport> out;
  for (double alpha : kJacobiAlpha) {
    for (double a : kJacobiA) {
      const jacobi_type::JacobiMeasure m{alpha, a};
      std::vector<std::function<double(double)>> s;
      for (int n = 0; n <= 5; ++n) {
        s.push_back([=](double x) { return jacobi_type::solution_S1(n, alpha, a, x).value; });
      }
      std::vector<double> norm2(6);
      for (int n = 0; n <= 5; ++n) {
        norm2[n] = jacobi_type::inner_product(s[n], s[n], m, n);
        out.push_back(make_check("jacobi_norm_positive",
                                 "n=" + std::to_string(n) + " alpha=" + num(alpha) + " A=" + num(a),
                                 norm2[n], 0.0, ">"));
      }
      double worst = 0.0;
      for (int i = 0; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
          const double ip = jacobi_type::inner_product(s[i], s[j], m, j);
          worst = std::max(worst, std::abs(ip) / std::sqrt(norm2[i] * norm2[j]));
        }
      }
      out.push_back(make_check("jacobi_orthogonality",
                               "0<=m<n<=5 alpha=" + num(alpha) + " A=" + num(a), worst, 1e-8));
    }
  }
  return out;
}

CheckReport wronskian_check(const std::string& family, const std::string& inputs,
                            const std::array<DerivProvider, 4>& sols, double x) {
  const std::string name = family + "_wronskian";
  try {
    const double det = verifier::wronskian(sols, x);
    return make_check(name, inputs + " x=" + num(x), std::abs(det), 1e-8, ">");
  } catch (const std::exception& e) {
    return failed(name, inputs + " x=" + num(x), 1e-8, e.what(), ">");
  }
}

std::vector<CheckReport> criterion8() {
  std::vector<CheckReport> out;
  for (const ParamCell& c : bessel_cells()) {
    std::array<DerivProvider, 4> sols;
    const auto factories = bessel_solutions();
    for (int i = 0; i < 4; ++i) sols[i] = factories[i].make(c);
    out.push_back(wronskian_check("bessel", c.label, sols, 1.0));
  }
  for (const ParamCell& c : laguerre_cells()) {
    if (laguerre_type::degenerate({c.params.A, c.spectral})) {
      out.push_back(excluded("laguerre_wronskian", c.label + " x=1", 1e-8,
                             "U(a,1,x) is a multiple of M(a,1,x) for a = 1/2 + A - Gamma/2 in "
                             "{0, -1, ...}; L2 and L4 are proportional",
                             ">"));
      continue;
    }
    std::array<DerivProvider, 4> sols;
    for (int r = 1; r <= 4; ++r) sols[r - 1] = laguerre_solution(r).make(c);
    out.push_back(wronskian_check("laguerre", c.label, sols, 1.0));
  }
  auto legendre_cellcheck = [&](double a, double lam, const std::string& tag) {
    const ParamCell c = legendre_cell(a, lam);
    for (int r = 1; r <= 4; ++r) {
      const std::string why = legendre_inadmissible(r, a, lam);
      if (!why.empty()) {
        out.push_back(excluded("legendre_wronskian" + tag, c.label + " x=0.3", 1e-8,
                               "Le" + std::to_string(r) + " not real: " + why, ">"));
        return;
      }
    }
    std::array<DerivProvider, 4> sols;
    for (int r = 1; r <= 4; ++r) sols[r - 1] = legendre_solution(r).make(c);
    CheckReport rep = wronskian_check("legendre", c.label, sols, 0.3);
    rep.name += tag;
    out.push_back(rep);
  };
  for (double a : kLegendreA) {
    for (double lam : kLegendreLambda) legendre_cellcheck(a, lam, "");
  }
  for (auto [a, lam] : kLegendreExtra) legendre_cellcheck(a, lam, "_extra_cell");
  auto jacobi_alphas = kJcalAlpha;
  jacobi_alphas.insert(jacobi_alphas.end(), kJcalExtraAlpha.begin(), kJcalExtraAlpha.end());
  for (double alpha : jacobi_alphas) {
    const bool extra = alpha != kJcalAlpha[0] && alpha != kJcalAlpha[1];
    for (double lam : kJcalLambda) {
      const ParamCell c = jacobi_cell(alpha, 1.0, lam);
      if (const std::string why = jacobi_type::jcal_degeneracy({alpha, 1.0, lam}); !why.empty()) {
        out.push_back(excluded("jacobi_wronskian", c.label + " x=0.3", 1e-8, why, ">"));
        continue;
      }
      std::array<DerivProvider, 4> sols;
      for (int r = 1; r <= 4; ++r) sols[r - 1] = jcal_solution(r).make(c);
      out.push_back(wronskian_check("jacobi", c.label, sols, 0.3));
      if (extra) out.back().name += "_extra_cell";
    }
  }
  return out;
}

std::vector<CheckReport> criterion9(const Options& opt) {
  std::vector<CheckReport> out;
  const std::string path = opt.oracle_path.empty() ? oracle::default_path() : opt.oracle_path;
  std::vector<oracle::Row> rows;
  try {
    rows = oracle::load(path);
  } catch (const std::exception& e) {
    out.push_back(failed("oracle_table", path, 200, e.what(), ">="));
    return out;
  }
  CheckReport count = make_check("oracle_row_count", path, double(rows.size()), 199.5, ">");
  out.push_back(count);
  for (const oracle::Row& r : rows) {
    std::string inputs = r.function;
    for (double a : r.args) {
      if (!std::isnan(a)) inputs += " " + num(a);
    }
    const double tol = oracle::tolerance(r.function);
    try {
      const double v = oracle::evaluate(r);
      out.push_back(make_check("oracle_value", inputs, oracle::relative_error(v, r.value), tol));
    } catch (const std::exception& e) {
      out.push_back(failed("oracle_value", inputs, tol, e.what()));
    }
  }
  return out;
}

// y = exp(a x) sin(b x + c) and its first four derivatives.
std::vector<double> probe(double a, double b, double c, double x) {
  std::vector<double> d(5);
  const double r = std::hypot(a, b);
  const double phi = std::atan2(b, a);
  for (int k = 0; k < 5; ++k) d[k] = std::pow(r, k) * std::exp(a * x) * std::sin(b * x + c + k * phi);
  return d;
}

std::vector<CheckReport> criterion10() {
  std::vector<CheckReport> out;
  std::mt19937_64 rng(20240229);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uni = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };
  for (Family f : {Family::bessel, Family::laguerre, Family::legendre, Family::jacobi}) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      OperatorSpec frob = spec_of(f, Form::frobenius);
      frob.params.M = uni(0.25, 4.0);
      frob.params.A = uni(0.1, 3.0);
      frob.params.alpha = uni(-0.9, 2.0);
      OperatorSpec lag = frob;
      lag.form = Form::lagrange;
      const bool half_line = f == Family::bessel || f == Family::laguerre;
      const double x = half_line ? uni(0.1, 10.0) : uni(-0.95, 0.95);
      const std::vector<double> v = probe(uni(-1.0, 1.0), uni(0.5, 3.0), uni(0.0, std::numbers::pi), x);
      const std::array<double, 5> d{v[0], v[1], v[2], v[3], v[4]};
      // The Lagrange form carries the weight ratio w_lagrange / w_frobenius.
      const double ratio = lag.weight(x) / frob.weight(x);
      const double l = lag.apply(d, x);
      const double fr = ratio * frob.apply(d, x);
      worst = std::max(worst, std::abs(l - fr) / std::max({std::abs(l), std::abs(fr), 1e-300}));
    }
    out.push_back(make_check("form_equivalence", std::string(verifier::family_name(f)) + " 50 probes",
                             worst, 1e-8));
  }
  return out;
}

const char* title(int id) {
  switch (id) {
    case 1: return "Bessel-type residuals and runtime";
    case 2: return "Bessel-type boundary values at x = 0";
    case 3: return "Laguerre-type residuals and Gamma-swap symmetry";
    case 4: return "Legendre-type residuals and bracket zeros";
    case 5: return "Jacobi-type eigenvalues, quartic roots and Vieta identities";
    case 6: return "Jacobi-type residuals";
    case 7: return "Jacobi-type orthogonality";
    case 8: return "Linear independence (scaled Wronskians)";
    case 9: return "Kernel and family oracle values";
    case 10: return "Frobenius/Lagrange form equivalence";
  }
  return "?";
}

}  // namespace

bool CriterionResult::pass() const { return failed() == 0; }

int CriterionResult::failed() const {
  int n = 0;
  for (const auto& c : checks) n += c.verdict == Verdict::fail;
  return n;
}

int CriterionResult::excluded() const {
  int n = 0;
  for (const auto& c : checks) n += c.verdict == Verdict::excluded;
  return n;
}

CriterionResult run_criterion(int id, const Options& opt) {
  if (id < 1 || id > kCriteria) throw DomainError("acceptance: criterion must be in 1..10");
  CriterionResult res;
  res.id = id;
  res.title = title(id);
  const auto start = std::chrono::steady_clock::now();
  switch (id) {
    case 1: res.checks = criterion1(opt); break;
    case 2: res.checks = criterion2(); break;
    case 3: res.checks = criterion3(opt); break;
    case 4: res.checks = criterion4(opt); break;
    case 5: res.checks = criterion5(); break;
    case 6: res.checks = criterion6(opt); break;
    case 7: res.checks = criterion7(); break;
    case 8: res.checks = criterion8(); break;
    case 9: res.checks = criterion9(opt); break;
    case 10: res.checks = criterion10(); break;
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CriterionResult> run_all(const Options& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, opt));
  return out;
}

CheckReport suite_runtime_check(double seconds) {
  return make_check("suite_runtime_seconds", "all criteria", seconds, kSuiteSeconds);
}

}  // namespace qsf::acceptance
