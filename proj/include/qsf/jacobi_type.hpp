#pragma once

// Solutions of the Jacobi-type equation (beta = 0)
//   ((1-x)^(alpha+2) (1+x)^2 y'')'' - ((1-x)^(alpha+1) ((K+2alpha+2)x + K+2alpha+6) y')'
//     = lambda (1-x)^alpha y,   K = 4A 2^alpha,  -1 < x < 1,
// its polynomial eigenfunctions and their orthogonality measure.

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qsf/eval_result.hpp"

namespace qsf::jacobi_type {

struct Params {
  double alpha = 0.0;
  double A = 1.0;
  double lambda = 0.0;

  /// Throws DomainError unless alpha > -1, A > 0 and lambda is finite.
  void validate() const;
};

/// Roots closer than this (and |xi| below it) count as coincident.
inline constexpr double kDegenerateTol = 1e-8;

struct QuarticRoots {
  double xi = 0.0;
  std::array<std::complex<double>, 4> rho{};
  /// True when two roots coincide within kDegenerateTol.
  bool degenerate = false;

  bool is_real(int r) const { return rho[r - 1].imag() == 0.0; }
};

/// lambda_n = n (n + alpha + 1) (n^2 + (alpha+1) n + 4A 2^alpha + alpha).
double eigenvalue(int n, double alpha, double A);

/// rho (rho + alpha + 1) (rho^2 + (alpha+1) rho + 4A 2^alpha + alpha) - lambda.
std::complex<double> quartic(std::complex<double> rho, double alpha, double A, double lambda);

/// xi = sqrt(alpha^2 + 8 alpha A 2^alpha + 16 A^2 2^(2 alpha) + 4 lambda) and
///   rho_{1,2} = (-alpha - 1 +- sqrt(alpha^2 + 1 - 8A 2^alpha + 2 xi)) / 2,
///   rho_{3,4} = (-alpha - 1 +- sqrt(alpha^2 + 1 - 8A 2^alpha - 2 xi)) / 2.
/// ComplexXiError when the radicand of xi is negative.
QuarticRoots quartic_roots(double alpha, double A, double lambda);

/// S_{1,n} = (n alpha + 2A 2^alpha + n + n^2) JP(n, alpha, 0; x) + (1-x) JP'(n, alpha, 0; x).
EvalResult solution_S1(int n, double alpha, double A, double x);

/// S_{2,n} = (1-x)^-alpha [C F(x) + (1-x) F'(x)], C = (n+1) alpha + A 2^(alpha+1) + n + n^2,
/// where F is the Jacobi function of degree -1-n and parameter -alpha
/// regular at x = 1 and normalized to F(1) = 1.
EvalResult solution_S2(int n, double alpha, double A, double x);

/// The four solutions built on the roots rho_1 (r = 1, 3) and rho_3 (r = 2, 4):
///   J1 = (alpha - xi)/2 F1 - (1-x) F1',  J2 = (alpha + xi)/2 F3 - (1-x) F3',
///   J3 = (1-x)^-alpha [-(alpha + xi)/2 G1 - (1-x) G1'],
///   J4 = (1-x)^-alpha [-(alpha - xi)/2 G3 - (1-x) G3'],
/// with F_r = JP(rho_r, alpha, 0; .) and G_r = JP(-1-rho_r, -alpha, 0; .).
/// When rho_r is not real, or the Gamma prefactor of JP is singular or
/// zero, F_r and G_r are replaced by the real Jacobi functions of the same
/// eigenvalue regular at x = 1.
EvalResult solution_Jcal(int r, const Params& p, double x);

/// Empty when J1..J4 are independent at p, otherwise the reason they are
/// not: coincident roots, or an integer alpha >= 0, where
/// (1-x)^-alpha JP(-1-rho, -alpha, 0; x) is a multiple of the regular
/// solution and J3, J4 collapse onto J1, J2.
std::string jcal_degeneracy(const Params& p);

/// [y, y', ..., y^(max_order)], max_order <= 3, for each solution kind.
std::vector<double> solution_S1_derivs(int n, double alpha, double A, double x, int max_order);
std::vector<double> solution_S2_derivs(int n, double alpha, double A, double x, int max_order);
std::vector<double> solution_Jcal_derivs(int r, const Params& p, double x, int max_order);

struct JacobiMeasure {
  double alpha = 0.0;
  double A = 1.0;
};

/// Distribution function of the measure: -1/2 below -1, a point mass 1/2
/// at -1 and density (A/2)(1-x)^alpha on [-1, 1].
double mu_hat(double x, const JacobiMeasure& m);

/// (1/2) f(-1) g(-1) + (A/2) int_{-1}^{1} f g (1-x)^alpha dx by Gauss-Jacobi
/// quadrature, exact for polynomial f g of degree <= 2 degree_hint.
/// QuadratureError on a non-finite sample.
double inner_product(const std::function<double(double)>& f, const std::function<double(double)>& g,
                     const JacobiMeasure& m, int degree_hint);

}  // namespace qsf::jacobi_type
