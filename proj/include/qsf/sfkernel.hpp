#pragma once

// Classical special functions used to build the fourth-order solution
// families: Gamma, Bessel J/Y/I/K of orders 0 and 1, Kummer M and U,
// Whittaker M and W with second index 0, Gauss 2F1, the Jacobi function JP
// and Ferrers-Legendre P/Q of real degree. Every routine is a pure function.

#include <complex>

#include "qsf/eval_result.hpp"

namespace qsf::sf {

struct KernelConfig {
  double series_tol = 1e-15;  // relative truncation target
  int max_terms = 10000;
  int quad_nodes = 64;  // resolution of integral-representation fallbacks

  /// Throws DomainError unless 0 < series_tol < 1e-6 and max_terms >= 100.
  void validate() const;
};

enum class BesselKind { J, Y, I, K };
enum class WhittakerKind { M, W };
enum class LegendreKind { P, Q };

// ---- Gamma family -------------------------------------------------------

/// Gamma(x); reflection for x < 0.5. PoleError at 0, -1, -2, ...
EvalResult gamma_fn(double x);

/// 1/Gamma(x), exactly zero at the poles of Gamma.
double rgamma(double x);

/// log|Gamma(x)|.
double lgamma_abs(double x);

/// Digamma psi(x). PoleError at non-positive integers.
double digamma(double x);

/// sin(pi x) and cos(pi x) with exact argument reduction.
double sin_pi(double x);
double cos_pi(double x);

std::complex<double> lgamma_complex(std::complex<double> z);
std::complex<double> digamma_complex(std::complex<double> z);

/// True when x is 0, -1, -2, ...
bool is_nonpositive_integer(double x);

// ---- Bessel functions ----------------------------------------------------

/// Bessel J/Y/I/K of order 0 or 1. Y and K need x > 0; J and I need x >= 0.
EvalResult bessel(BesselKind kind, int order, double x);

/// First derivative with respect to x (J0' = -J1, J1' = J0 - J1/x, ...).
EvalResult bessel_dx(BesselKind kind, int order, double x);

// ---- Confluent hypergeometric -------------------------------------------

/// Kummer M(a, b, z) = 1F1(a; b; z).
EvalResult kummer_m(double a, double b, double z, const KernelConfig& cfg = {});
/// dM/dz = (a/b) M(a+1, b+1, z).
EvalResult kummer_m_dz(double a, double b, double z, const KernelConfig& cfg = {});

/// Tricomi U(a, b, z) for the logarithmic case b = 1 only; z > 0.
EvalResult kummer_u(double a, double b, double z, const KernelConfig& cfg = {});
/// dU/dz for b = 1, via z U'(a,1,z) = a^2 U(a+1,1,z) - a U(a,1,z).
EvalResult kummer_u_dz(double a, double b, double z, const KernelConfig& cfg = {});

/// Whittaker M_{kappa,0}(z) or W_{kappa,0}(z), z > 0.
EvalResult whittaker(WhittakerKind kind, double kappa, double z,
                     const KernelConfig& cfg = {});
EvalResult whittaker_dx(WhittakerKind kind, double kappa, double z,
                        const KernelConfig& cfg = {});

// ---- Gauss hypergeometric -----------------------------------------------

/// 2F1(a, b; c; z) for real parameters and 0 <= z <= 1. Uses the z -> 1-z
/// connection (logarithmic when c-a-b is an integer) for z > 1/2.
EvalResult gauss_2f1(double a, double b, double c, double z,
                     const KernelConfig& cfg = {});
/// d/dz 2F1 = (ab/c) 2F1(a+1, b+1; c+1; z).
EvalResult gauss_2f1_dz(double a, double b, double c, double z,
                        const KernelConfig& cfg = {});

/// 2F1 with parameters given through their sum and product, so that a and b
/// may form a complex-conjugate pair while the function stays real.
/// When c is a non-positive integer the regularized function 2F1/Gamma(c)
/// is returned.
EvalResult gauss_2f1_pair(double sum_ab, double prod_ab, double c, double z,
                          const KernelConfig& cfg = {});
EvalResult gauss_2f1_pair_dz(double sum_ab, double prod_ab, double c, double z,
                             const KernelConfig& cfg = {});

namespace detail {
// The two evaluation paths of gauss_2f1, exposed for cross-checking near z = 1/2.
EvalResult gauss_2f1_series(double a, double b, double c, double z, const KernelConfig& cfg = {});
EvalResult gauss_2f1_connection(double a, double b, double c, double z,
                                const KernelConfig& cfg = {});
}  // namespace detail

// ---- Jacobi and Legendre functions ---------------------------------------

/// JP(nu, alpha, beta; x) = Gamma(nu+alpha+1)/(Gamma(nu+1)Gamma(alpha+1))
///                           * 2F1(-nu, nu+alpha+beta+1; alpha+1; (1-x)/2).
/// x = 1 is always allowed; x = -1 only for integer nu >= 0.
/// PoleError when Gamma(nu+alpha+1) is infinite or 1/Gamma(nu+1) vanishes.
EvalResult jp(double nu, double alpha, double beta, double x,
              const KernelConfig& cfg = {});
EvalResult jp_dx(double nu, double alpha, double beta, double x,
                 const KernelConfig& cfg = {});

/// True when the Gamma prefactor of JP(nu, alpha, .) is finite and nonzero.
bool jp_prefactor_regular(double nu, double alpha, double beta = 0.0);

/// Jacobi function regular at x = 1, parametrized by the eigenvalue
/// q = nu (nu + alpha + beta + 1) of the classical Jacobi equation
///   (1-x^2) y'' + (beta - alpha - (alpha+beta+2) x) y' + q y = 0
/// and normalized to 1 at x = 1 (regularized when alpha+1 is a
/// non-positive integer). Real for every real q, including the q values
/// produced by complex-conjugate degrees nu.
EvalResult jacobi_regular(double q, double alpha, double beta, double x,
                          const KernelConfig& cfg = {});
EvalResult jacobi_regular_dx(double q, double alpha, double beta, double x,
                             const KernelConfig& cfg = {});

/// Ferrers-Legendre P_nu(x), Q_nu(x) of real degree, -1 < x < 1.
EvalResult legendre(LegendreKind kind, double nu, double x,
                    const KernelConfig& cfg = {});
EvalResult legendre_dx(LegendreKind kind, double nu, double x,
                       const KernelConfig& cfg = {});

}  // namespace qsf::sf
