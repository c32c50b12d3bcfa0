#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qsf/sfkernel.hpp"

namespace qsf::sf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(x) for x >= 0.5.
double gamma_lanczos(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + double(i));
  const double t = z + kLanczosG + 0.5;
  // Split the power so that t^(z+1/2) e^{-t} does not overflow before 171.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * sum;
}

double lgamma_positive(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + double(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// Asymptotic tail psi(x) - ln x for x >= 10.
template <typename T>
T digamma_asymptotic(T x) {
  const T inv = T(1.0) / x;
  const T inv2 = inv * inv;
  T poly = inv2 * (T(-1.0 / 12) +
                   inv2 * (T(1.0 / 120) +
                           inv2 * (T(-1.0 / 252) +
                                   inv2 * (T(1.0 / 240) +
                                           inv2 * (T(-1.0 / 132) +
                                                   inv2 * (T(691.0 / 32760) +
                                                           inv2 * T(-1.0 / 12)))))));
  return std::log(x) - T(0.5) * inv + poly;
}

}  // namespace

void KernelConfig::validate() const {
  if (!(series_tol > 0.0 && series_tol < 1e-6)) {
    throw DomainError("KernelConfig: series_tol must lie in (0, 1e-6)");
  }
  if (max_terms < 100) throw DomainError("KernelConfig: max_terms must be >= 100");
  if (quad_nodes < 1) throw DomainError("KernelConfig: quad_nodes must be positive");
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double sin_pi(double x) {
  if (x == std::floor(x)) return 0.0;
  double r = std::fmod(x, 2.0);  // exact
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  // r in [-1, 1]; fold onto [-1/2, 1/2] where sin is well conditioned.
  if (r > 0.5) return std::sin(kPi * (1.0 - r));
  if (r < -0.5) return -std::sin(kPi * (1.0 + r));
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  const double h = x + 0.5;
  if (h == std::floor(h)) return 0.0;
  return sin_pi(x + 0.5);
}

EvalResult gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_fn: non-finite argument");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma_fn: pole at x = " + std::to_string(x));
  }
  double value;
  if (x < 0.5) {
    const double g = gamma_lanczos(1.0 - x);
    value = kPi / (sin_pi(x) * g);
  } else {
    if (x > 171.62) throw OverflowError("gamma_fn: Gamma(x) overflows for x > 171.6");
    value = gamma_lanczos(x);
  }
  if (!std::isfinite(value)) throw OverflowError("gamma_fn: result not representable");
  // Lanczos g=7 carries ~1e-15 relative error; pow amplifies it with |x|.
  return {value, std::abs(value) * kEps * (8.0 + std::abs(x))};
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) return sin_pi(x) * gamma_lanczos(1.0 - x) / kPi;
  if (x > 171.62) return 0.0;
  return 1.0 / gamma_lanczos(x);
}

double lgamma_abs(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("lgamma_abs: pole");
  if (x < 0.5) return std::log(kPi / std::abs(sin_pi(x))) - lgamma_positive(1.0 - x);
  return lgamma_positive(x);
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("digamma: pole at x = " + std::to_string(x));
  }
  if (x < 0.5) return digamma(1.0 - x) - kPi * cos_pi(x) / sin_pi(x);
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return acc + digamma_asymptotic(x);
}

std::complex<double> lgamma_complex(std::complex<double> z) {
  using C = std::complex<double>;
  if (z.real() < 0.5) {
    // Reflection; only the real part (log-modulus) is branch independent.
    return std::log(C(kPi)) - std::log(std::sin(kPi * z)) - lgamma_complex(C(1.0) - z);
  }
  const C w = z - 1.0;
  C sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (w + double(i));
  const C t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t + std::log(sum);
}

std::complex<double> digamma_complex(std::complex<double> z) {
  using C = std::complex<double>;
  if (z.imag() == 0.0) return digamma(z.real());
  if (z.real() < 0.5) {
    return digamma_complex(C(1.0) - z) - kPi * std::cos(kPi * z) / std::sin(kPi * z);
  }
  C acc = 0.0;
  while (std::abs(z) < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  return acc + digamma_asymptotic(z);
}

}  // namespace qsf::sf
