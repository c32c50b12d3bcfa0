#include <cmath>
#include <string>

#include "qsf/sfkernel.hpp"

namespace qsf::sf {

namespace {

// Direct series sum_k (a)_k / (b)_k z^k / k!; error estimate from the
// largest partial magnitudes.
EvalResult m_series(double a, double b, double z, const KernelConfig& cfg) {
  double term = 1.0, sum = 1.0, mag = 1.0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    term *= (a + k) / ((b + k) * (k + 1.0)) * z;
    sum += term;
    mag += std::abs(term);
    if (term == 0.0) return {sum, 2.0 * kEps * mag};
    if (k > std::abs(a) && std::abs(term) <= cfg.series_tol * 0.1 * std::abs(sum)) {
      return {sum, 2.0 * kEps * mag + std::abs(term)};
    }
  }
  throw NonConvergence("kummer_m: series did not converge within max_terms");
}

// (-1)^n n! L_n(z) = U(-n, 1, z).
double u_polynomial(int n, double z) {
  double l_prev = 1.0, l = 1.0 - z;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - z) * l - k * l_prev) / (k + 1.0);
    l_prev = l;
    l = next;
  }
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  return (n % 2 ? -1.0 : 1.0) * fact * l;
}

// Logarithmic series for U(a, 1, z):
//   U = -(1/Gamma(a)) sum_k (a)_k z^k/(k!)^2 [ln z + psi(a+k) - 2 psi(k+1)].
// Returns false when cancellation would spoil the result.
bool u_log_series(double a, double z, const KernelConfig& cfg, EvalResult* out) {
  const double lz = std::log(z);
  const double euler = 0.57721566490153286061;
  double t = 1.0;
  double harmonic = 0.0;
  double sum = 0.0, mag = 0.0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    if (k > 0) {
      t *= (a + k - 1.0) * z / (double(k) * k);
      harmonic += 1.0 / k;
    }
    const double psi_k1 = -euler + harmonic;
    const double bracket = lz + digamma(a + k) - 2.0 * psi_k1;
    const double term = t * bracket;
    sum += term;
    mag += std::abs(t) * (std::abs(lz) + std::abs(digamma(a + k)) + 2.0 * std::abs(psi_k1));
    if (k > std::abs(a) && std::abs(term) <= 0.1 * cfg.series_tol * std::abs(sum)) break;
    if (k + 1 == cfg.max_terms) return false;
  }
  const double r = rgamma(a);
  const double value = -r * sum;
  const double err = 4.0 * kEps * mag * std::abs(r);
  if (!(err <= 1e-13 * std::abs(value))) return false;
  *out = {value, err};
  return true;
}

// U(a, 1, z) for a >= 1 from
//   Gamma(a) U(a,1,z) = int_R exp(a u - z e^u - a log(1 + e^u)) du
// by the trapezoid rule, which converges geometrically for this smooth,
// doubly decaying integrand.
double u_quadrature(double a, double z, const KernelConfig& cfg) {
  auto phi = [&](double u) { return a * u - z * std::exp(u) - a * std::log1p(std::exp(u)); };
  auto dphi = [&](double u) { return a / (1.0 + std::exp(u)) - z * std::exp(u); };
  double lo = -60.0, hi = 60.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (dphi(mid) > 0.0 ? lo : hi) = mid;
  }
  const double peak = 0.5 * (lo + hi);
  const double ep = std::exp(peak);
  const double curvature = a * ep / ((1.0 + ep) * (1.0 + ep)) + z * ep;
  const double sigma = 1.0 / std::sqrt(curvature);
  // quad_nodes sets the resolution: nodes per unit of peak width.
  const double h = std::min(0.25, 20.0 * sigma / cfg.quad_nodes);
  const double phi0 = phi(peak);
  double sum = 1.0;
  for (int dir : {-1, 1}) {
    for (int j = 1; j < 1000000; ++j) {
      const double w = std::exp(phi(peak + dir * j * h) - phi0);
      sum += w;
      if (w < 1e-18 * sum) break;
    }
  }
  return h * sum * std::exp(phi0 - lgamma_abs(a));
}

EvalResult u_by_quadrature(double a, double z, const KernelConfig& cfg) {
  if (a >= 1.0) {
    const double v = u_quadrature(a, z, cfg);
    return {v, 64.0 * kEps * std::abs(v)};
  }
  // Backward recurrence in a is stable for U:
  //   U(a-1) = (2a + z - 1) U(a) - a^2 U(a+1).
  const int m = int(std::ceil(1.0 - a));
  double a0 = a + m;
  double u_hi = u_quadrature(a0 + 1.0, z, cfg);
  double u = u_quadrature(a0, z, cfg);
  double mag = std::abs(u);
  for (int i = 0; i < m; ++i) {
    const double next = (2.0 * a0 + z - 1.0) * u - a0 * a0 * u_hi;
    mag = std::max(mag, std::abs(next));
    u_hi = u;
    u = next;
    a0 -= 1.0;
  }
  return {u, 64.0 * kEps * (std::abs(u) + mag * m * kEps)};
}

void check_u_args(double b, double z) {
  if (b != 1.0) throw DomainError("kummer_u: only b = 1 is supported");
  if (!(z > 0.0)) throw DomainError("kummer_u: requires z > 0");
}

}  // namespace

EvalResult kummer_m(double a, double b, double z, const KernelConfig& cfg) {
  cfg.validate();
  if (is_nonpositive_integer(b)) {
    throw PoleError("kummer_m: b = " + std::to_string(b) + " is a non-positive integer");
  }
  if (!std::isfinite(a) || !std::isfinite(z)) throw DomainError("kummer_m: non-finite argument");
  if (z == 0.0) return {1.0, 0.0};
  if (z < 0.0 && !is_nonpositive_integer(a)) {
    // Kummer's transformation keeps the series free of alternating cancellation.
    const EvalResult t = m_series(b - a, b, -z, cfg);
    const double e = std::exp(z);
    return make_result(e * t.value, e * t.abs_err + kEps * std::abs(e * t.value), "kummer_m");
  }
  const EvalResult r = m_series(a, b, z, cfg);
  return make_result(r.value, r.abs_err, "kummer_m");
}

EvalResult kummer_m_dz(double a, double b, double z, const KernelConfig& cfg) {
  if (is_nonpositive_integer(b)) throw PoleError("kummer_m_dz: b is a non-positive integer");
  if (a == 0.0) return {0.0, 0.0};
  const EvalResult m = kummer_m(a + 1.0, b + 1.0, z, cfg);
  const double f = a / b;
  return make_result(f * m.value, std::abs(f) * m.abs_err, "kummer_m_dz");
}

EvalResult kummer_u(double a, double b, double z, const KernelConfig& cfg) {
  cfg.validate();
  check_u_args(b, z);
  if (!std::isfinite(a)) throw DomainError("kummer_u: non-finite a");
  if (is_nonpositive_integer(a) && a > -170.0) {
    const double v = u_polynomial(int(-a), z);
    return make_result(v, 8.0 * kEps * std::abs(v) * (1.0 - a), "kummer_u");
  }
  EvalResult r;
  if (z <= 8.0 && u_log_series(a, z, cfg, &r)) return make_result(r.value, r.abs_err, "kummer_u");
  r = u_by_quadrature(a, z, cfg);
  return make_result(r.value, r.abs_err, "kummer_u");
}

EvalResult kummer_u_dz(double a, double b, double z, const KernelConfig& cfg) {
  check_u_args(b, z);
  if (a == 0.0) return {0.0, 0.0};
  const EvalResult u0 = kummer_u(a, 1.0, z, cfg);
  const EvalResult u1 = kummer_u(a + 1.0, 1.0, z, cfg);
  const double v = (a * a * u1.value - a * u0.value) / z;
  const double err = (a * a * u1.abs_err + std::abs(a) * u0.abs_err) / z + kEps * std::abs(v);
  return make_result(v, err, "kummer_u_dz");
}

EvalResult whittaker(WhittakerKind kind, double kappa, double z, const KernelConfig& cfg) {
  if (!(z > 0.0)) throw DomainError("whittaker: requires z > 0");
  const double a = 0.5 - kappa;
  const EvalResult k = kind == WhittakerKind::M ? kummer_m(a, 1.0, z, cfg) : kummer_u(a, 1.0, z, cfg);
  const double pre = std::exp(-0.5 * z) * std::sqrt(z);
  return make_result(pre * k.value, pre * k.abs_err + 2.0 * kEps * std::abs(pre * k.value),
                     "whittaker");
}

EvalResult whittaker_dx(WhittakerKind kind, double kappa, double z, const KernelConfig& cfg) {
  if (!(z > 0.0)) throw DomainError("whittaker_dx: requires z > 0");
  const double a = 0.5 - kappa;
  EvalResult f, df;
  if (kind == WhittakerKind::M) {
    f = kummer_m(a, 1.0, z, cfg);
    df = kummer_m_dz(a, 1.0, z, cfg);
  } else {
    f = kummer_u(a, 1.0, z, cfg);
    df = kummer_u_dz(a, 1.0, z, cfg);
  }
  const double pre = std::exp(-0.5 * z) * std::sqrt(z);
  const double log_slope = 0.5 / z - 0.5;
  const double v = pre * (log_slope * f.value + df.value);
  const double err = pre * (std::abs(log_slope) * f.abs_err + df.abs_err) + 2.0 * kEps * std::abs(v);
  return make_result(v, err, "whittaker_dx");
}

}  // namespace qsf::sf
