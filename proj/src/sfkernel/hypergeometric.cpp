#include <cmath>
#include <complex>
#include <string>

#include "qsf/sfkernel.hpp"

namespace qsf::sf {

namespace {

// Upper parameters a, b of 2F1, either both real or a complex-conjugate pair.
// Everything the algorithms need is a symmetric function of a and b, hence
// real in both cases.
struct Upper {
  bool cplx = false;
  double a = 0.0, b = 0.0;  // real case
  double re = 0.0, im = 0.0;  // complex case: a, b = re +- i im
  double s = 0.0, p = 0.0;  // a + b, ab

  static Upper real(double a, double b) {
    Upper u;
    u.a = a;
    u.b = b;
    u.s = a + b;
    u.p = a * b;
    return u;
  }

  static Upper from_pair(double s, double p) {
    const double disc = s * s - 4.0 * p;
    if (disc >= 0.0) {
      const double r = std::sqrt(disc);
      const double big = 0.5 * (s + (s >= 0.0 ? r : -r));
      const double small = big != 0.0 ? p / big : 0.0;
      Upper u = real(big, small);
      u.s = s;
      u.p = p;
      return u;
    }
    Upper u;
    u.cplx = true;
    u.re = 0.5 * s;
    u.im = 0.5 * std::sqrt(-disc);
    u.s = s;
    u.p = p;
    return u;
  }

  // (a+k)(b+k)
  double q(double k) const { return cplx ? k * k + s * k + p : (a + k) * (b + k); }

  Upper shifted(double d) const {
    if (!cplx) return real(a + d, b + d);
    Upper u = *this;
    u.re += d;
    u.s += 2.0 * d;
    u.p = d * d + s * d + p;
    return u;
  }

  // c - a, c - b
  Upper reflected(double c) const {
    if (!cplx) return real(c - a, c - b);
    Upper u = *this;
    u.re = c - re;
    u.s = 2.0 * c - s;
    u.p = c * c - c * s + p;
    return u;
  }

  // 1 / (Gamma(a+k) Gamma(b+k))
  double rgamma_prod(double k = 0.0) const {
    if (!cplx) return rgamma(a + k) * rgamma(b + k);
    return std::exp(-2.0 * lgamma_complex({re + k, im}).real());
  }

  // psi(a+k) + psi(b+k)
  double psi_sum(double k) const {
    if (!cplx) return digamma(a + k) + digamma(b + k);
    return 2.0 * digamma_complex({re + k, im}).real();
  }

  // Index of a non-positive integer upper parameter, or -1.
  int terminates() const {
    if (cplx) return -1;
    const bool ta = is_nonpositive_integer(a), tb = is_nonpositive_integer(b);
    if (ta && tb) return int(-std::max(a, b));
    if (ta) return int(-a);
    if (tb) return int(-b);
    return -1;
  }

  double scale() const { return std::sqrt(std::abs(p)) + std::abs(s); }
};

struct Sum {
  double value;
  double mag;  // sum of term magnitudes, drives the rounding estimate
};

Sum direct_series(const Upper& u, double c, double z, const KernelConfig& cfg) {
  double term = 1.0, sum = 1.0, mag = 1.0;
  const int stop = u.terminates();
  const double settle = u.scale() + std::abs(c) + 2.0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    if (stop >= 0 && k >= stop) return {sum, mag};
    term *= u.q(k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    mag += std::abs(term);
    if (term == 0.0) return {sum, mag};
    if (k > settle && std::abs(term) <= 0.1 * cfg.series_tol * std::abs(sum)) return {sum, mag};
  }
  throw NonConvergence("gauss_2f1: series did not converge within max_terms");
}

// Sum over n >= 0 of (a)_n (b)_n / (n! (n+m)!) w^n [ln w - psi(n+1) - psi(n+m+1) + psi_sum(n + off)].
Sum log_tail(const Upper& u, int m, int off, double w, const KernelConfig& cfg) {
  const double lw = std::log(w);
  double coef = 1.0;
  for (int j = 2; j <= m; ++j) coef /= j;  // 1/m!
  double sum = 0.0, mag = 0.0;
  for (int n = 0; n < cfg.max_terms; ++n) {
    if (n > 0) coef *= u.q(n - 1.0) / (double(n) * (n + m)) * w;
    const double psi1 = digamma(n + 1.0), psi2 = digamma(n + m + 1.0);
    const double ps = u.psi_sum(n + off);
    const double term = coef * (lw - psi1 - psi2 + ps);
    sum += term;
    mag += std::abs(coef) * (std::abs(lw) + std::abs(psi1) + std::abs(psi2) + std::abs(ps));
    if (coef == 0.0) break;
    if (n > u.scale() + 2.0 && std::abs(term) <= 0.1 * cfg.series_tol * std::abs(sum)) break;
    if (n + 1 == cfg.max_terms) throw NonConvergence("gauss_2f1: logarithmic series");
  }
  return {sum, mag};
}

// Finite sum over n < k of (a)_n (b)_n / (n! (1-k)_n) w^n.
Sum finite_part(const Upper& u, int k, double w) {
  double term = 1.0, sum = 1.0, mag = 1.0;
  for (int n = 1; n < k; ++n) {
    term *= u.q(n - 1.0) / (double(n) * (n - k)) * w;
    sum += term;
    mag += std::abs(term);
  }
  return {sum, mag};
}

double gamma_value(double x) { return gamma_fn(x).value; }

EvalResult plain(const Upper& u, double c, double z, const KernelConfig& cfg);
EvalResult connection(const Upper& u, double c, double z, const KernelConfig& cfg);

// Terminating series for z > 1/2 in the variable 1 - z:
//   F(-n, b; c; z) = (c-b)_n / (c)_n F(-n, b; b-c-n+1; 1-z).
bool reversed_polynomial(const Upper& u, double c, double z, const KernelConfig& cfg, EvalResult* out) {
  const int n = u.terminates();
  const double a = is_nonpositive_integer(u.a) && int(-u.a) == n ? u.a : u.b;
  const double b = a == u.a ? u.b : u.a;
  const double c2 = b - c - n + 1.0;
  if (is_nonpositive_integer(c2) || is_nonpositive_integer(c)) return false;
  double f = 1.0;
  for (int j = 0; j < n; ++j) f *= (c - b + j) / (c + j);
  const Sum r = direct_series(Upper::real(a, b), c2, 1.0 - z, cfg);
  *out = {f * r.value, 4.0 * kEps * std::abs(f) * r.mag + 2.0 * n * kEps * std::abs(f * r.value)};
  return true;
}

// c - a - b within delta of an integer: quadratic interpolation in c through
// the exact logarithmic case and two well-separated connection evaluations.
EvalResult near_integer(const Upper& u, double c, double delta, double z, const KernelConfig& cfg) {
  constexpr double eta = 2e-4;
  const double c0 = c - delta;
  const EvalResult f0 = plain(u, c0, z, cfg);
  const EvalResult fp = plain(u, c0 + eta, z, cfg);
  const EvalResult fm = plain(u, c0 - eta, z, cfg);
  const double t = delta / eta;
  const double v = f0.value + 0.5 * t * (fp.value - fm.value) + 0.5 * t * t * (fp.value - 2.0 * f0.value + fm.value);
  const double err = f0.abs_err + std::abs(t) * (fp.abs_err + fm.abs_err) +
                     std::abs(t) * eta * eta * std::abs(fp.value - 2.0 * f0.value + fm.value);
  return {v, err};
}

// 2F1 for c not a non-positive integer and z in [-1/2, 1].
EvalResult plain(const Upper& u, double c, double z, const KernelConfig& cfg) {
  if (z > 0.5 && u.terminates() >= 0) {
    EvalResult r;
    if (reversed_polynomial(u, c, z, cfg, &r)) return r;
  }
  if (u.terminates() >= 0 || z <= 0.5) {
    const Sum r = direct_series(u, c, z, cfg);
    return {r.value, 4.0 * kEps * r.mag};
  }
  return connection(u, c, z, cfg);
}

// Non-terminating 2F1 through the z -> 1 - z connection formulas.
EvalResult connection(const Upper& u, double c, double z, const KernelConfig& cfg) {
  double m = c - u.s;
  const double w = 1.0 - z;
  const double m_round = std::round(m);
  // Parameters that were meant to differ by an integer rarely do so exactly in
  // binary; snap rounding-level offsets onto the logarithmic case.
  if (std::abs(m - m_round) <= 64.0 * kEps * (std::abs(c) + std::abs(u.s) + 1.0)) m = m_round;
  const bool integral = m == m_round;

  if (w == 0.0) {
    if (!(m > 0.0)) throw DivergenceError("gauss_2f1: diverges at z = 1 when c - a - b <= 0");
    const double v = gamma_value(c) * gamma_value(m) * u.reflected(c).rgamma_prod();
    return {v, 32.0 * kEps * std::abs(v)};
  }

  if (!integral) {
    if (std::abs(m - m_round) < 1e-4 && w > 0.0) return near_integer(u, c, m - m_round, z, cfg);
    const Sum f1 = direct_series(u, 1.0 - m, w, cfg);
    const Sum f2 = direct_series(u.reflected(c), m + 1.0, w, cfg);
    const double gc = gamma_value(c);
    const double t1 = gc * gamma_value(m) * u.reflected(c).rgamma_prod() * f1.value;
    const double t2 = std::pow(w, m) * gc * gamma_value(-m) * u.rgamma_prod() * f2.value;
    const double v = t1 + t2;
    const double err = 32.0 * kEps * (std::abs(t1) * f1.mag / std::max(std::abs(f1.value), 1e-300) +
                                      std::abs(t2) * f2.mag / std::max(std::abs(f2.value), 1e-300));
    return {v, err};
  }

  const int mi = int(m_round);
  const double gc = gamma_value(c);
  if (mi == 0) {
    const Sum t = log_tail(u, 0, 0, w, cfg);
    const double f = gc * u.rgamma_prod();
    // log_tail carries [ln w - 2 psi(n+1) + psi_sum]; the m = 0 formula has the opposite sign.
    return {-f * t.value, 8.0 * kEps * std::abs(f) * t.mag};
  }
  if (mi > 0) {
    const Sum fin = finite_part(u, mi, w);
    const double f1 = gamma_value(double(mi)) * gc * u.shifted(mi).rgamma_prod();
    const Sum t = log_tail(u.shifted(mi), mi, 0, w, cfg);
    const double f2 = gc * u.rgamma_prod() * std::pow(-w, mi);
    const double v = f1 * fin.value - f2 * t.value;
    return {v, 8.0 * kEps * (std::abs(f1) * fin.mag + std::abs(f2) * t.mag)};
  }
  const int k = -mi;
  const Sum fin = finite_part(u.shifted(-k), k, w);
  const double f1 = gamma_value(double(k)) * gc * u.rgamma_prod() * std::pow(w, -k);
  const double g = u.shifted(-k).rgamma_prod();
  double tail_v = 0.0, tail_mag = 0.0;
  if (g != 0.0) {
    const Sum t = log_tail(u, k, 0, w, cfg);
    const double f2 = (k % 2 ? -1.0 : 1.0) * gc * g;
    tail_v = f2 * t.value;
    tail_mag = std::abs(f2) * t.mag;
  }
  const double v = f1 * fin.value - tail_v;
  return {v, 8.0 * kEps * (std::abs(f1) * fin.mag + tail_mag)};
}

EvalResult evaluate(const Upper& u, double c, double z, const KernelConfig& cfg) {
  if (!(z <= 1.0)) throw DomainError("gauss_2f1: requires z <= 1");
  if (z < -0.5) {
    if (u.cplx) throw DomainError("gauss_2f1: z < -1/2 needs real parameters");
    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1))
    const EvalResult r = plain(Upper::real(u.a, c - u.b), c, z / (z - 1.0), cfg);
    const double f = std::pow(1.0 - z, -u.a);
    return {f * r.value, f * r.abs_err + 4.0 * kEps * std::abs(f * r.value)};
  }
  return plain(u, c, z, cfg);
}

// 2F1(a,b;c;z)/Gamma(c); handles c = 0, -1, -2, ... through
//   (a)_{m+1} (b)_{m+1} / (m+1)! z^{m+1} 2F1(a+m+1, b+m+1; m+2; z),  c = -m.
EvalResult regularized(const Upper& u, double c, double z, const KernelConfig& cfg) {
  if (!is_nonpositive_integer(c)) {
    const EvalResult r = evaluate(u, c, z, cfg);
    const double g = rgamma(c);
    return {g * r.value, std::abs(g) * r.abs_err};
  }
  const int m = int(-c);
  double f = 1.0;
  for (int j = 0; j <= m; ++j) f *= u.q(j) / (j + 1.0) * z;
  if (f == 0.0) return {0.0, 0.0};
  const EvalResult r = evaluate(u.shifted(m + 1.0), m + 2.0, z, cfg);
  return {f * r.value, std::abs(f) * r.abs_err + 4.0 * kEps * std::abs(f * r.value)};
}

void check_finite(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw DomainError("gauss_2f1: non-finite argument");
  }
}

}  // namespace

EvalResult gauss_2f1(double a, double b, double c, double z, const KernelConfig& cfg) {
  cfg.validate();
  check_finite(a, b, c, z);
  if (is_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1: c = " + std::to_string(c) + " is a non-positive integer");
  }
  const EvalResult r = evaluate(Upper::real(a, b), c, z, cfg);
  return make_result(r.value, r.abs_err, "gauss_2f1");
}

EvalResult gauss_2f1_dz(double a, double b, double c, double z, const KernelConfig& cfg) {
  cfg.validate();
  check_finite(a, b, c, z);
  if (is_nonpositive_integer(c)) throw PoleError("gauss_2f1_dz: c is a non-positive integer");
  if (a * b == 0.0) return {0.0, 0.0};
  const EvalResult r = evaluate(Upper::real(a + 1.0, b + 1.0), c + 1.0, z, cfg);
  const double f = a * b / c;
  return make_result(f * r.value, std::abs(f) * r.abs_err, "gauss_2f1_dz");
}

EvalResult gauss_2f1_pair(double sum_ab, double prod_ab, double c, double z,
                          const KernelConfig& cfg) {
  cfg.validate();
  check_finite(sum_ab, prod_ab, c, z);
  const Upper u = Upper::from_pair(sum_ab, prod_ab);
  const EvalResult r = is_nonpositive_integer(c) ? regularized(u, c, z, cfg) : evaluate(u, c, z, cfg);
  return make_result(r.value, r.abs_err, "gauss_2f1_pair");
}

EvalResult gauss_2f1_pair_dz(double sum_ab, double prod_ab, double c, double z,
                             const KernelConfig& cfg) {
  cfg.validate();
  check_finite(sum_ab, prod_ab, c, z);
  if (prod_ab == 0.0) return {0.0, 0.0};
  const Upper u = Upper::from_pair(sum_ab, prod_ab).shifted(1.0);
  EvalResult r;
  double f;
  if (is_nonpositive_integer(c)) {
    // d/dz of the regularized function is ab times the regularized function at c+1.
    r = regularized(u, c + 1.0, z, cfg);
    f = prod_ab;
  } else {
    r = evaluate(u, c + 1.0, z, cfg);
    f = prod_ab / c;
  }
  return make_result(f * r.value, std::abs(f) * r.abs_err, "gauss_2f1_pair_dz");
}

namespace detail {

EvalResult gauss_2f1_series(double a, double b, double c, double z, const KernelConfig& cfg) {
  const Sum r = direct_series(Upper::real(a, b), c, z, cfg);
  return make_result(r.value, 4.0 * kEps * r.mag, "gauss_2f1_series");
}

EvalResult gauss_2f1_connection(double a, double b, double c, double z, const KernelConfig& cfg) {
  const EvalResult r = connection(Upper::real(a, b), c, z, cfg);
  return make_result(r.value, r.abs_err, "gauss_2f1_connection");
}

}  // namespace detail

}  // namespace qsf::sf
