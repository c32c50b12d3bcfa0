#include <cmath>
#include <numbers>
#include <string>

#include "qsf/sfkernel.hpp"

namespace qsf::sf {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Gamma(x)/Gamma(y) for arguments away from the poles.
double gamma_ratio(double x, double y) {
  if (x < 170.0 && y < 170.0 && x > -170.0 && y > -170.0) {
    return gamma_fn(x).value * rgamma(y);
  }
  auto sign = [](double t) { return t > 0.0 || int(std::floor(t)) % 2 == 0 ? 1.0 : -1.0; };
  return sign(x) * sign(y) * std::exp(lgamma_abs(x) - lgamma_abs(y));
}

void check_jacobi_x(double x, const char* what) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError(std::string(what) + ": requires -1 <= x <= 1");
}

}  // namespace

bool jp_prefactor_regular(double nu, double alpha, double /*beta*/) {
  return !is_nonpositive_integer(nu + 1.0) && !is_nonpositive_integer(nu + alpha + 1.0);
}

EvalResult jp(double nu, double alpha, double beta, double x, const KernelConfig& cfg) {
  check_jacobi_x(x, "jp");
  if (!jp_prefactor_regular(nu, alpha, beta)) {
    throw PoleError("jp: Gamma prefactor is singular or zero for nu = " + std::to_string(nu));
  }
  if (x == -1.0 && !(nu >= 0.0 && nu == std::floor(nu))) {
    throw DomainError("jp: x = -1 requires a non-negative integer degree");
  }
  const double pre = gamma_ratio(nu + alpha + 1.0, nu + 1.0);
  // a + b = alpha + beta + 1, ab = -nu (nu + alpha + beta + 1)
  const double s = alpha + beta + 1.0;
  const EvalResult f = gauss_2f1_pair(s, -nu * (nu + s), alpha + 1.0, 0.5 * (1.0 - x), cfg);
  // gauss_2f1_pair already divided by Gamma(alpha+1) when alpha+1 is a pole.
  const double g = is_nonpositive_integer(alpha + 1.0) ? 1.0 : rgamma(alpha + 1.0);
  const double v = pre * g * f.value;
  return make_result(v, std::abs(pre * g) * f.abs_err + 16.0 * kEps * std::abs(v), "jp");
}

EvalResult jp_dx(double nu, double alpha, double beta, double x, const KernelConfig& cfg) {
  check_jacobi_x(x, "jp_dx");
  if (!jp_prefactor_regular(nu, alpha, beta)) throw PoleError("jp_dx: singular Gamma prefactor");
  if (x == -1.0 && !(nu >= 0.0 && nu == std::floor(nu))) {
    throw DomainError("jp_dx: x = -1 requires a non-negative integer degree");
  }
  const double pre = gamma_ratio(nu + alpha + 1.0, nu + 1.0);
  const double s = alpha + beta + 1.0;
  const EvalResult f = gauss_2f1_pair_dz(s, -nu * (nu + s), alpha + 1.0, 0.5 * (1.0 - x), cfg);
  const double g = is_nonpositive_integer(alpha + 1.0) ? 1.0 : rgamma(alpha + 1.0);
  const double v = -0.5 * pre * g * f.value;
  return make_result(v, 0.5 * std::abs(pre * g) * f.abs_err + 16.0 * kEps * std::abs(v), "jp_dx");
}

EvalResult jacobi_regular(double q, double alpha, double beta, double x, const KernelConfig& cfg) {
  check_jacobi_x(x, "jacobi_regular");
  const EvalResult f = gauss_2f1_pair(alpha + beta + 1.0, -q, alpha + 1.0, 0.5 * (1.0 - x), cfg);
  return make_result(f.value, f.abs_err, "jacobi_regular");
}

EvalResult jacobi_regular_dx(double q, double alpha, double beta, double x,
                             const KernelConfig& cfg) {
  check_jacobi_x(x, "jacobi_regular_dx");
  const EvalResult f =
      gauss_2f1_pair_dz(alpha + beta + 1.0, -q, alpha + 1.0, 0.5 * (1.0 - x), cfg);
  return make_result(-0.5 * f.value, 0.5 * f.abs_err, "jacobi_regular_dx");
}

namespace {

bool is_integer(double v) { return v == std::floor(v); }

void check_legendre(LegendreKind kind, double nu, double x, const char* what) {
  if (!std::isfinite(nu) || std::isnan(x)) throw DomainError(std::string(what) + ": bad argument");
  if (kind == LegendreKind::P) {
    if (!(x > -1.0 && x <= 1.0) && !(x == -1.0 && is_integer(nu))) {
      throw DomainError(std::string(what) + ": P requires -1 < x <= 1");
    }
  } else {
    if (!(x > -1.0 && x < 1.0)) throw DomainError(std::string(what) + ": Q requires -1 < x < 1");
    if (is_integer(nu) && nu < 0.0) {
      throw PoleError(std::string(what) + ": Q has poles at negative integer degree");
    }
  }
}

// Q_n and Q_{n-1} for integer n >= 0 by forward recurrence.
void q_integer(int n, double x, double* qn, double* qn_1) {
  double prev = 0.0, cur = std::atanh(x);
  if (n >= 1) {
    prev = cur;
    cur = x * cur - 1.0;
  }
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  *qn = cur;
  *qn_1 = prev;
}

// Q_nu(0) and Q_nu'(0) for non-integer nu.
void q_origin(double nu, double* q0, double* dq0) {
  const double half = 0.5 * nu;
  *q0 = -0.5 * kSqrtPi * sin_pi(half) * gamma_ratio(half + 0.5, half + 1.0);
  *dq0 = kSqrtPi * cos_pi(half) * gamma_ratio(half + 1.0, half + 0.5);
}

EvalResult direct_value(LegendreKind kind, double nu, double x, const KernelConfig& cfg) {
  if (kind == LegendreKind::P) {
    const EvalResult f = gauss_2f1(-nu, nu + 1.0, 1.0, 0.5 * (1.0 - x), cfg);
    return make_result(f.value, f.abs_err, "legendre");
  }
  if (is_integer(nu)) {
    double qn, qn_1;
    q_integer(int(nu), x, &qn, &qn_1);
    const double err = 8.0 * kEps * (nu + 1.0) * (std::abs(qn) + std::abs(std::atanh(x)) + 1.0);
    return make_result(qn, err, "legendre");
  }
  // Q = Q(0) w_even + Q'(0) w_odd with the even/odd solutions about x = 0.
  double q0, dq0;
  q_origin(nu, &q0, &dq0);
  const double x2 = x * x;
  const EvalResult we = gauss_2f1(-0.5 * nu, 0.5 * (nu + 1.0), 0.5, x2, cfg);
  const EvalResult wo = gauss_2f1(0.5 * (1.0 - nu), 0.5 * nu + 1.0, 1.5, x2, cfg);
  const double v = q0 * we.value + dq0 * x * wo.value;
  const double err = std::abs(q0) * we.abs_err + std::abs(dq0 * x) * wo.abs_err +
                     8.0 * kEps * (std::abs(q0 * we.value) + std::abs(dq0 * x * wo.value));
  return make_result(v, err, "legendre");
}

EvalResult direct_dx(LegendreKind kind, double nu, double x, const KernelConfig& cfg) {
  if (kind == LegendreKind::P) {
    if (nu == 0.0 || nu == -1.0) return {0.0, 0.0};
    const double f = 0.5 * nu * (nu + 1.0);
    const EvalResult r = gauss_2f1(1.0 - nu, nu + 2.0, 2.0, 0.5 * (1.0 - x), cfg);
    return make_result(f * r.value, std::abs(f) * r.abs_err, "legendre_dx");
  }
  if (is_integer(nu)) {
    const int n = int(nu);
    double qn, qn_1;
    q_integer(n, x, &qn, &qn_1);
    const double d = 1.0 - x * x;
    const double v = n == 0 ? 1.0 / d : n * (qn_1 - x * qn) / d;
    const double err = 8.0 * kEps * (nu + 1.0) * (std::abs(v) + (std::abs(qn) + std::abs(qn_1)) * (n + 1) / d);
    return make_result(v, err, "legendre_dx");
  }
  double q0, dq0;
  q_origin(nu, &q0, &dq0);
  const double x2 = x * x;
  // w_even' = 2x (ab/c) F(a+1, b+1; 3/2; x^2) with a = -nu/2, b = (nu+1)/2, c = 1/2
  const double fe = 2.0 * x * (-0.25 * nu * (nu + 1.0)) / 0.5;
  const EvalResult de = gauss_2f1(1.0 - 0.5 * nu, 0.5 * (nu + 3.0), 1.5, x2, cfg);
  // w_odd' = F(a, b; 3/2; x^2) + 2x^2 (ab/c) F(a+1, b+1; 5/2; x^2), a = (1-nu)/2, b = nu/2 + 1
  const EvalResult wo = gauss_2f1(0.5 * (1.0 - nu), 0.5 * nu + 1.0, 1.5, x2, cfg);
  const double fo = 2.0 * x2 * (0.25 * (1.0 - nu) * (nu + 2.0)) / 1.5;
  const EvalResult dox = gauss_2f1(0.5 * (3.0 - nu), 0.5 * nu + 2.0, 2.5, x2, cfg);
  const double even = fe * de.value;
  const double odd = wo.value + fo * dox.value;
  const double v = q0 * even + dq0 * odd;
  const double err = std::abs(q0 * fe) * de.abs_err +
                     std::abs(dq0) * (wo.abs_err + std::abs(fo) * dox.abs_err) +
                     8.0 * kEps * (std::abs(q0 * even) + std::abs(dq0 * odd));
  return make_result(v, err, "legendre_dx");
}

struct Ladder {
  double f0;  // F_nu
  double f1;  // F_{nu+1}
  double err;
};

// Both P and Q obey (v+1) F_{v+1} = (2v+1) x F_v - v F_{v-1}. On (-1, 1)
// neither solution of the recurrence dominates, so it may run in either
// direction from seeds whose degree is small enough for the series to be
// free of cancellation.
Ladder ladder(LegendreKind kind, double nu, double x, const KernelConfig& cfg) {
  const double frac = nu - std::floor(nu);
  const bool up = nu > 0.0;
  double v = up ? frac + 1.0 : frac - 1.0;  // degree of lo
  EvalResult lo = direct_value(kind, v, x, cfg);
  EvalResult hi = direct_value(kind, v + 1.0, x, cfg);
  double a = lo.value, b = hi.value;
  int steps = 0;
  if (up) {
    while (v < nu - 0.5) {
      const double next = ((2.0 * v + 3.0) * x * b - (v + 1.0) * a) / (v + 2.0);
      a = b;
      b = next;
      v += 1.0;
      ++steps;
    }
  } else {
    while (v > nu + 0.5) {
      const double prev = ((2.0 * v + 1.0) * x * a - (v + 1.0) * b) / v;
      b = a;
      a = prev;
      v -= 1.0;
      ++steps;
    }
  }
  const double scale = std::max(std::abs(lo.value), std::abs(hi.value)) + lo.abs_err + hi.abs_err;
  const double err = (lo.abs_err + hi.abs_err) * (steps + 1) +
                     8.0 * kEps * (steps + 1) * (scale + std::abs(a) + std::abs(b));
  return {a, b, err};
}

bool use_ladder(LegendreKind kind, double nu) {
  if (kind == LegendreKind::Q && is_integer(nu)) return false;
  return nu > 2.0 || nu < -1.0;
}

// P_{-nu-1} = P_nu
double fold_p(LegendreKind kind, double nu) {
  return kind == LegendreKind::P && nu < -0.5 ? -nu - 1.0 : nu;
}

}  // namespace

EvalResult legendre(LegendreKind kind, double nu, double x, const KernelConfig& cfg) {
  check_legendre(kind, nu, x, "legendre");
  nu = fold_p(kind, nu);
  if (!use_ladder(kind, nu)) {
    const EvalResult r = direct_value(kind, nu, x, cfg);
    return make_result(r.value, r.abs_err, "legendre");
  }
  const Ladder l = ladder(kind, nu, x, cfg);
  return make_result(l.f0, l.err, "legendre");
}

EvalResult legendre_dx(LegendreKind kind, double nu, double x, const KernelConfig& cfg) {
  check_legendre(kind, nu, x, "legendre_dx");
  nu = fold_p(kind, nu);
  if (!use_ladder(kind, nu)) {
    const EvalResult r = direct_dx(kind, nu, x, cfg);
    return make_result(r.value, r.abs_err, "legendre_dx");
  }
  // (1 - x^2) F_nu' = (nu + 1) (x F_nu - F_{nu+1})
  const Ladder l = ladder(kind, nu, x, cfg);
  const double d = 1.0 - x * x;
  const double v = (nu + 1.0) * (x * l.f0 - l.f1) / d;
  return make_result(v, std::abs(nu + 1.0) * 2.0 * l.err / d + 4.0 * kEps * std::abs(v), "legendre_dx");
}

}  // namespace qsf::sf
