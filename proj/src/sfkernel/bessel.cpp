#include <cmath>
#include <numbers>
#include <vector>

#include "qsf/sfkernel.hpp"

namespace qsf::sf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEuler = std::numbers::egamma;

struct Pair {
  double v0;
  double v1;
  double err;  // absolute error estimate shared by both orders
};

// Power series for J0, J1 (sign = -1) or I0, I1 (sign = +1).
Pair series_ji(double x, double sign) {
  const double q = sign * 0.25 * x * x;
  double t0 = 1.0, t1 = 0.5 * x;
  double s0 = t0, s1 = t1, mag = 1.0 + std::abs(t1);
  for (int k = 1; k < 2000; ++k) {
    t0 *= q / (double(k) * k);
    t1 *= q / (double(k) * (k + 1));
    s0 += t0;
    s1 += t1;
    mag += std::abs(t0) + std::abs(t1);
    if (std::abs(t0) <= 1e-17 * std::abs(s0) && std::abs(t1) <= 1e-17 * std::abs(s1)) break;
  }
  return {s0, s1, 4.0 * kEps * mag};
}

// Y0, Y1 from their logarithmic power series (x <= 2).
Pair series_y(double x) {
  const Pair j = series_ji(x, -1.0);
  const double q = -0.25 * x * x;
  const double lg = std::log(0.5 * x);
  // Y0 tail: sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2
  double t = 1.0, h = 0.0, tail0 = 0.0;
  // Y1 tail: sum_{k>=0} (-1)^k [psi(k+1)+psi(k+2)] (x/2)^{2k+1} / (k!(k+1)!)
  double u = 0.5 * x, tail1 = (-kEuler + (1.0 - kEuler)) * u;
  double hk = 0.0;
  for (int k = 1; k < 200; ++k) {
    t *= q / (double(k) * k);
    h += 1.0 / k;
    tail0 -= h * t;
    u *= q / (double(k) * (k + 1));
    hk += 1.0 / k;
    const double psi_sum = (-kEuler + hk) + (-kEuler + hk + 1.0 / (k + 1));
    tail1 += psi_sum * u;
    if (std::abs(t) < 1e-18 && std::abs(u) < 1e-18) break;
  }
  const double y0 = (2.0 / kPi) * ((lg + kEuler) * j.v0 + tail0);
  const double y1 = -2.0 / (kPi * x) + (2.0 / kPi) * lg * j.v1 - tail1 / kPi;
  return {y0, y1, 8.0 * kEps * (std::abs(y0) + std::abs(y1) + 2.0 / (kPi * x))};
}

// Miller backward recurrence for J_n, followed by Neumann sums for Y0, Y1.
Pair miller_jy(double x, bool want_y) {
  int n_start = int(x) + 40;
  if (n_start % 2) ++n_start;
  std::vector<double> j(n_start + 2, 0.0);
  j[n_start + 1] = 0.0;
  j[n_start] = 1e-300;
  for (int n = n_start; n >= 1; --n) {
    j[n - 1] = (2.0 * n / x) * j[n] - j[n + 1];
    if (std::abs(j[n - 1]) > 1e250) {
      for (int m = n - 1; m <= n_start; ++m) j[m] *= 1e-250;
    }
  }
  double norm = j[0];
  for (int k = 2; k <= n_start; k += 2) norm += 2.0 * j[k];
  for (double& v : j) v /= norm;
  if (!want_y) return {j[0], j[1], 8.0 * kEps};

  const double lg = std::log(0.5 * x);
  double s0 = 0.0, s1 = 0.0;
  for (int k = 1; 2 * k + 1 <= n_start; ++k) {
    const double sgn = (k % 2) ? -1.0 : 1.0;
    s0 += sgn * j[2 * k] / k;
    s1 += sgn * (2.0 * k + 1.0) * j[2 * k + 1] / (double(k) * (k + 1));
  }
  const double y0 = (2.0 / kPi) * ((lg + kEuler) * j[0] - 2.0 * s0);
  const double y1 = (2.0 / kPi) * (-j[0] / x + (lg - (1.0 - kEuler)) * j[1] - s1);
  return {y0, y1, 16.0 * kEps * (1.0 + std::abs(lg))};
}

// Hankel asymptotic expansion for large x; returns J or Y of the given order.
double hankel(int order, double x, bool want_y, double* err) {
  const double mu = 4.0 * order * order;
  double p = 1.0, q = 0.0, term = 1.0, last = 1e300;
  const double z8 = 8.0 * x;
  double tail = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= (mu - double(2 * k - 1) * (2 * k - 1)) / (k * z8);
    if (std::abs(term) > last) break;  // optimal truncation
    last = std::abs(term);
    tail = last;
    const int r = k % 4;
    if (r == 1) q += term;
    else if (r == 2) p -= term;
    else if (r == 3) q -= term;
    else p += term;
    if (last < 1e-17) break;
  }
  // chi = x - (order/2 + 1/4) pi, expanded to avoid rounding in x - c pi.
  const double c = std::cos(x), s = std::sin(x);
  const double r2 = std::numbers::sqrt2 / 2.0;
  double cos_chi, sin_chi;
  if (order == 0) {
    cos_chi = r2 * (c + s);
    sin_chi = r2 * (s - c);
  } else {
    cos_chi = r2 * (s - c);
    sin_chi = -r2 * (c + s);
  }
  const double amp = std::sqrt(2.0 / (kPi * x));
  if (err) *err = amp * (tail + 4.0 * kEps * (1.0 + x * kEps * 8.0));
  return want_y ? amp * (p * sin_chi + q * cos_chi) : amp * (p * cos_chi - q * sin_chi);
}

// K0, K1 by the trapezoid rule on K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
Pair k_integral(double x) {
  const double h = std::min(0.25, 0.5 / std::sqrt(x));
  double s0 = 0.5, s1 = 0.5;
  for (int j = 1; j < 100000; ++j) {
    const double t = j * h;
    const double sh = std::sinh(0.5 * t);
    const double w = std::exp(-2.0 * x * sh * sh);
    s0 += w;
    s1 += w * std::cosh(t);
    if (w * std::cosh(t) < 1e-18 * s1) break;
  }
  const double scale = h * std::exp(-x);
  return {s0 * scale, s1 * scale, 0.0};
}

Pair series_k(double x) {
  const Pair i = series_ji(x, 1.0);
  const double q = 0.25 * x * x;
  const double lg = std::log(0.5 * x);
  double t = 1.0, h = 0.0, tail0 = 0.0;
  double u = 1.0, hk = 0.0, tail1 = (-kEuler) + (1.0 - kEuler);
  for (int k = 1; k < 200; ++k) {
    t *= q / (double(k) * k);
    h += 1.0 / k;
    tail0 += h * t;
    u *= q / (double(k) * (k + 1));
    hk += 1.0 / k;
    tail1 += ((-kEuler + hk) + (-kEuler + hk + 1.0 / (k + 1))) * u;
    if (t < 1e-18 && u < 1e-18) break;
  }
  const double k0 = -(lg + kEuler) * i.v0 + tail0;
  const double k1 = 1.0 / x + lg * i.v1 - 0.25 * x * tail1;
  return {k0, k1, 0.0};
}

double bessel_raw(BesselKind kind, int order, double x, double* err) {
  switch (kind) {
    case BesselKind::J:
    case BesselKind::Y: {
      const bool want_y = kind == BesselKind::Y;
      if (x > 25.0) return hankel(order, x, want_y, err);
      const Pair p = x <= 2.0 ? (want_y ? series_y(x) : series_ji(x, -1.0)) : miller_jy(x, want_y);
      *err = p.err;
      return order == 0 ? p.v0 : p.v1;
    }
    case BesselKind::I: {
      const Pair p = series_ji(x, 1.0);
      *err = p.err;
      return order == 0 ? p.v0 : p.v1;
    }
    case BesselKind::K: {
      const Pair p = x <= 1.0 ? series_k(x) : k_integral(x);
      const double v = order == 0 ? p.v0 : p.v1;
      *err = 16.0 * kEps * std::abs(v);
      return v;
    }
  }
  return 0.0;
}

void check_args(BesselKind kind, int order, double x) {
  if (order != 0 && order != 1) throw DomainError("bessel: order must be 0 or 1");
  if (std::isnan(x)) throw DomainError("bessel: NaN argument");
  if (kind == BesselKind::Y || kind == BesselKind::K) {
    if (!(x > 0.0)) throw DomainError("bessel: Y and K require x > 0");
  } else if (x < 0.0) {
    throw DomainError("bessel: J and I require x >= 0");
  }
}

}  // namespace

EvalResult bessel(BesselKind kind, int order, double x) {
  check_args(kind, order, x);
  if (x == 0.0) return {order == 0 ? 1.0 : 0.0, 0.0};
  double err = 0.0;
  const double v = bessel_raw(kind, order, x, &err);
  return make_result(v, err + 2.0 * kEps * std::abs(v), "bessel");
}

EvalResult bessel_dx(BesselKind kind, int order, double x) {
  check_args(kind, order, x);
  if (x == 0.0) return {order == 0 ? 0.0 : 0.5, 0.0};
  const EvalResult z0 = bessel(kind, 0, x);
  const EvalResult z1 = bessel(kind, 1, x);
  double v;
  double err;
  if (order == 0) {
    v = kind == BesselKind::I ? z1.value : -z1.value;
    err = z1.abs_err;
  } else {
    const double z0_sign = kind == BesselKind::K ? -1.0 : 1.0;
    v = z0_sign * z0.value - z1.value / x;
    err = z0.abs_err + z1.abs_err / x + kEps * std::abs(v);
  }
  return make_result(v, err, "bessel_dx");
}

}  // namespace qsf::sf
