#pragma once

// Truncated Taylor series ("jets") in d = x - x0, used to carry analytic
// derivatives through the solution formulas. Coefficient k holds
// f^(k)(x0) / k!.

#include <array>
#include <cmath>

namespace qsf {

template <int N>
struct Jet {
  std::array<double, N + 1> c{};

  static Jet constant(double v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  /// The identity function x, expanded about x0.
  static Jet variable(double x0) {
    Jet j;
    j.c[0] = x0;
    if constexpr (N >= 1) j.c[1] = 1.0;
    return j;
  }

  double value() const { return c[0]; }
  /// k-th derivative at x0.
  double deriv(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * c[k];
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c[k] += o.c[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c[k] -= o.c[k];
    return *this;
  }
  Jet& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }
};

template <int N>
Jet<N> operator+(Jet<N> a, const Jet<N>& b) { return a += b; }
template <int N>
Jet<N> operator-(Jet<N> a, const Jet<N>& b) { return a -= b; }
template <int N>
Jet<N> operator*(Jet<N> a, double s) { return a *= s; }
template <int N>
Jet<N> operator*(double s, Jet<N> a) { return a *= s; }
template <int N>
Jet<N> operator+(Jet<N> a, double s) {
  a.c[0] += s;
  return a;
}
template <int N>
Jet<N> operator+(double s, Jet<N> a) { return a + s; }
template <int N>
Jet<N> operator-(Jet<N> a) { return a *= -1.0; }
template <int N>
Jet<N> operator-(Jet<N> a, double s) {
  a.c[0] -= s;
  return a;
}
template <int N>
Jet<N> operator-(double s, const Jet<N>& a) { return -a + s; }

template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; i + j <= N; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

/// First derivative; the top coefficient is lost and set to zero.
template <int N>
Jet<N> derivative(const Jet<N>& a) {
  Jet<N> r;
  for (int k = 0; k < N; ++k) r.c[k] = (k + 1) * a.c[k + 1];
  return r;
}

/// (a + b d)^p as a jet in d.
template <int N>
Jet<N> pow_linear(double a, double b, double p) {
  Jet<N> r;
  r.c[0] = std::pow(a, p);
  const double ratio = b / a;
  for (int k = 1; k <= N; ++k) r.c[k] = r.c[k - 1] * (p - k + 1) / k * ratio;
  return r;
}

/// exp(s x) expanded about x0.
template <int N>
Jet<N> exp_linear(double s, double x0) {
  Jet<N> r;
  r.c[0] = std::exp(s * x0);
  for (int k = 1; k <= N; ++k) r.c[k] = r.c[k - 1] * s / k;
  return r;
}

/// Taylor jet of the solution of R F'' + P F' + Q F = 0 with F(x0) = f0,
/// F'(x0) = f1. R(x0) must be nonzero.
template <int N>
Jet<N> ode_series(const Jet<N>& R, const Jet<N>& P, const Jet<N>& Q, double f0, double f1) {
  Jet<N> f;
  f.c[0] = f0;
  if constexpr (N >= 1) f.c[1] = f1;
  for (int k = 0; k + 2 <= N; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      if (i > 0) s += R.c[i] * (j + 2.0) * (j + 1.0) * f.c[j + 2];
      s += P.c[i] * (j + 1.0) * f.c[j + 1];
      s += Q.c[i] * f.c[j];
    }
    f.c[k + 2] = -s / (R.c[0] * (k + 2.0) * (k + 1.0));
  }
  return f;
}

}  // namespace qsf
