#include "qsf/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "qsf/errors.hpp"
#include "qsf/sfkernel.hpp"

namespace qsf {

namespace {

struct JacobiValue {
  double p;   // P_n(x)
  double dp;  // P_n'(x)
};

JacobiValue jacobi_poly(int n, double a, double b, double x) {
  double p_prev = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * (k + 1) * (k + a + b + 1.0) * s;
    const double c2 = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b);
    const double c3 = 2.0 * (k + a) * (k + b) * (s + 2.0);
    const double next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = next;
  }
  const double s = 2.0 * n + a + b;
  const double dp = (n * ((a - b) - s * x) * p + 2.0 * (n + a) * (n + b) * p_prev) /
                    (s * (1.0 - x * x));
  return {p, dp};
}

GaussRule build(int n, double a, double b) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double log_c = sf::lgamma_abs(n + a + 1.0) + sf::lgamma_abs(n + b + 1.0) -
                       sf::lgamma_abs(n + a + b + 1.0) - sf::lgamma_abs(n + 1.0) +
                       (a + b + 1.0) * std::log(2.0);
  for (int i = 0; i < n; ++i) {
    // Asymptotic angle of the (i+1)-th largest zero.
    double x = std::cos((i + 0.75 + 0.5 * a) * std::numbers::pi / (n + 0.5 * (a + b + 1.0)));
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      // Newton on P_n with the already found zeros divided out.
      const JacobiValue v = jacobi_poly(n, a, b, x);
      double deflate = 0.0;
      for (int j = 0; j < i; ++j) deflate += 1.0 / (x - rule.nodes[j]);
      const double step = v.p / (v.dp - v.p * deflate);
      x -= step;
      if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged || !(x > -1.0 && x < 1.0)) {
      throw QuadratureError("gauss_jacobi: Newton iteration failed for n = " + std::to_string(n));
    }
    const JacobiValue v = jacobi_poly(n, a, b, x);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_c) / ((1.0 - x * x) * v.dp * v.dp);
  }
  return rule;
}

}  // namespace

std::shared_ptr<const GaussRule> gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("gauss_jacobi: requires n >= 1");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("gauss_jacobi: requires alpha > -1 and beta > -1");
  }
  using Key = std::tuple<int, double, double>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const GaussRule>> cache;
  const Key key{n, alpha, beta};
  {
    std::shared_lock lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const GaussRule>(build(n, alpha, beta));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(rule)).first->second;
}

}  // namespace qsf
