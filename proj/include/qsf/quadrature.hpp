#pragma once

#include <memory>
#include <vector>

namespace qsf {

/// Nodes and weights of an n-point Gauss rule.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1], exact
/// for polynomials of degree <= 2n-1. Nodes are found by Newton iteration on
/// the three-term recurrence. Rules are memoized per (n, alpha, beta); the
/// cache is safe for concurrent readers.
std::shared_ptr<const GaussRule> gauss_jacobi(int n, double alpha, double beta = 0.0);

}  // namespace qsf
