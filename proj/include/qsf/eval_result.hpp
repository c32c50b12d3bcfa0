#pragma once

#include <cmath>
#include <limits>
#include <string_view>

#include "qsf/errors.hpp"

namespace qsf {

/// A computed value together with an estimate of its absolute error.
struct EvalResult {
  double value = 0.0;
  double abs_err = 0.0;
};

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Wraps a raw value into an EvalResult, refusing NaN and infinities.
inline EvalResult make_result(double value, double abs_err, std::string_view what) {
  if (std::isnan(value)) {
    throw DomainError(std::string(what) + ": evaluation produced NaN");
  }
  if (!std::isfinite(value)) {
    throw OverflowError(std::string(what) + ": result not representable");
  }
  if (!std::isfinite(abs_err)) abs_err = std::abs(value);
  return {value, std::abs(abs_err)};
}

}  // namespace qsf
