#pragma once

// Golden-value table: CSV with columns function,a1,a2,a3,a4,value,abs_err.
// Values come from an independent arbitrary-precision computation.

#include <array>
#include <string>
#include <vector>

namespace qsf::oracle {

struct Row {
  std::string function;
  std::array<double, 4> args{};  // NaN for empty cells
  double value = 0.0;
  double abs_err = 0.0;
};

/// Path from QSF_ORACLE_TABLE, else the table shipped with the sources.
std::string default_path();

/// Parses a table; throws DomainError on malformed input.
std::vector<Row> load(const std::string& path);

/// True when evaluate() knows the function name.
bool known(const std::string& function);

/// Recomputes a row with the library. DomainError for unknown names.
double evaluate(const Row& row);

/// Relative tolerance for a row: 1e-9 for values built on Legendre Q or
/// Kummer U (logarithmic cases), 1e-10 otherwise.
double tolerance(const std::string& function);

/// |got - want| / |want|, or |got| when want is zero.
double relative_error(double got, double want);

}  // namespace qsf::oracle
