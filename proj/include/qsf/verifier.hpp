#pragma once

// Numerical application of the four fourth-order operators, relative
// residuals, scaled Wronskians and batch grid reports.

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qsf::verifier {

enum class Family { bessel, laguerre, legendre, jacobi };
enum class Form { frobenius, lagrange };

const char* family_name(Family f);
Family parse_family(const std::string& s);
const char* form_name(Form f);

/// Family parameters; only the ones of the chosen family are read
/// (M for bessel, A for laguerre and legendre, alpha and A for jacobi).
struct FamilyParams {
  double M = 1.0;
  double A = 1.0;
  double alpha = 0.0;
};

/// A coefficient function with its first two derivatives.
struct Coefficient {
  double v = 0.0, d1 = 0.0, d2 = 0.0;
};

/// Lagrange form (p y'')'' - (q y')' = s w y, or the Frobenius form
/// sum_k a_k y^(k) = s w y, where s is the spectral parameter.
struct Coefficients {
  Coefficient p, q, w;         // Lagrange form
  std::array<double, 5> a{};  // Frobenius form, a[k] multiplies y^(k)
  double w_frobenius = 0.0;
};

struct OperatorSpec {
  Family family = Family::bessel;
  Form form = Form::frobenius;
  FamilyParams params;

  /// Throws DomainError on invalid parameters.
  void validate() const;
  /// Open domain of the family: (0, inf) or (-1, 1).
  std::pair<double, double> domain() const;
  /// Coefficients at x, evaluated analytically.
  Coefficients coefficients(double x) const;
  /// Operator applied to [y, y', y'', y''', y''''].
  double apply(const std::array<double, 5>& d, double x) const;
  /// Size of the operator terms at x: sum over k < 4 of |c_k d[k]| plus
  /// |c_4| max_k |d[k]|. The fourth-order term is sized by the largest
  /// derivative since the stencil error in the fourth derivative tracks the lower ones.
  double term_scale(const std::array<double, 5>& d, double x) const;
  /// Weight multiplying s y on the right-hand side.
  double weight(double x) const;
};

/// x -> [y, y', y'', y'''] (four entries) or [y, ..., y''''] (five).
using DerivProvider = std::function<std::vector<double>(double)>;

inline constexpr double kScaleFloor = 1e-12;

struct ResidualReport {
  Family family = Family::bessel;
  Form form = Form::frobenius;
  FamilyParams params;
  double spectral = 0.0;
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double term_scale = 0.0;    // OperatorSpec::term_scale at x
  // |lhs - rhs| / max(|lhs|, |rhs|, term_scale, scale_floor). The term scale
  // keeps the ratio meaningful where rhs vanishes (zeros of y, spectral 0).
  double rel_residual = 0.0;
  double tolerance = 1e-6;
  bool pass = false;
};

/// Fourth derivative from a seven-point central stencil on the analytic y''
/// with one Richardson step, h = eps^(1/6) max(1, |x|).
double fourth_derivative(const DerivProvider& y, double x);

/// Order-4 derivative vector at x, using the stencil when y supplies only
/// four entries.
std::array<double, 5> derivatives(const DerivProvider& y, double x);

/// Residual of the operator equation at x. DomainError when x (or a stencil
/// point) lies outside the family domain.
ResidualReport residual(const OperatorSpec& spec, const DerivProvider& y, double spectral, double x,
                        double tolerance = 1e-6);

/// Determinant of the 4x4 matrix of [y, y', y'', y'''] rows, each row scaled
/// to unit Euclidean norm first.
double wronskian(const std::array<DerivProvider, 4>& solutions, double x);
double scaled_determinant(std::array<std::array<double, 4>, 4> rows);

enum class Verdict { pass, fail, excluded };
const char* verdict_name(Verdict v);

/// One structured check outcome.
struct CheckReport {
  std::string name;
  std::string inputs;
  double residual = 0.0;   // the measured quantity
  double tolerance = 0.0;
  std::string relation = "<=";  // residual <relation> tolerance passes
  Verdict verdict = Verdict::fail;
  std::string detail;  // error text or exclusion reason
};

/// Builds a CheckReport, deciding the verdict from residual, relation and tolerance.
CheckReport make_check(std::string name, std::string inputs, double residual, double tolerance,
                       std::string relation = "<=");

/// A parameter cell of a grid: family parameters plus spectral parameter.
struct ParamCell {
  FamilyParams params;
  double spectral = 0.0;
  std::string label;
};

/// A named solution; make() binds it to a parameter cell.
struct SolutionFactory {
  std::string name;
  std::function<DerivProvider(const ParamCell&)> make;
};

/// One report per (solution, cell), in lexicographic (solution, cell)
/// order, holding the worst residual over x_grid. Cell errors are recorded
/// in the report. threads = 0 picks the hardware concurrency.
std::vector<CheckReport> grid_report(const OperatorSpec& spec,
                                     const std::vector<SolutionFactory>& solutions,
                                     const std::vector<ParamCell>& param_grid,
                                     const std::vector<double>& x_grid, double tolerance = 1e-6,
                                     unsigned threads = 0);

/// n equispaced points on [lo, hi].
std::vector<double> linspace(double lo, double hi, int n);

/// Formats a double with 17 significant digits.
std::string fmt(double v);

}  // namespace qsf::verifier
