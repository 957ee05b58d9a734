#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mudef/bigfloat.hpp"
#include "mudef/context.hpp"
#include "mudef/deformed.hpp"
#include "mudef/jacobi.hpp"

namespace mudef {

enum class Abs2Method { product, even_series, integral };

const char* to_string(Abs2Method m);

/// |exp_mu(is)|^2 with an absolute error estimate.
struct Abs2Value {
  double value = 0.0;
  double error = 0.0;
  double cancellation = 1.0;
  int terms_used = 0;
  bool escalated = false;
};

/// Even power series |exp_mu(is)|^2 = sum_j c_j s^(2j) with
///   c_j = (-1)^j p_{2j,mu}(-1,1) / gamma_mu(2j)
///       = (-1)^j sum_m (-1)^m / (gamma_mu(2j-m) gamma_mu(m)),
/// i.e. the Cauchy product of exp_mu(is) and exp_mu(-is). The alternating
/// inner sum loses about j bits, so coefficients are formed in MPFR at
/// precision_bits + 2 j_max bits and carry a certified absolute error.
class EvenAbs2Series {
 public:
  static constexpr int kDefaultMaxIndex = 200;

  explicit EvenAbs2Series(const MuContext& ctx, int j_max = kDefaultMaxIndex,
                          int precision_bits = 4 * 53);

  int j_max() const { return static_cast<int>(coeffs_.size()) - 1; }
  int bits() const { return bits_; }
  const MuContext& context() const { return ctx_; }

  const BigFloat& coefficient(int j) const { return coeffs_.at(j); }
  double coefficient_value(int j) const { return approx_.at(j); }
  /// Absolute error bound on coefficient(j).
  double coefficient_error(int j) const { return errors_.at(j); }
  /// sum_m 1 / (gamma_mu(2j-m) gamma_mu(m)) >= |coefficient(j)|, for j <= j_max + 1.
  /// Ratios of consecutive bounds decrease, which makes them usable for tail bounds.
  double coefficient_abs_bound(int j) const { return abs_bound_.at(j); }

  /// Sums the series at s. Stops after three consecutive terms below
  /// tol * |partial sum| once 2j > |s|. Escalates to MPFR on cancellation.
  /// Throws EvaluationError when j_max is reached first.
  Abs2Value evaluate(double s, double tol = 1e-17, const SeriesOptions& options = {}) const;

 private:
  Abs2Value evaluate_extended(double s, double tol) const;

  MuContext ctx_;
  int bits_;
  std::vector<BigFloat> coeffs_;
  std::vector<double> approx_;
  std::vector<double> errors_;
  std::vector<double> abs_bound_;
};

struct EvaluatorOptions {
  EvaluatorOptions() { series.rounding_target = 1e-15; }

  double series_tol = 1e-17;
  /// Defaults escalate whenever double rounding could exceed 1e-15.
  SeriesOptions series;
  /// Build the even-power coefficient table (needed for Abs2Method::even_series).
  bool with_even_series = false;
  int even_max_index = EvenAbs2Series::kDefaultMaxIndex;
};

/// Evaluates exp_mu on the imaginary axis for one mu by all available routes.
/// Immutable after construction, so a single instance may serve many threads.
class ImagExpEvaluator {
 public:
  /// s_max sizes the eta_mu rule (mu > 0); larger |s| still works but builds
  /// a temporary rule per call.
  ImagExpEvaluator(const MuContext& ctx, double s_max, EvaluatorOptions options = {});

  const MuContext& context() const { return ctx_; }
  bool has_integral() const { return rule_.has_value(); }
  const JacobiRule& rule() const;

  /// exp_mu(is) by the power series.
  SeriesResult series(double s) const;
  /// exp_mu(is) by the eta_mu integral; requires mu > 0.
  std::complex<double> integral(double s, double* error = nullptr) const;

  Abs2Value abs2(double s, Abs2Method method) const;
  /// Integral route for mu > 0, power series otherwise.
  Abs2Value abs2_preferred(double s) const;

 private:
  MuContext ctx_;
  EvaluatorOptions options_;
  std::optional<JacobiRule> rule_;
  double rule_s_max_ = 0.0;
  std::optional<EvenAbs2Series> even_;
};

/// |exp_mu(is)|^2 by the requested method (integral needs mu > 0).
double abs2_exp_mu_imag(double s, const MuContext& ctx, Abs2Method method);

/// Same, with the error estimate and diagnostics.
Abs2Value abs2_exp_mu_imag_detailed(double s, const MuContext& ctx, Abs2Method method);

}  // namespace mudef
