#pragma once

#include <complex>

#include "mudef/context.hpp"

namespace mudef {

/// Largest n for which gamma_mu is evaluated by direct recursion; beyond it the
/// value is taken from the log-space closed form.
inline constexpr int kGammaRecursionLimit = 150;

/// Value of a truncated power series with diagnostics.
struct SeriesResult {
  std::complex<double> value;
  int terms_used = 0;
  double trunc_error = 0.0;   ///< bound on the discarded tail
  double cancellation = 1.0;  ///< max |partial sum| / |value|
  double rounding_error = 0.0;
  int precision_bits = 53;
  bool escalated = false;

  double error() const { return trunc_error + rounding_error; }
};

struct SeriesOptions {
  int max_terms = 20000;
  /// Re-evaluate in extended precision once cancellation exceeds this.
  double escalation_threshold = 1e8;
  /// Also escalate when the double-precision rounding bound exceeds this
  /// absolute value (0 disables).
  double rounding_target = 0.0;
  /// Extended precision in bits (four times double by default).
  int precision_bits = 4 * 53;
  /// Precision budget; needing more than this is an EvaluationError.
  int max_precision_bits = 8192;
};

inline constexpr int odd_indicator(int n) { return n % 2 != 0 ? 1 : 0; }

/// gamma_mu(n) = (n + 2 mu [n odd]) gamma_mu(n-1), gamma_mu(0) = 1.
/// Throws std::range_error when the value overflows a double.
double gamma_mu(int n, const MuContext& ctx);

/// log gamma_mu(n) from the closed form
///   gamma_mu(2m)   = 2^(2m)   m! Gamma(m + mu + 1/2) / Gamma(mu + 1/2)
///   gamma_mu(2m+1) = 2^(2m+1) m! Gamma(m + mu + 3/2) / Gamma(mu + 1/2).
double log_gamma_mu(int n, const MuContext& ctx);

/// gamma_mu(k) / (gamma_mu(k-j) gamma_mu(j)). Throws std::invalid_argument
/// unless 0 <= j <= k.
double deformed_binomial(int k, int j, const MuContext& ctx);

/// p_{k,mu}(x, y) = sum_j binom_mu(k, j) x^j y^(k-j).
std::complex<double> binomial_poly(int k, std::complex<double> x, std::complex<double> y,
                                   const MuContext& ctx);

/// exp_mu(z) = sum_n z^n / gamma_mu(n).
///
/// Summation stops once three consecutive terms fall below tol * |partial sum|
/// and the term index exceeds |z|; the remaining tail is bounded by a
/// geometric series. When cancellation exceeds options.escalation_threshold the
/// sum is recomputed with MPFR at options.precision_bits (or more, if the
/// observed cancellation requires it).
SeriesResult exp_mu_series(std::complex<double> z, const MuContext& ctx, double tol,
                           const SeriesOptions& options = {});

}  // namespace mudef
