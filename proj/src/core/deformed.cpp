#include "mudef/deformed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mudef/bigfloat.hpp"
#include "mudef/errors.hpp"

namespace mudef {

double log_gamma_mu(int n, const MuContext& ctx) {
  if (n < 0) throw std::invalid_argument("gamma_mu: n must be non-negative");
  const double mu = ctx.mu();
  const int m = n / 2;
  const double shift = (n % 2 == 0) ? 0.5 : 1.5;
  return n * std::log(2.0) + std::lgamma(m + 1.0) + std::lgamma(m + mu + shift) -
         std::lgamma(mu + 0.5);
}

double gamma_mu(int n, const MuContext& ctx) {
  if (n < 0) throw std::invalid_argument("gamma_mu: n must be non-negative");
  if (n <= kGammaRecursionLimit) {
    double g = 1.0;
    for (int i = 1; i <= n; ++i) g *= i + 2.0 * ctx.mu() * odd_indicator(i);
    return g;
  }
  const double lg = log_gamma_mu(n, ctx);
  if (lg > std::log(std::numeric_limits<double>::max())) {
    throw std::range_error("gamma_mu(" + std::to_string(n) + ") overflows double; use log_gamma_mu");
  }
  return std::exp(lg);
}

double deformed_binomial(int k, int j, const MuContext& ctx) {
  if (j < 0 || j > k) {
    throw std::invalid_argument("deformed_binomial: need 0 <= j <= k");
  }
  if (k <= kGammaRecursionLimit) {
    return gamma_mu(k, ctx) / (gamma_mu(k - j, ctx) * gamma_mu(j, ctx));
  }
  return std::exp(log_gamma_mu(k, ctx) - log_gamma_mu(k - j, ctx) - log_gamma_mu(j, ctx));
}

std::complex<double> binomial_poly(int k, std::complex<double> x, std::complex<double> y,
                                   const MuContext& ctx) {
  if (k < 0) throw std::invalid_argument("binomial_poly: k must be non-negative");
  std::complex<double> sum = 0.0;
  for (int j = 0; j <= k; ++j) {
    sum += deformed_binomial(k, j, ctx) * std::pow(x, j) * std::pow(y, k - j);
  }
  return sum;
}

namespace {

// Ratio bound |t_{m+1} / t_m| valid for every m > n.
double tail_ratio(double abs_z, int n, double mu) {
  return abs_z / (n + 1 + 2.0 * std::min(mu, 0.0));
}

SeriesResult exp_mu_series_extended(std::complex<double> z, const MuContext& ctx, double tol,
                                    const SeriesOptions& options, int bits) {
  const double abs_z = std::abs(z);
  const BigFloat zr(z.real(), bits), zi(z.imag(), bits);
  const BigFloat two_mu(2.0 * ctx.mu(), bits);
  BigFloat tr(1.0, bits), ti(0.0, bits);
  BigFloat sr(1.0, bits), si(0.0, bits);

  double max_partial = 1.0, weighted_abs = 1.0, last_abs = 1.0;
  int n = 0, small_run = 0;
  while (true) {
    if (n + 1 >= options.max_terms) {
      throw EvaluationError("exp_mu_series: term budget exhausted for |z| = " +
                            std::to_string(abs_z));
    }
    ++n;
    BigFloat nr = tr * zr - ti * zi;
    BigFloat ni = tr * zi + ti * zr;
    BigFloat denom(static_cast<long>(n), bits);
    if (n % 2 != 0) denom += two_mu;
    nr /= denom;
    ni /= denom;
    tr = std::move(nr);
    ti = std::move(ni);
    sr += tr;
    si += ti;
    last_abs = std::hypot(tr.to_double(), ti.to_double());
    const double partial = std::hypot(sr.to_double(), si.to_double());
    max_partial = std::max(max_partial, partial);
    weighted_abs += (n + 1) * last_abs;
    small_run = (last_abs < tol * partial) ? small_run + 1 : 0;
    if (small_run >= 3 && n > abs_z) break;
  }
  SeriesResult out;
  out.value = {sr.to_double(), si.to_double()};
  out.terms_used = n + 1;
  const double r = tail_ratio(abs_z, n, ctx.mu());
  out.trunc_error = last_abs * r / (1.0 - r);
  const double mag = std::abs(out.value);
  out.cancellation = mag > 0 ? std::max(1.0, max_partial / mag) : std::numeric_limits<double>::infinity();
  out.rounding_error = 2.0 * std::ldexp(weighted_abs, -bits) +
                       mag * std::numeric_limits<double>::epsilon() / 2;
  out.precision_bits = bits;
  out.escalated = true;
  return out;
}

}  // namespace

SeriesResult exp_mu_series(std::complex<double> z, const MuContext& ctx, double tol,
                           const SeriesOptions& options) {
  if (!(tol > 0)) throw std::invalid_argument("exp_mu_series: tol must be positive");
  SeriesResult out;
  if (z == 0.0) {
    out.value = 1.0;
    out.terms_used = 1;
    return out;
  }
  const double abs_z = std::abs(z);
  const double mu = ctx.mu();
  std::complex<double> term = 1.0, sum = 1.0;
  double max_partial = 1.0, weighted_abs = 1.0;
  int n = 0, small_run = 0;
  while (true) {
    if (n + 1 >= options.max_terms) {
      throw EvaluationError("exp_mu_series: term budget exhausted for |z| = " +
                            std::to_string(abs_z));
    }
    ++n;
    term *= z / (n + 2.0 * mu * odd_indicator(n));
    sum += term;
    const double partial = std::abs(sum);
    max_partial = std::max(max_partial, partial);
    weighted_abs += (n + 1) * std::abs(term);
    small_run = (std::abs(term) < tol * partial) ? small_run + 1 : 0;
    if (small_run >= 3 && n > abs_z) break;
  }
  out.value = sum;
  out.terms_used = n + 1;
  const double r = tail_ratio(abs_z, n, mu);
  out.trunc_error = std::abs(term) * r / (1.0 - r);
  const double mag = std::abs(sum);
  out.cancellation = mag > 0 ? std::max(1.0, max_partial / mag) : std::numeric_limits<double>::infinity();
  out.rounding_error = 2.0 * std::numeric_limits<double>::epsilon() / 2 * weighted_abs;

  const bool too_cancelled = out.cancellation > options.escalation_threshold;
  const bool too_rough = options.rounding_target > 0 && out.rounding_error > options.rounding_target;
  if (too_cancelled || too_rough) {
    // Enough bits to absorb the observed loss of significance with margin.
    const double loss = mag > 0 ? std::log2(std::max(1.0, weighted_abs / mag)) : 1024.0;
    const int bits = std::max(options.precision_bits, 53 + 32 + static_cast<int>(std::ceil(loss)));
    if (bits > options.max_precision_bits) {
      throw EvaluationError("exp_mu_series: cancellation needs " + std::to_string(bits) +
                                " bits, above the precision budget",
                            sum.real(), out.error());
    }
    return exp_mu_series_extended(z, ctx, tol, options, bits);
  }
  return out;
}

}  // namespace mudef
