#include "mudef/imag_exp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mudef/errors.hpp"

namespace mudef {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

const char* to_string(Abs2Method m) {
  switch (m) {
    case Abs2Method::product: return "product";
    case Abs2Method::even_series: return "even_series";
    case Abs2Method::integral: return "integral";
  }
  return "?";
}

EvenAbs2Series::EvenAbs2Series(const MuContext& ctx, int j_max, int precision_bits)
    : ctx_(ctx), bits_(precision_bits + 2 * j_max + 64) {
  if (j_max < 1) throw std::invalid_argument("EvenAbs2Series: j_max must be positive");
  const int n_max = 2 * j_max + 2;
  const BigFloat two_mu(2.0 * ctx.mu(), bits_);
  std::vector<BigFloat> inv_gamma;
  inv_gamma.reserve(n_max + 1);
  inv_gamma.emplace_back(1.0, bits_);
  for (int n = 1; n <= n_max; ++n) {
    BigFloat factor(static_cast<long>(n), bits_);
    if (n % 2 != 0) factor += two_mu;
    inv_gamma.push_back(inv_gamma.back() / factor);
  }

  coeffs_.reserve(j_max + 1);
  approx_.reserve(j_max + 1);
  errors_.reserve(j_max + 1);
  abs_bound_.reserve(j_max + 2);
  for (int j = 0; j <= j_max + 1; ++j) {
    BigFloat sum(bits_), abs_sum(bits_);
    for (int m = 0; m < j; ++m) {
      BigFloat pair = inv_gamma[m] * inv_gamma[2 * j - m];
      pair *= 2.0;
      abs_sum += pair;
      if (m % 2 == 0) sum += pair; else sum -= pair;
    }
    BigFloat middle = inv_gamma[j] * inv_gamma[j];
    abs_sum += middle;
    if (j % 2 == 0) sum += middle; else sum -= middle;
    if (j % 2 != 0) sum = -sum;

    abs_bound_.push_back(abs_sum.to_double());
    if (j > j_max) break;
    errors_.push_back((6.0 * j + 6.0) * std::ldexp(abs_sum.to_double(), -bits_));
    approx_.push_back(sum.to_double());
    coeffs_.push_back(std::move(sum));
  }
}

Abs2Value EvenAbs2Series::evaluate(double s, double tol, const SeriesOptions& options) const {
  const double s2 = s * s;
  const double abs_s = std::abs(s);
  double power = 1.0, partial = 0.0, max_partial = 0.0;
  double rounding = 0.0, coeff_error = 0.0, last_abs = 0.0;
  int small_run = 0, j = 0;
  for (;; ++j) {
    if (j > j_max()) {
      throw EvaluationError("even series for |exp_mu(is)|^2 did not converge by j = " +
                                std::to_string(j_max()) + " at s = " + std::to_string(s),
                            partial, std::abs(last_abs));
    }
    const double term = approx_[j] * power;
    partial += term;
    max_partial = std::max(max_partial, std::abs(partial));
    last_abs = std::abs(term);
    rounding += (j + 2) * last_abs;
    coeff_error += errors_[j] * power;
    small_run = (last_abs < tol * std::abs(partial)) ? small_run + 1 : 0;
    if (small_run >= 3 && 2 * j > abs_s) break;
    power *= s2;
  }
  Abs2Value out;
  out.value = partial;
  out.terms_used = j + 1;
  const double r = s2 * abs_bound_[j + 1] / abs_bound_[j];
  const double tail = r < 1 ? abs_bound_[j] * power * r / (1.0 - r)
                            : std::numeric_limits<double>::infinity();
  const double mag = std::abs(partial);
  out.cancellation = mag > 0 ? std::max(1.0, max_partial / mag) : std::numeric_limits<double>::infinity();
  const double rounding_error = kEps * rounding + coeff_error;
  out.error = tail + rounding_error;

  const bool too_cancelled = out.cancellation > options.escalation_threshold;
  const bool too_rough = options.rounding_target > 0 && rounding_error > options.rounding_target;
  if (too_cancelled || too_rough) return evaluate_extended(s, tol);
  return out;
}

Abs2Value EvenAbs2Series::evaluate_extended(double s, double tol) const {
  const BigFloat s2 = BigFloat(s, bits_) * BigFloat(s, bits_);
  const double abs_s = std::abs(s);
  BigFloat power(1.0, bits_), partial(bits_);
  double max_partial = 0.0, rounding = 0.0, coeff_error = 0.0, power_d = 1.0;
  int small_run = 0, j = 0;
  for (;; ++j) {
    if (j > j_max()) {
      throw EvaluationError("even series for |exp_mu(is)|^2 did not converge by j = " +
                                std::to_string(j_max()),
                            partial.to_double(), 0.0);
    }
    BigFloat term = coeffs_[j] * power;
    partial += term;
    const double p = partial.to_double();
    const double t = std::abs(term.to_double());
    max_partial = std::max(max_partial, std::abs(p));
    rounding += (j + 2) * t;
    coeff_error += errors_[j] * power_d;
    small_run = (t < tol * std::abs(p)) ? small_run + 1 : 0;
    if (small_run >= 3 && 2 * j > abs_s) break;
    power *= s2;
    power_d = power.to_double();
  }
  Abs2Value out;
  out.value = partial.to_double();
  out.terms_used = j + 1;
  out.escalated = true;
  const double r = s * s * abs_bound_[j + 1] / abs_bound_[j];
  const double tail = r < 1 ? abs_bound_[j] * power_d * r / (1.0 - r)
                            : std::numeric_limits<double>::infinity();
  const double mag = std::abs(out.value);
  out.cancellation = mag > 0 ? std::max(1.0, max_partial / mag) : std::numeric_limits<double>::infinity();
  out.error = tail + std::ldexp(rounding, -bits_) + coeff_error + mag * kEps / 2;
  return out;
}

ImagExpEvaluator::ImagExpEvaluator(const MuContext& ctx, double s_max, EvaluatorOptions options)
    : ctx_(ctx), options_(options) {
  if (ctx.mu() > 0) {
    rule_s_max_ = std::max(std::abs(s_max), 1.0);
    rule_ = eta_rule(ctx, eta_nodes_for(rule_s_max_));
  }
  if (options_.with_even_series) {
    even_.emplace(ctx, options_.even_max_index, options_.series.precision_bits);
  }
}

const JacobiRule& ImagExpEvaluator::rule() const {
  if (!rule_) throw DomainError("eta_mu rule requires mu > 0");
  return *rule_;
}

SeriesResult ImagExpEvaluator::series(double s) const {
  return exp_mu_series({0.0, s}, ctx_, options_.series_tol, options_.series);
}

std::complex<double> ImagExpEvaluator::integral(double s, double* error) const {
  if (!rule_) throw DomainError("exp_mu integral representation requires mu > 0");
  std::optional<JacobiRule> wide;
  const JacobiRule* rule = &*rule_;
  if (std::abs(s) > rule_s_max_) {
    wide = eta_rule(ctx_, eta_nodes_for(std::abs(s)));
    rule = &*wide;
  }
  double c = 0.0, sn = 0.0;
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    const double arg = s * rule->nodes[i];
    c += rule->weights[i] * std::cos(arg);
    sn += rule->weights[i] * std::sin(arg);
  }
  if (error != nullptr) {
    const int n = static_cast<int>(rule->nodes.size());
    *error = gauss_trig_error_bound(n, s) + 2.0 * n * kEps;
  }
  return {c, sn};
}

Abs2Value ImagExpEvaluator::abs2(double s, Abs2Method method) const {
  switch (method) {
    case Abs2Method::product: {
      const SeriesResult r = series(s);
      const double mag = std::abs(r.value);
      const double e = r.error();
      Abs2Value out;
      out.value = std::norm(r.value);
      out.error = 2.0 * mag * e + e * e + out.value * kEps;
      out.cancellation = r.cancellation;
      out.terms_used = r.terms_used;
      out.escalated = r.escalated;
      return out;
    }
    case Abs2Method::even_series: {
      if (even_) return even_->evaluate(s, options_.series_tol, options_.series);
      const EvenAbs2Series table(ctx_, options_.even_max_index, options_.series.precision_bits);
      return table.evaluate(s, options_.series_tol, options_.series);
    }
    case Abs2Method::integral: {
      double e = 0.0;
      const std::complex<double> v = integral(s, &e);
      Abs2Value out;
      out.value = std::norm(v);
      out.error = 2.0 * (std::abs(v.real()) + std::abs(v.imag())) * e + 2.0 * e * e +
                  out.value * kEps;
      out.terms_used = static_cast<int>(std::abs(s) > rule_s_max_ ? eta_nodes_for(std::abs(s))
                                                                  : rule_->nodes.size());
      return out;
    }
  }
  throw std::invalid_argument("unknown Abs2Method");
}

Abs2Value ImagExpEvaluator::abs2_preferred(double s) const {
  return abs2(s, rule_ ? Abs2Method::integral : Abs2Method::product);
}

Abs2Value abs2_exp_mu_imag_detailed(double s, const MuContext& ctx, Abs2Method method) {
  if (method == Abs2Method::integral && !(ctx.mu() > 0)) {
    throw DomainError("abs2_exp_mu_imag: integral method requires mu > 0");
  }
  EvaluatorOptions options;
  options.with_even_series = method == Abs2Method::even_series;
  const ImagExpEvaluator eval(ctx, std::abs(s), options);
  return eval.abs2(s, method);
}

double abs2_exp_mu_imag(double s, const MuContext& ctx, Abs2Method method) {
  return abs2_exp_mu_imag_detailed(s, ctx, method).value;
}

}  // namespace mudef
