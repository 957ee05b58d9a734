#include "mudef/trace/trace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "mudef/errors.hpp"
#include "mudef/imag_exp.hpp"
#include "mudef/trace/measure.hpp"

namespace mudef::trace {

const char* to_string(TraceMethod m) {
  switch (m) {
    case TraceMethod::quadrature: return "quadrature";
    case TraceMethod::moment_series: return "moment_series";
  }
  return "?";
}

namespace {

struct Rect {
  double x0, x1, k0, k1;
};

struct Region {
  Rect rect;
  double coarse = 0.0;
  double quads[4] = {};
  double sample_error = 0.0;
  double fine() const { return quads[0] + quads[1] + quads[2] + quads[3]; }
  double err() const { return std::abs(fine() - coarse); }
  bool operator<(const Region& o) const { return err() < o.err(); }
};

std::array<Rect, 4> quarters(const Rect& r) {
  const double xm = (r.x0 + r.x1) / 2.0;
  const double km = (r.k0 + r.k1) / 2.0;
  return {Rect{r.x0, xm, r.k0, km}, Rect{xm, r.x1, r.k0, km}, Rect{r.x0, xm, km, r.k1},
          Rect{xm, r.x1, km, r.k1}};
}

class TensorIntegrator {
 public:
  TensorIntegrator(const MuContext& ctx, const QuadratureSpec& spec, double s_max)
      : rules_(spec.nodes_per_panel, ctx.mu()), eval_(ctx, s_max) {}

  double rule(const Rect& r, double& sample_error) {
    rules_.panel(r.x0, r.x1, xs_);
    rules_.panel(r.k0, r.k1, ks_);
    double sum = 0.0;
    for (const auto& x : xs_) {
      double row = 0.0;
      double row_err = 0.0;
      for (const auto& k : ks_) {
        const Abs2Value g = eval_.abs2_preferred(x.x * k.x);
        row += k.w * g.value;
        row_err += k.w * g.error;
      }
      sum += x.w * row;
      sample_error += x.w * row_err;
    }
    return sum;
  }

  Region make_region(const Rect& r, double coarse) {
    Region out{r, coarse, {}, 0.0};
    const auto q = quarters(r);
    for (int i = 0; i < 4; ++i) out.quads[i] = rule(q[i], out.sample_error);
    return out;
  }

 private:
  PanelRules rules_;
  ImagExpEvaluator eval_;
  std::vector<WeightedNode> xs_, ks_;
};

}  // namespace

TraceEstimate trace_quadrature(const IntervalSet& a, const IntervalSet& b, const MuContext& ctx,
                               const QuadratureSpec& spec) {
  spec.validate();
  TraceEstimate est;
  est.method = TraceMethod::quadrature;
  est.product_measures = measure(a, ctx) * measure(b, ctx);
  const double scale = ctx.norm_const() * ctx.norm_const();

  TensorIntegrator integrator(ctx, spec, std::max(a.sup_abs() * b.sup_abs(), 1.0));
  std::priority_queue<Region> queue;
  for (const auto& xa : a.split_at_zero()) {
    for (const auto& kb : b.split_at_zero()) {
      const Rect r{xa.lo, xa.hi, kb.lo, kb.hi};
      double unused = 0.0;
      queue.push(integrator.make_region(r, integrator.rule(r, unused)));
    }
  }

  while (true) {
    double value = 0.0;
    double disc = 0.0;
    double sampled = 0.0;
    for (std::priority_queue<Region> copy = queue; !copy.empty(); copy.pop()) {
      value += copy.top().fine();
      disc += copy.top().err();
      sampled += copy.top().sample_error;
    }
    est.value = scale * value;
    est.error_estimate = scale * (disc + sampled);
    est.deviation = est.value - est.product_measures;
    if (scale * disc <= std::max(spec.abs_tol, spec.rel_tol * est.value)) return est;
    if (est.steps >= spec.max_subdivisions) {
      throw EvaluationError("trace quadrature did not converge within max_subdivisions", est.value,
                            est.error_estimate);
    }
    const std::size_t batch = std::max<std::size_t>(1, queue.size() / 4);
    for (std::size_t i = 0; i < batch && !queue.empty(); ++i) {
      const Region worst = queue.top();
      queue.pop();
      const auto q = quarters(worst.rect);
      for (int j = 0; j < 4; ++j) queue.push(integrator.make_region(q[j], worst.quads[j]));
      ++est.steps;
    }
  }
}

TraceEstimate trace_moment_series(const IntervalSet& a, const IntervalSet& b, const MuContext& ctx,
                                  double tol, const MomentSeriesOptions& options) {
  if (!(tol > 0.0)) throw std::invalid_argument("trace_moment_series: tol must be positive");
  if (options.max_index < 2) throw std::invalid_argument("trace_moment_series: max_index must be >= 2");
  TraceEstimate est;
  est.method = TraceMethod::moment_series;
  est.product_measures = measure(a, ctx) * measure(b, ctx);
  if (a.empty() || b.empty()) return est;

  const double scale = ctx.norm_const() * ctx.norm_const();
  const double sa = a.sup_abs();
  const double sb = b.sup_abs();
  const double s = sa * sb;
  const double mass = moment(a, ctx, 0) * moment(b, ctx, 0) / scale;  // raw M_A(0) M_B(0)
  // Tail terms are bounded by b_j s^(2j) M_A(0) M_B(0); work in logs to avoid overflow.
  const auto log_term_bound = [&](const EvenAbs2Series& c, int j) {
    return std::log(c.coefficient_abs_bound(j)) + 2.0 * j * std::log(s) + std::log(mass);
  };

  for (int bits = options.precision_bits;; bits *= 2) {
    const EvenAbs2Series coeffs(ctx, options.max_index, bits);
    const int work = coeffs.bits();
    BigFloat sum(work);
    double abs_sum = 0.0;
    double coeff_error = 0.0;
    int small_run = 0;
    bool converged = false;
    double tail = 0.0;
    int j = 0;
    for (; j <= options.max_index - 1; ++j) {
      const BigFloat ma = raw_moment(a, ctx, 2 * j, work);
      const BigFloat mb = raw_moment(b, ctx, 2 * j, work);
      const BigFloat mm = ma * mb;
      const BigFloat term = coeffs.coefficient(j) * mm;
      sum += term;
      abs_sum += std::abs(term.to_double());
      coeff_error += coeffs.coefficient_error(j) * std::abs(mm.to_double());
      const double partial = std::abs(sum.to_double());
      small_run = std::abs(term.to_double()) < tol * partial ? small_run + 1 : 0;
      if (small_run >= 3 && 2.0 * j > s) {
        const double t1 = log_term_bound(coeffs, j + 1);
        const double ratio = std::exp(log_term_bound(coeffs, j + 2) - t1);
        if (ratio < 1.0) {
          tail = std::exp(t1) / (1.0 - ratio);
          if (tail <= tol * partial) {
            converged = true;
            break;
          }
        }
      }
    }
    est.steps = j + 1;
    const double value = sum.to_double();
    if (!converged) {
      throw EvaluationError("moment series did not converge by j = " + std::to_string(options.max_index) +
                                "; use the quadrature method",
                            scale * value, scale * abs_sum);
    }
    const double rounding = coeff_error + 8.0 * (j + 4) * sum.unit_roundoff() * abs_sum;
    if (rounding > tol * std::abs(value) && 2 * bits <= options.max_precision_bits) continue;
    if (rounding > tol * std::abs(value) && rounding > 1e-3 * std::abs(value)) {
      throw EvaluationError("moment series cancellation exceeds the precision budget; use the quadrature method",
                            scale * value, scale * (rounding + tail));
    }
    est.value = scale * value;
    est.error_estimate = scale * (tail + rounding) + 4.0 * 1.1102230246251565e-16 * std::abs(est.value);
    est.deviation = est.value - est.product_measures;
    return est;
  }
}

}  // namespace mudef::trace
