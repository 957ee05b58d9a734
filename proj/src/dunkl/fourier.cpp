#include "mudef/dunkl/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "mudef/dunkl/operators.hpp"
#include "mudef/imag_exp.hpp"

namespace mudef::dunkl {

double truncation_radius(const GaussPoly& psi, const MuContext& ctx, double abs_tol) {
  double cmax = 0.0;
  for (const auto& c : psi.numeric_coefficients(ctx.mu())) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) return 1.0;
  const double power = psi.degree() + 1.0 + std::max(2.0 * ctx.mu(), 0.0);
  const auto bound = [&](double r) { return std::log(cmax) + power * std::log(r) - r * r / 2.0; };
  double r = std::max(1.0, std::sqrt(power));  // the bound decreases beyond sqrt(power)
  while (bound(r) >= std::log(abs_tol)) r += 0.25;
  return r;
}

std::vector<FourierValue> fourier_mu_numeric(const GaussPoly& psi, const std::vector<double>& k_points,
                                             const MuContext& ctx, const trace::QuadratureSpec& spec) {
  spec.validate();
  const double r = truncation_radius(psi, ctx, spec.abs_tol);
  double k_max = 0.0;
  for (double k : k_points) k_max = std::max(k_max, std::abs(k));
  const ImagExpEvaluator eval(ctx, std::max(k_max * r, 1.0));
  const trace::PanelRules rules(spec.nodes_per_panel, ctx.mu());
  const std::vector<std::complex<double>> coeffs = psi.numeric_coefficients(ctx.mu());
  const auto psi_at = [&](double x) {
    std::complex<double> sum = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * x + *it;
    return sum * std::exp(-x * x / 2.0);
  };

  std::vector<FourierValue> out;
  out.reserve(k_points.size());
  for (double k : k_points) {
    const auto f = [&](double x) {
      const double s = -k * x;
      std::complex<double> e;
      double err = 0.0;
      if (eval.has_integral()) {
        e = eval.integral(s, &err);
      } else {
        const SeriesResult sr = eval.series(s);
        e = sr.value;
        err = sr.error();
      }
      const std::complex<double> p = psi_at(x);
      return trace::Sample{e * p, err * std::abs(p)};
    };
    const trace::AdaptiveResult res = trace::integrate_weighted(f, {{-r, 0.0}, {0.0, r}}, rules, spec);
    // the truncated tail is below abs_tol by the choice of R (|exp_mu| grows at most polynomially)
    out.push_back({k, ctx.norm_const() * res.value, ctx.norm_const() * (res.error + 2.0 * spec.abs_tol)});
  }
  return out;
}

IntertwiningReport intertwining_check(const GaussPoly& psi, const std::vector<double>& k_points,
                                      const MuContext& ctx, const trace::QuadratureSpec& spec) {
  const std::vector<FourierValue> lhs = fourier_mu_numeric(apply_P(psi), k_points, ctx, spec);
  const std::vector<FourierValue> rhs = fourier_mu_numeric(psi, k_points, ctx, spec);
  IntertwiningReport rep;
  rep.k_points = k_points;
  for (std::size_t i = 0; i < k_points.size(); ++i) {
    const std::complex<double> right = k_points[i] * rhs[i].value;
    rep.transform_of_p.push_back(lhs[i].value);
    rep.k_times_transform.push_back(right);
    const double d = std::abs(lhs[i].value - right);
    rep.discrepancy.push_back(d);
    rep.max_discrepancy = std::max(rep.max_discrepancy, d);
    rep.max_quadrature_error =
        std::max(rep.max_quadrature_error, lhs[i].error + std::abs(k_points[i]) * rhs[i].error);
  }
  return rep;
}

}  // namespace mudef::dunkl
