#include "mudef/trace/quadrature.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

#include "mudef/errors.hpp"

namespace mudef::trace {

void QuadratureSpec::validate() const {
  if (nodes_per_panel < 1 || max_subdivisions < 1) {
    throw std::invalid_argument("quadrature spec: node and subdivision counts must be positive");
  }
  if (!(rel_tol > 0.0 && rel_tol < 1.0) || !(abs_tol > 0.0 && abs_tol < 1.0)) {
    throw std::invalid_argument("quadrature spec: tolerances must lie in (0, 1)");
  }
}

PanelRules::PanelRules(int nodes_per_panel, double mu)
    : two_mu_(2.0 * mu),
      legendre_(gauss_legendre(nodes_per_panel)),
      jacobi_(gauss_jacobi(nodes_per_panel, 0.0, 2.0 * mu)) {}

void PanelRules::panel(double lo, double hi, std::vector<WeightedNode>& out) const {
  out.clear();
  if (lo == 0.0 || hi == 0.0) {
    // x = e (1 + t) / 2 with e the nonzero endpoint, so |x|^(2mu) = (|e|/2)^(2mu) (1+t)^(2mu)
    const double e = lo == 0.0 ? hi : lo;
    const double half = std::abs(e) / 2.0;
    const double scale = std::pow(half, two_mu_ + 1.0);
    for (std::size_t i = 0; i < jacobi_.nodes.size(); ++i) {
      out.push_back({e * (1.0 + jacobi_.nodes[i]) / 2.0, scale * jacobi_.weights[i]});
    }
    return;
  }
  if (lo < 0.0 && hi > 0.0) throw std::invalid_argument("PanelRules: panel straddles 0");
  const double mid = (lo + hi) / 2.0;
  const double half = (hi - lo) / 2.0;
  for (std::size_t i = 0; i < legendre_.nodes.size(); ++i) {
    const double x = mid + half * legendre_.nodes[i];
    out.push_back({x, half * legendre_.weights[i] * std::pow(std::abs(x), two_mu_)});
  }
}

std::vector<WeightedNode> PanelRules::panel(double lo, double hi) const {
  std::vector<WeightedNode> out;
  panel(lo, hi, out);
  return out;
}

namespace {

struct Region {
  double lo, hi;
  std::complex<double> coarse;
  std::complex<double> halves[2];
  double sample_error[2];
  double err() const { return std::abs(halves[0] + halves[1] - coarse); }
  bool operator<(const Region& o) const { return err() < o.err(); }
};

}  // namespace

AdaptiveResult integrate_weighted(const std::function<Sample(double)>& f,
                                  const std::vector<Interval>& segments, const PanelRules& rules,
                                  const QuadratureSpec& spec) {
  spec.validate();
  std::vector<WeightedNode> nodes;
  const auto rule = [&](double lo, double hi, double& sample_error) {
    rules.panel(lo, hi, nodes);
    std::complex<double> sum = 0.0;
    sample_error = 0.0;
    for (const auto& nd : nodes) {
      const Sample s = f(nd.x);
      sum += nd.w * s.value;
      sample_error += std::abs(nd.w) * s.error;
    }
    return sum;
  };
  const auto make_region = [&](double lo, double hi, std::complex<double> coarse) {
    Region r{lo, hi, coarse, {}, {}};
    const double mid = (lo + hi) / 2.0;
    r.halves[0] = rule(lo, mid, r.sample_error[0]);
    r.halves[1] = rule(mid, hi, r.sample_error[1]);
    return r;
  };

  std::priority_queue<Region> queue;
  for (const auto& seg : segments) {
    double unused = 0.0;
    queue.push(make_region(seg.lo, seg.hi, rule(seg.lo, seg.hi, unused)));
  }

  AdaptiveResult result;
  const auto totals = [&]() {
    std::priority_queue<Region> copy = queue;
    std::complex<double> value = 0.0;
    double disc = 0.0;
    double sampled = 0.0;
    while (!copy.empty()) {
      const Region& r = copy.top();
      value += r.halves[0] + r.halves[1];
      disc += r.err();
      sampled += r.sample_error[0] + r.sample_error[1];
      copy.pop();
    }
    return std::make_tuple(value, disc, sampled);
  };

  while (true) {
    auto [value, disc, sampled] = totals();
    result.value = value;
    result.error = disc + sampled;
    if (disc <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) return result;
    if (result.subdivisions >= spec.max_subdivisions) {
      throw EvaluationError("adaptive quadrature did not converge within max_subdivisions",
                            std::abs(value), result.error);
    }
    // Refine in batches so the running totals are recomputed only occasionally.
    const std::size_t batch = std::max<std::size_t>(1, queue.size() / 4);
    for (std::size_t i = 0; i < batch && !queue.empty(); ++i) {
      const Region worst = queue.top();
      queue.pop();
      const double mid = (worst.lo + worst.hi) / 2.0;
      queue.push(make_region(worst.lo, mid, worst.halves[0]));
      queue.push(make_region(mid, worst.hi, worst.halves[1]));
      ++result.subdivisions;
    }
  }
}

}  // namespace mudef::trace
