#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mudef/jacobi.hpp"
#include "mudef/trace/interval_set.hpp"

namespace mudef::trace {

struct QuadratureSpec {
  int nodes_per_panel = 12;
  int max_subdivisions = 4000;
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;

  /// Throws std::invalid_argument unless all fields are positive and both
  /// tolerances lie in (0, 1).
  void validate() const;
};

struct WeightedNode {
  double x;
  double w;
};

/// Panel rules for integrals against |x|^(2 mu) dx (no normalization).
/// A panel with an endpoint at 0 uses Gauss-Jacobi nodes that absorb the
/// power weight exactly; other panels use Gauss-Legendre times |x|^(2 mu).
class PanelRules {
 public:
  PanelRules(int nodes_per_panel, double mu);

  int size() const { return static_cast<int>(legendre_.nodes.size()); }
  /// Fills out with nodes for [lo, hi]; the panel must not contain 0 in its interior.
  void panel(double lo, double hi, std::vector<WeightedNode>& out) const;
  std::vector<WeightedNode> panel(double lo, double hi) const;

 private:
  double two_mu_;
  GaussRule legendre_;
  GaussRule jacobi_;  // weight (1 + t)^(2 mu)
};

/// Integrand sample: value and an absolute error bound on it.
struct Sample {
  std::complex<double> value;
  double error = 0.0;
};

struct AdaptiveResult {
  std::complex<double> value;
  double error = 0.0;  ///< discretization estimate plus propagated sample errors
  int subdivisions = 0;
};

/// Adaptive integral of f against |x|^(2 mu) dx over the union of segments
/// (none may straddle 0). Each region compares its n-point value with the
/// sum over its two halves; the worst region is bisected until the summed
/// differences meet spec. Throws EvaluationError carrying the best estimate
/// when max_subdivisions is exhausted.
AdaptiveResult integrate_weighted(const std::function<Sample(double)>& f,
                                  const std::vector<Interval>& segments, const PanelRules& rules,
                                  const QuadratureSpec& spec);

}  // namespace mudef::trace
