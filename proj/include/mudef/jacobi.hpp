#pragma once

#include <complex>
#include <vector>

#include "mudef/context.hpp"

namespace mudef {

/// Gauss rule on [-1, 1] for the weight (1-t)^alpha (1+t)^beta. Weights are
/// unnormalized: they sum to the total mass of the weight.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch construction from the monic Jacobi three-term recurrence.
/// Requires n >= 1 and alpha, beta > -1.
GaussRule gauss_jacobi(int n, double alpha, double beta);
GaussRule gauss_legendre(int n);

/// Total mass 2^(a+b+1) B(a+1, b+1) of (1-t)^a (1+t)^b on [-1, 1].
double jacobi_mass(double alpha, double beta);

/// Gauss rule for the probability measure
///   d eta_mu(t) = B(1/2, mu)^-1 (1-t)^(mu-1) (1+t)^mu dt  on [-1, 1].
struct JacobiRule {
  std::vector<double> nodes;    ///< strictly increasing, in (-1, 1)
  std::vector<double> weights;  ///< positive, summing to 1
  double raw_mass = 0.0;        ///< integral of the unnormalized weight, equal to B(1/2, mu)
};

/// Throws DomainError for mu <= 0 and std::invalid_argument for n_nodes < 1.
JacobiRule eta_rule(const MuContext& ctx, int n_nodes);

/// Smallest node count for which the eta_mu rule integrates e^(i s t), |s| <= s_max,
/// with a Gauss error bound below 1e-18.
int eta_nodes_for(double s_max);

/// Bound 4 (|s|/2)^(2n) / (2n)! on the n-point Gauss error for cos(st) or sin(st)
/// against a probability measure on [-1, 1].
double gauss_trig_error_bound(int n, double s);

/// exp_mu(z) = integral of e^(zt) d eta_mu(t), evaluated with the given rule.
/// Throws DomainError for mu <= 0.
std::complex<double> exp_mu_integral(std::complex<double> z, const MuContext& ctx,
                                     const JacobiRule& rule);

}  // namespace mudef
