#pragma once

#include <complex>
#include <vector>

#include "mudef/context.hpp"
#include "mudef/dunkl/gauss_poly.hpp"
#include "mudef/trace/quadrature.hpp"

namespace mudef::dunkl {

struct FourierValue {
  double k = 0.0;
  std::complex<double> value;
  double error = 0.0;
};

/// Radius R with (max |c_n|) R^(deg + 1 + max(2mu, 0)) e^(-R^2/2) < abs_tol.
double truncation_radius(const GaussPoly& psi, const MuContext& ctx, double abs_tol);

/// F_mu psi(k) = integral of exp_mu(-ikx) psi(x) dm_mu(x) over [-R, R], by
/// adaptive quadrature with weight-aware panels at 0. Throws EvaluationError
/// if the quadrature does not converge.
std::vector<FourierValue> fourier_mu_numeric(const GaussPoly& psi, const std::vector<double>& k_points,
                                             const MuContext& ctx, const trace::QuadratureSpec& spec = {});

struct IntertwiningReport {
  std::vector<double> k_points;
  std::vector<std::complex<double>> transform_of_p;  ///< F(P psi)(k)
  std::vector<std::complex<double>> k_times_transform;  ///< k F(psi)(k)
  std::vector<double> discrepancy;
  double max_discrepancy = 0.0;
  double max_quadrature_error = 0.0;  ///< largest combined error bound of the two sides
};

/// Compares F(P psi)(k) with k F(psi)(k) (P with kappa = 1).
IntertwiningReport intertwining_check(const GaussPoly& psi, const std::vector<double>& k_points,
                                      const MuContext& ctx, const trace::QuadratureSpec& spec = {});

}  // namespace mudef::dunkl
