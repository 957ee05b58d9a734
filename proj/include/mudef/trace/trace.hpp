#pragma once

#include <string>

#include "mudef/context.hpp"
#include "mudef/trace/interval_set.hpp"
#include "mudef/trace/quadrature.hpp"

namespace mudef::trace {

enum class TraceMethod { quadrature, moment_series };

const char* to_string(TraceMethod m);

/// Tr(E^Q(A) E^P(B)) as the double integral of |exp_mu(ikx)|^2 against dm_mu(x) dm_mu(k).
struct TraceEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  TraceMethod method = TraceMethod::quadrature;
  double product_measures = 0.0;  ///< m_mu(A) m_mu(B)
  double deviation = 0.0;         ///< value - product_measures
  int steps = 0;                  ///< subdivisions (quadrature) or series terms (moment series)
};

/// Tensor-product adaptive quadrature. The integrand uses the eta_mu integral
/// for mu > 0 and the escalating power series otherwise.
TraceEstimate trace_quadrature(const IntervalSet& a, const IntervalSet& b, const MuContext& ctx,
                               const QuadratureSpec& spec = {});

struct MomentSeriesOptions {
  int max_index = 200;        ///< hard cap on j; exceeding it throws
  int precision_bits = 212;   ///< working precision on top of the coefficient guard bits
  int max_precision_bits = 8192;
};

/// sum_j c_j M_A(2j) M_B(2j), with c_j the even coefficients of |exp_mu(is)|^2
/// and M the exact moments, summed in MPFR. Throws EvaluationError (suggesting
/// quadrature) if the series has not converged by max_index or rounding cannot
/// be brought below tol within max_precision_bits.
TraceEstimate trace_moment_series(const IntervalSet& a, const IntervalSet& b, const MuContext& ctx,
                                  double tol = 1e-16, const MomentSeriesOptions& options = {});

}  // namespace mudef::trace
