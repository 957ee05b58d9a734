#pragma once

#include "mudef/bigfloat.hpp"
#include "mudef/context.hpp"
#include "mudef/trace/interval_set.hpp"

namespace mudef::trace {

/// m_mu(A) = norm_const * integral over A of |x|^(2 mu) dx, in closed form.
double measure(const IntervalSet& a, const MuContext& ctx);

/// integral over A of x^n dm_mu(x); negative parts are reflected with sign (-1)^n.
double moment(const IntervalSet& a, const MuContext& ctx, int n);

/// integral over A of x^n |x|^(2 mu) dx (no normalization) in MPFR at the given precision.
BigFloat raw_moment(const IntervalSet& a, const MuContext& ctx, int n, int bits);

}  // namespace mudef::trace
