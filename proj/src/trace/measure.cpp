#include "mudef/trace/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace mudef::trace {

namespace {

// integral of x^(p-1) over [a, b] with 0 <= a < b, as (b^p - a^p) / p
double positive_piece(double a, double b, double p) {
  const double upper = std::pow(b, p);
  const double lower = a > 0.0 ? std::pow(a, p) : 0.0;
  return (upper - lower) / p;
}

template <class PieceFn>
void for_each_piece(const IntervalSet& a, int n, PieceFn&& fn) {
  for (const auto& iv : a.split_at_zero()) {
    if (iv.lo >= 0.0) {
      fn(iv.lo, iv.hi, 1);
    } else {
      fn(-iv.hi, -iv.lo, n % 2 == 0 ? 1 : -1);
    }
  }
}

}  // namespace

double measure(const IntervalSet& a, const MuContext& ctx) { return moment(a, ctx, 0); }

double moment(const IntervalSet& a, const MuContext& ctx, int n) {
  if (n < 0) throw std::invalid_argument("moment: n must be non-negative");
  const double p = 2.0 * ctx.mu() + n + 1.0;
  double sum = 0.0;
  for_each_piece(a, n, [&](double lo, double hi, int sign) { sum += sign * positive_piece(lo, hi, p); });
  return ctx.norm_const() * sum;
}

BigFloat raw_moment(const IntervalSet& a, const MuContext& ctx, int n, int bits) {
  if (n < 0) throw std::invalid_argument("raw_moment: n must be non-negative");
  BigFloat p(2.0 * ctx.mu(), bits);
  p += static_cast<double>(n + 1);
  BigFloat sum(bits);
  for_each_piece(a, n, [&](double lo, double hi, int sign) {
    BigFloat piece = pow(BigFloat(hi, bits), p);
    if (lo > 0.0) piece -= pow(BigFloat(lo, bits), p);
    if (sign < 0) sum -= piece; else sum += piece;
  });
  return sum / p;
}

}  // namespace mudef::trace
