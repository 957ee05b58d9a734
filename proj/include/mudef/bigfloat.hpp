#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace mudef {

/// Owning MPFR value with an explicit binary precision.
///
/// Every value carries its own precision; binary operations produce a result
/// at the larger of the two operand precisions. No process-wide default
/// precision is consulted, so values may be used freely from several threads.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(int x, mpfr_prec_t bits) : BigFloat(static_cast<long>(x), bits) {}

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(double d) { mpfr_mul_d(v_, v_, d, MPFR_RNDN); return *this; }
  BigFloat& operator/=(double d) { mpfr_div_d(v_, v_, d, MPFR_RNDN); return *this; }
  BigFloat& operator+=(double d) { mpfr_add_d(v_, v_, d, MPFR_RNDN); return *this; }

  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

#define MUDEF_BIGFLOAT_BINOP(op, fn)                                    \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {   \
    BigFloat r(std::max(a.precision(), b.precision()));                 \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                    \
    return r;                                                           \
  }
  MUDEF_BIGFLOAT_BINOP(+, mpfr_add)
  MUDEF_BIGFLOAT_BINOP(-, mpfr_sub)
  MUDEF_BIGFLOAT_BINOP(*, mpfr_mul)
  MUDEF_BIGFLOAT_BINOP(/, mpfr_div)
#undef MUDEF_BIGFLOAT_BINOP

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
    BigFloat r(std::max(base.precision(), exponent.precision()));
    mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

  /// Unit roundoff 2^-precision as a double (may underflow to 0 for huge precisions).
  double unit_roundoff() const { return std::ldexp(1.0, -static_cast<int>(precision())); }

 private:
  mpfr_t v_;
};

}  // namespace mudef
