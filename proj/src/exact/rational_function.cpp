#include "mudef/exact/rational_function.hpp"

#include <stdexcept>

#include "mudef/errors.hpp"

namespace mudef::exact {

MuRationalFunction::MuRationalFunction(MuPolynomial num, MuPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("MuRationalFunction: zero denominator");
  normalize();
}

void MuRationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MuPolynomial(1);
    return;
  }
  const MuPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const BigRational scale = 1 / den_.leading();
  num_ *= scale;
  den_ *= scale;
}

MuRationalFunction& MuRationalFunction::operator+=(const MuRationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

MuRationalFunction& MuRationalFunction::operator-=(const MuRationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

MuRationalFunction& MuRationalFunction::operator*=(const MuRationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

MuRationalFunction& MuRationalFunction::operator/=(const MuRationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("MuRationalFunction: division by zero function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string MuRationalFunction::to_string() const {
  if (den_ == MuPolynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

BigRational eval_rational(const MuRationalFunction& f, const BigRational& mu) {
  const BigRational d = f.den().evaluate(mu);
  if (d == 0) throw EvaluationError("eval_rational: pole at mu = " + mu.get_str());
  return f.num().evaluate(mu) / d;
}

bool cross_multiplied_equal(const MuRationalFunction& a, const MuRationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace mudef::exact
