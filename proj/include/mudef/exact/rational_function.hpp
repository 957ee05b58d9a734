#pragma once

#include <string>

#include "mudef/exact/mu_polynomial.hpp"

namespace mudef::exact {

/// Exact rational function num(mu) / den(mu).
///
/// Always reduced: num and den are coprime and den is monic, so two functions
/// are equal iff their coefficient lists are equal. The zero function is 0 / 1.
class MuRationalFunction {
 public:
  MuRationalFunction() : num_(), den_(1) {}
  MuRationalFunction(const MuPolynomial& p) : num_(p), den_(1) {}  // NOLINT
  MuRationalFunction(const BigRational& c) : num_(c), den_(1) {}   // NOLINT
  MuRationalFunction(long c) : MuRationalFunction(BigRational(c)) {}  // NOLINT
  /// Throws std::domain_error if den is the zero polynomial.
  MuRationalFunction(MuPolynomial num, MuPolynomial den);

  const MuPolynomial& num() const { return num_; }
  const MuPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  MuRationalFunction& operator+=(const MuRationalFunction& o);
  MuRationalFunction& operator-=(const MuRationalFunction& o);
  MuRationalFunction& operator*=(const MuRationalFunction& o);
  MuRationalFunction& operator/=(const MuRationalFunction& o);

  friend MuRationalFunction operator+(MuRationalFunction a, const MuRationalFunction& b) { return a += b; }
  friend MuRationalFunction operator-(MuRationalFunction a, const MuRationalFunction& b) { return a -= b; }
  friend MuRationalFunction operator*(MuRationalFunction a, const MuRationalFunction& b) { return a *= b; }
  friend MuRationalFunction operator/(MuRationalFunction a, const MuRationalFunction& b) { return a /= b; }
  friend bool operator==(const MuRationalFunction& a, const MuRationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  double evaluate(double mu) const { return num_.evaluate(mu) / den_.evaluate(mu); }

  std::string to_string() const;

 private:
  void normalize();
  MuPolynomial num_;
  MuPolynomial den_;
};

/// Exact value at a rational mu. Throws EvaluationError at a pole.
BigRational eval_rational(const MuRationalFunction& f, const BigRational& mu);

/// a.num * b.den == b.num * a.den, compared coefficient-wise. Does not rely on
/// either side being reduced.
bool cross_multiplied_equal(const MuRationalFunction& a, const MuRationalFunction& b);

}  // namespace mudef::exact
