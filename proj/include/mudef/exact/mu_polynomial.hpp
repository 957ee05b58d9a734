#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace mudef::exact {

/// Arbitrary-precision rational; GMP keeps it in lowest terms with a positive
/// denominator.
using BigRational = mpq_class;

/// num/den in canonical form (the two-argument mpq_class constructor does not reduce).
BigRational make_rational(long num, long den);

/// Polynomial in mu with exact rational coefficients; coefficient i multiplies mu^i.
/// The highest stored coefficient is nonzero unless the polynomial is zero
/// (which is stored as an empty coefficient list).
class MuPolynomial {
 public:
  MuPolynomial() = default;
  MuPolynomial(const BigRational& c);  // NOLINT: constants convert implicitly
  MuPolynomial(long c) : MuPolynomial(BigRational(c)) {}  // NOLINT
  explicit MuPolynomial(std::vector<BigRational> coeffs);
  MuPolynomial(std::initializer_list<BigRational> coeffs)
      : MuPolynomial(std::vector<BigRational>(coeffs)) {}

  /// The monomial mu.
  static MuPolynomial mu();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  BigRational coefficient(int i) const;
  const BigRational& leading() const { return coeffs_.back(); }

  MuPolynomial& operator+=(const MuPolynomial& o);
  MuPolynomial& operator-=(const MuPolynomial& o);
  MuPolynomial& operator*=(const MuPolynomial& o);
  MuPolynomial& operator*=(const BigRational& c);

  friend MuPolynomial operator+(MuPolynomial a, const MuPolynomial& b) { return a += b; }
  friend MuPolynomial operator-(MuPolynomial a, const MuPolynomial& b) { return a -= b; }
  friend MuPolynomial operator*(MuPolynomial a, const MuPolynomial& b) { return a *= b; }
  friend MuPolynomial operator*(MuPolynomial a, const BigRational& c) { return a *= c; }
  friend MuPolynomial operator*(const BigRational& c, MuPolynomial a) { return a *= c; }
  friend MuPolynomial operator*(long c, MuPolynomial a) { return a *= BigRational(c); }
  friend MuPolynomial operator-(MuPolynomial a);
  friend bool operator==(const MuPolynomial& a, const MuPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  BigRational evaluate(const BigRational& mu) const;
  double evaluate(double mu) const;

  /// Monic multiple (the zero polynomial maps to itself).
  MuPolynomial monic() const;

  /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
  std::pair<MuPolynomial, MuPolynomial> divmod(const MuPolynomial& divisor) const;

  /// Coefficients as "p/q" strings, lowest degree first.
  std::vector<std::string> to_strings() const;
  /// Human-readable form such as "8*mu + 4".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Monic greatest common divisor (zero if both are zero).
MuPolynomial gcd(const MuPolynomial& a, const MuPolynomial& b);

}  // namespace mudef::exact
