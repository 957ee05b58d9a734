#pragma once

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"
#include "mudef/exact/mu_polynomial.hpp"

namespace mudef::dunkl {

using exact::BigRational;
using exact::MuPolynomial;

/// Exact complex rational constant.
struct ComplexRational {
  BigRational re;
  BigRational im;

  static ComplexRational i() { return {0, 1}; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string() const;
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// re + i im with polynomial-in-mu parts.
struct ComplexMuPoly {
  MuPolynomial re;
  MuPolynomial im;

  ComplexMuPoly() = default;
  ComplexMuPoly(MuPolynomial r, MuPolynomial i = {}) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  ComplexMuPoly(const ComplexRational& c) : re(c.re), im(c.im) {}  // NOLINT

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ComplexMuPoly times_i() const { return {-im, re}; }

  ComplexMuPoly& operator+=(const ComplexMuPoly& o);
  ComplexMuPoly& operator-=(const ComplexMuPoly& o);
  friend ComplexMuPoly operator+(ComplexMuPoly a, const ComplexMuPoly& b) { return a += b; }
  friend ComplexMuPoly operator-(ComplexMuPoly a, const ComplexMuPoly& b) { return a -= b; }
  friend ComplexMuPoly operator*(const ComplexMuPoly& a, const ComplexMuPoly& b);
  friend ComplexMuPoly operator-(const ComplexMuPoly& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexMuPoly& a, const ComplexMuPoly& b) = default;

  std::complex<double> evaluate(double mu) const { return {re.evaluate(mu), im.evaluate(mu)}; }
  ComplexMuPoly specialize(const BigRational& mu) const { return {re.evaluate(mu), im.evaluate(mu)}; }
  std::string to_string() const;
};

/// psi(x) = (sum_n c_n x^n) e^(-x^2/2) with c_n complex polynomials in mu.
/// Trailing zero coefficients are trimmed; the zero function has no coefficients.
class GaussPoly {
 public:
  GaussPoly() = default;
  explicit GaussPoly(std::vector<ComplexMuPoly> coeffs);

  /// x^n e^(-x^2/2)
  static GaussPoly basis(int n);
  static GaussPoly gaussian() { return basis(0); }

  const std::vector<ComplexMuPoly>& coefficients() const { return coeffs_; }
  ComplexMuPoly coefficient(int n) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  GaussPoly& operator+=(const GaussPoly& o);
  GaussPoly& operator-=(const GaussPoly& o);
  friend GaussPoly operator+(GaussPoly a, const GaussPoly& b) { return a += b; }
  friend GaussPoly operator-(GaussPoly a, const GaussPoly& b) { return a -= b; }
  friend GaussPoly operator*(const ComplexMuPoly& c, const GaussPoly& p);
  friend bool operator==(const GaussPoly& a, const GaussPoly& b) = default;

  /// Product of the polynomial parts (the Gaussian factor is kept once).
  GaussPoly poly_times(const GaussPoly& o) const;
  /// Coefficients with mu replaced by a rational value.
  GaussPoly specialize(const BigRational& mu) const;
  /// Numeric coefficients at a real mu.
  std::vector<std::complex<double>> numeric_coefficients(double mu) const;
  /// psi(x) at a real mu.
  std::complex<double> evaluate(double x, double mu) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void trim();
  std::vector<ComplexMuPoly> coeffs_;
};

}  // namespace mudef::dunkl
