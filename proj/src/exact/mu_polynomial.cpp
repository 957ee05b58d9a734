#include "mudef/exact/mu_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace mudef::exact {

BigRational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

MuPolynomial::MuPolynomial(const BigRational& c) {
  if (c != 0) coeffs_.push_back(c);
}

MuPolynomial::MuPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

MuPolynomial MuPolynomial::mu() { return MuPolynomial({BigRational(0), BigRational(1)}); }

void MuPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational MuPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

MuPolynomial& MuPolynomial::operator+=(const MuPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

MuPolynomial& MuPolynomial::operator-=(const MuPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

MuPolynomial& MuPolynomial::operator*=(const MuPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

MuPolynomial& MuPolynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

MuPolynomial operator-(MuPolynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

BigRational MuPolynomial::evaluate(const BigRational& mu) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * mu + *it;
  return acc;
}

double MuPolynomial::evaluate(double mu) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * mu + it->get_d();
  return acc;
}

MuPolynomial MuPolynomial::monic() const {
  if (is_zero()) return *this;
  MuPolynomial out = *this;
  const BigRational inv = 1 / leading();
  out *= inv;
  return out;
}

std::pair<MuPolynomial, MuPolynomial> MuPolynomial::divmod(const MuPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("MuPolynomial::divmod: division by zero polynomial");
  std::vector<BigRational> rem = coeffs_;
  const int dd = divisor.degree();
  const int qd = degree() - dd;
  if (qd < 0) return {MuPolynomial(), *this};
  std::vector<BigRational> quot(qd + 1);
  const BigRational inv_lead = 1 / divisor.leading();
  for (int k = qd; k >= 0; --k) {
    const BigRational factor = rem[k + dd] * inv_lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= factor * divisor.coeffs_[i];
  }
  rem.resize(dd);
  return {MuPolynomial(std::move(quot)), MuPolynomial(std::move(rem))};
}

std::vector<std::string> MuPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

std::string MuPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRational a = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "mu";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

MuPolynomial gcd(const MuPolynomial& a, const MuPolynomial& b) {
  MuPolynomial x = a.monic();
  MuPolynomial y = b.monic();
  while (!y.is_zero()) {
    MuPolynomial r = x.divmod(y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace mudef::exact
