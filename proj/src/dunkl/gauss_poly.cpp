#include "mudef/dunkl/gauss_poly.hpp"

#include <cmath>

namespace mudef::dunkl {

std::string ComplexRational::to_string() const {
  if (im == 0) return re.get_str();
  const std::string imag = (im == 1 ? "" : im == -1 ? "-" : im.get_str() + "*") + std::string("i");
  if (re == 0) return imag;
  return re.get_str() + (im > 0 ? " + " : " ") + imag;
}

ComplexMuPoly& ComplexMuPoly::operator+=(const ComplexMuPoly& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexMuPoly& ComplexMuPoly::operator-=(const ComplexMuPoly& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexMuPoly operator*(const ComplexMuPoly& a, const ComplexMuPoly& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string ComplexMuPoly::to_string() const {
  if (im.is_zero()) return re.is_zero() ? "0" : re.to_string();
  const std::string imag = "(" + im.to_string() + ")*i";
  if (re.is_zero()) return imag;
  return "(" + re.to_string() + ") + " + imag;
}

GaussPoly::GaussPoly(std::vector<ComplexMuPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void GaussPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussPoly GaussPoly::basis(int n) {
  if (n < 0) throw std::invalid_argument("GaussPoly::basis: n must be non-negative");
  std::vector<ComplexMuPoly> c(n + 1);
  c[n] = ComplexMuPoly(MuPolynomial(1));
  return GaussPoly(std::move(c));
}

ComplexMuPoly GaussPoly::coefficient(int n) const {
  if (n < 0 || n >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[n];
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  trim();
  return *this;
}

GaussPoly& GaussPoly::operator-=(const GaussPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  trim();
  return *this;
}

GaussPoly operator*(const ComplexMuPoly& c, const GaussPoly& p) {
  std::vector<ComplexMuPoly> out;
  out.reserve(p.coeffs_.size());
  for (const auto& a : p.coeffs_) out.push_back(c * a);
  return GaussPoly(std::move(out));
}

GaussPoly GaussPoly::poly_times(const GaussPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<ComplexMuPoly> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return GaussPoly(std::move(out));
}

GaussPoly GaussPoly::specialize(const BigRational& mu) const {
  std::vector<ComplexMuPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.specialize(mu));
  return GaussPoly(std::move(out));
}

std::vector<std::complex<double>> GaussPoly::numeric_coefficients(double mu) const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.evaluate(mu));
  return out;
}

std::complex<double> GaussPoly::evaluate(double x, double mu) const {
  std::complex<double> sum = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) sum = sum * x + it->evaluate(mu);
  return sum * std::exp(-x * x / 2.0);
}

std::string GaussPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = coeffs_[n].to_string();
    if (n == 0) {
      out += c;
    } else {
      if (c != "1") out += "(" + c + ")*";
      out += n == 1 ? "x" : "x^" + std::to_string(n);
    }
  }
  return "(" + out + ") * gauss";
}

nlohmann::json GaussPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n].is_zero()) continue;
    terms.push_back({{"power", n}, {"re", coeffs_[n].re.to_strings()}, {"im", coeffs_[n].im.to_strings()}});
  }
  return {{"text", to_string()}, {"terms", std::move(terms)}};
}

}  // namespace mudef::dunkl
