#include "mudef/dunkl/operators.hpp"

namespace mudef::dunkl {

namespace {

const ComplexMuPoly kMinusI(MuPolynomial(), MuPolynomial(-1));
const ComplexMuPoly kI(MuPolynomial(), MuPolynomial(1));

}  // namespace

GaussPoly apply_Q(const GaussPoly& psi) {
  if (psi.is_zero()) return {};
  std::vector<ComplexMuPoly> out(psi.coefficients().size() + 1);
  for (std::size_t n = 0; n < psi.coefficients().size(); ++n) out[n + 1] = psi.coefficients()[n];
  return GaussPoly(std::move(out));
}

GaussPoly apply_J(const GaussPoly& psi) {
  std::vector<ComplexMuPoly> out = psi.coefficients();
  for (std::size_t n = 1; n < out.size(); n += 2) out[n] = -out[n];
  return GaussPoly(std::move(out));
}

GaussPoly apply_P(const GaussPoly& psi, const BigRational& kappa) {
  if (psi.is_zero()) return {};
  // psi = p e^(-x^2/2): psi' = (p' - x p) e^(-x^2/2) and (psi - J psi)/x = 2 sum_{n odd} c_n x^(n-1)
  const auto& c = psi.coefficients();
  const MuPolynomial reflection = MuPolynomial::mu() * BigRational(2 * kappa);
  std::vector<ComplexMuPoly> d(c.size() + 1);
  for (std::size_t n = 1; n < c.size(); ++n) {
    d[n - 1] += ComplexMuPoly(MuPolynomial(static_cast<long>(n))) * c[n];
    if (n % 2 == 1) d[n - 1] += ComplexMuPoly(reflection) * c[n];
  }
  for (std::size_t n = 0; n < c.size(); ++n) d[n + 1] -= c[n];
  for (auto& v : d) v = kMinusI * v;
  return GaussPoly(std::move(d));
}

GaussPoly apply_H(const GaussPoly& psi, const BigRational& kappa) {
  const GaussPoly sum = apply_Q(apply_Q(psi)) + apply_P(apply_P(psi, kappa), kappa);
  return ComplexMuPoly(MuPolynomial(BigRational(1, 2))) * sum;
}

GaussPoly ccr_residual(const GaussPoly& psi, const BigRational& kappa) {
  const GaussPoly commutator = apply_P(apply_Q(psi), kappa) - apply_Q(apply_P(psi, kappa));
  const ComplexMuPoly two_mu(MuPolynomial::mu() * BigRational(2));
  return kI * commutator - psi - two_mu * apply_J(psi);
}

std::optional<ComplexRational> fit_constant(const GaussPoly& lhs, const GaussPoly& rhs) {
  // locate the first nonzero rational entry of rhs, read off c, then confirm globally
  for (int n = 0; n <= rhs.degree(); ++n) {
    const ComplexMuPoly b = rhs.coefficient(n);
    const ComplexMuPoly a = lhs.coefficient(n);
    const int top = std::max(b.re.degree(), b.im.degree());
    for (int d = 0; d <= top; ++d) {
      const BigRational br = b.re.coefficient(d);
      const BigRational bi = b.im.coefficient(d);
      if (br == 0 && bi == 0) continue;
      const BigRational ar = a.re.coefficient(d);
      const BigRational ai = a.im.coefficient(d);
      const BigRational norm = br * br + bi * bi;
      const ComplexRational c{(ar * br + ai * bi) / norm, (ai * br - ar * bi) / norm};
      if (lhs - ComplexMuPoly(c) * rhs == GaussPoly()) return c;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

EomResult eom_residuals(const GaussPoly& psi, const ComplexRational& c1, const ComplexRational& c2,
                        const BigRational& kappa) {
  const auto P = [&](const GaussPoly& f) { return apply_P(f, kappa); };
  const auto H = [&](const GaussPoly& f) { return apply_H(f, kappa); };
  const GaussPoly hq = H(apply_Q(psi)) - apply_Q(H(psi));
  const GaussPoly hp = H(P(psi)) - P(H(psi));
  const GaussPoly p_psi = P(psi);
  const GaussPoly q_psi = apply_Q(psi);
  EomResult r;
  r.hq_residual = hq - ComplexMuPoly(c1) * p_psi;
  r.hp_residual = hp - ComplexMuPoly(c2) * q_psi;
  r.fitted_c1 = fit_constant(hq, p_psi);
  r.fitted_c2 = fit_constant(hp, q_psi);
  return r;
}

}  // namespace mudef::dunkl
