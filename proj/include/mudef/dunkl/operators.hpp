#pragma once

#include <optional>

#include "mudef/dunkl/gauss_poly.hpp"

namespace mudef::dunkl {

/// (Q psi)(x) = x psi(x)
GaussPoly apply_Q(const GaussPoly& psi);
/// (J psi)(x) = psi(-x)
GaussPoly apply_J(const GaussPoly& psi);
/// (P psi)(x) = -i (psi'(x) + kappa mu (psi(x) - psi(-x)) / x).
/// kappa = 1 is the value for which i[P, Q] = I + 2 mu J holds.
GaussPoly apply_P(const GaussPoly& psi, const BigRational& kappa = 1);
/// H psi = (Q^2 psi + P^2 psi) / 2
GaussPoly apply_H(const GaussPoly& psi, const BigRational& kappa = 1);

/// i (P Q - Q P) psi - psi - 2 mu J psi; identically zero for kappa = 1.
GaussPoly ccr_residual(const GaussPoly& psi, const BigRational& kappa = 1);

/// The constant c with lhs = c * rhs, if one exists. When rhs is zero the
/// constant is undetermined and nullopt is returned.
std::optional<ComplexRational> fit_constant(const GaussPoly& lhs, const GaussPoly& rhs);

struct EomResult {
  GaussPoly hq_residual;  ///< [H,Q] psi - c1 P psi
  GaussPoly hp_residual;  ///< [H,P] psi - c2 Q psi
  std::optional<ComplexRational> fitted_c1;
  std::optional<ComplexRational> fitted_c2;
};

/// Equations-of-motion residuals with configurable constants; the CCR implies
/// [H,Q] = -i P and [H,P] = i Q, which are the defaults.
EomResult eom_residuals(const GaussPoly& psi, const ComplexRational& c1 = {0, -1},
                        const ComplexRational& c2 = {0, 1}, const BigRational& kappa = 1);

}  // namespace mudef::dunkl
