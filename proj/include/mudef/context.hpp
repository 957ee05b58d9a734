#pragma once

namespace mudef {

/// Smallest admissible distance of mu above -1/2.
inline constexpr double kMuGuard = 1e-6;

/// Deformation parameter mu together with the normalization of dm_mu,
/// dm_mu(x) = norm_const * |x|^(2 mu) dx with norm_const = [2^(mu+1/2) Gamma(mu+1/2)]^-1.
class MuContext {
 public:
  /// Throws DomainError unless mu > -1/2 + kMuGuard.
  explicit MuContext(double mu);

  double mu() const noexcept { return mu_; }
  double norm_const() const noexcept { return norm_const_; }

 private:
  double mu_;
  double norm_const_;
};

}  // namespace mudef
