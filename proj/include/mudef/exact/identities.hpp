#pragma once

#include "json.hpp"
#include <string>
#include <vector>

#include "mudef/exact/rational_function.hpp"

namespace mudef::exact {

/// gamma_mu(n) as an exact polynomial in mu; degree ceil(n/2).
MuPolynomial gamma_mu_exact(int n);

/// binom_mu(k, j) = gamma_mu(k) / (gamma_mu(k-j) gamma_mu(j)). Requires 0 <= j <= k.
MuRationalFunction binomial_exact(int k, int j);

/// p_{k,mu}(-1, 1) = sum_j binom_mu(k, j) (-1)^j, reduced.
MuRationalFunction p_at_exact(int k);

/// Conjectured closed forms for p_{k,mu}(-1,1), n >= 1:
///   index 4n-2: mu 2^(2n-1) prod_{k=n+1}^{2n-1} (mu + k - 1) / prod_{k=1}^{n} (mu + k - 1/2)
///   index 4n:   mu 2^(2n)   prod_{k=n+1}^{2n-1} (mu + k)     / prod_{k=1}^{n} (mu + k - 1/2)
///   index 2n:   (2 mu / n) sum_{k=0}^{n-1} binom_mu(2n, 2k+1)
MuRationalFunction closed_form_4n_minus_2(int n);
MuRationalFunction closed_form_4n(int n);
MuRationalFunction closed_form_2n_sum(int n);

/// Equality at deg + 1 distinct positive rational points, where deg bounds the
/// degree of the cross-multiplied difference. Independent of the coefficient-wise test.
bool sampled_equal(const MuRationalFunction& a, const MuRationalFunction& b);

struct IdentityCheck {
  std::string family;  ///< odd_vanishing | p_4n_minus_2 | p_4n | p_2n_sum | cross_family
  int n = 0;           ///< family parameter (k itself for odd_vanishing)
  int index = 0;       ///< k in p_{k,mu}(-1,1)
  bool passed = false;          ///< exact cross-multiplication test
  bool sampled_passed = false;  ///< secondary point-sampling test
  MuRationalFunction direct;    ///< left-hand side
  MuRationalFunction formula;   ///< right-hand side
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
  void append(const IdentityReport& other);
};

/// p_at_exact(k) is the zero function for every odd k <= k_max.
IdentityReport verify_odd_vanishing(int k_max);

/// Each closed form compared with direct expansion for n = 1..n_max, plus
/// agreement between families wherever two of them name the same index.
/// Every entry holds for its own n only; nothing is claimed for general n.
IdentityReport verify_closed_forms(int n_max = 12);

nlohmann::json to_json(const IdentityCheck& check);
nlohmann::json to_json(const IdentityReport& report);

}  // namespace mudef::exact
