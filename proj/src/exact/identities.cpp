#include "mudef/exact/identities.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mudef::exact {

namespace {

// mu + c
MuPolynomial shifted_mu(const BigRational& c) { return MuPolynomial({c, BigRational(1)}); }

BigRational power_of_two(int e) {
  mpz_class p = 1;
  p <<= e;
  return BigRational(p);
}

}  // namespace

MuPolynomial gamma_mu_exact(int n) {
  if (n < 0) throw std::invalid_argument("gamma_mu_exact: n must be non-negative");
  MuPolynomial g(1);
  for (int i = 1; i <= n; ++i) {
    // i + 2 mu for odd i, i otherwise
    g *= (i % 2 != 0) ? MuPolynomial({BigRational(i), BigRational(2)}) : MuPolynomial(BigRational(i));
  }
  return g;
}

MuRationalFunction binomial_exact(int k, int j) {
  if (j < 0 || j > k) throw std::invalid_argument("binomial_exact: need 0 <= j <= k");
  return MuRationalFunction(gamma_mu_exact(k), gamma_mu_exact(k - j) * gamma_mu_exact(j));
}

MuRationalFunction p_at_exact(int k) {
  if (k < 0) throw std::invalid_argument("p_at_exact: k must be non-negative");
  // Common denominator D = lcm of gamma(k-j) gamma(j) over j; the binomials share
  // their numerator gamma(k), so p = gamma(k) * (sum_j (-1)^j D / (gamma(k-j) gamma(j))) / D.
  std::vector<MuPolynomial> gammas;
  gammas.reserve(k + 1);
  for (int i = 0; i <= k; ++i) gammas.push_back(gamma_mu_exact(i));
  MuPolynomial common(1);
  for (int j = 0; j <= k; ++j) {
    const MuPolynomial d = gammas[k - j] * gammas[j];
    const MuPolynomial g = gcd(common, d);
    common *= d.divmod(g).first;
  }
  MuPolynomial numerator;
  for (int j = 0; j <= k; ++j) {
    auto [q, r] = common.divmod(gammas[k - j] * gammas[j]);
    if (!r.is_zero()) throw std::logic_error("p_at_exact: common denominator is not a multiple");
    if (j % 2 == 0) numerator += q; else numerator -= q;
  }
  return MuRationalFunction(numerator * gammas[k], common);
}

MuRationalFunction closed_form_4n_minus_2(int n) {
  if (n < 1) throw std::invalid_argument("closed form needs n >= 1");
  MuPolynomial num = MuPolynomial::mu() * power_of_two(2 * n - 1);
  for (int k = n + 1; k <= 2 * n - 1; ++k) num *= shifted_mu(k - 1);
  MuPolynomial den(1);
  for (int k = 1; k <= n; ++k) den *= shifted_mu(BigRational(2 * k - 1, 2));
  return MuRationalFunction(num, den);
}

MuRationalFunction closed_form_4n(int n) {
  if (n < 1) throw std::invalid_argument("closed form needs n >= 1");
  MuPolynomial num = MuPolynomial::mu() * power_of_two(2 * n);
  for (int k = n + 1; k <= 2 * n - 1; ++k) num *= shifted_mu(k);
  MuPolynomial den(1);
  for (int k = 1; k <= n; ++k) den *= shifted_mu(BigRational(2 * k - 1, 2));
  return MuRationalFunction(num, den);
}

MuRationalFunction closed_form_2n_sum(int n) {
  if (n < 1) throw std::invalid_argument("closed form needs n >= 1");
  MuRationalFunction sum;
  for (int k = 0; k <= n - 1; ++k) sum += binomial_exact(2 * n, 2 * k + 1);
  return sum * MuRationalFunction(MuPolynomial::mu() * make_rational(2, n));
}

bool sampled_equal(const MuRationalFunction& a, const MuRationalFunction& b) {
  const int degree = std::max(a.num().degree() + b.den().degree(), b.num().degree() + a.den().degree());
  const int needed = std::max(degree, 0) + 1;
  int matched = 0;
  for (int i = 1; matched < needed; ++i) {
    const BigRational mu = make_rational(i, 3);
    if (a.den().evaluate(mu) == 0 || b.den().evaluate(mu) == 0) continue;
    if (eval_rational(a, mu) != eval_rational(b, mu)) return false;
    ++matched;
  }
  return true;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed && c.sampled_passed; });
}

void IdentityReport::append(const IdentityReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

IdentityCheck make_check(std::string family, int n, int index, MuRationalFunction direct,
                         MuRationalFunction formula) {
  IdentityCheck c;
  c.family = std::move(family);
  c.n = n;
  c.index = index;
  c.passed = cross_multiplied_equal(direct, formula);
  c.sampled_passed = sampled_equal(direct, formula);
  c.direct = std::move(direct);
  c.formula = std::move(formula);
  return c;
}

}  // namespace

IdentityReport verify_odd_vanishing(int k_max) {
  if (k_max < 1) throw std::invalid_argument("verify_odd_vanishing: k_max must be >= 1");
  IdentityReport report;
  for (int k = 1; k <= k_max; k += 2) {
    report.checks.push_back(make_check("odd_vanishing", k, k, p_at_exact(k), MuRationalFunction()));
  }
  return report;
}

IdentityReport verify_closed_forms(int n_max) {
  if (n_max < 1) throw std::invalid_argument("verify_closed_forms: n_max must be >= 1");
  IdentityReport report;
  std::map<int, MuRationalFunction> direct_cache;
  const auto direct = [&](int k) -> const MuRationalFunction& {
    auto it = direct_cache.find(k);
    if (it == direct_cache.end()) it = direct_cache.emplace(k, p_at_exact(k)).first;
    return it->second;
  };
  // formulas keyed by index, for the cross-family agreement pass
  std::multimap<int, std::pair<std::string, MuRationalFunction>> by_index;

  for (int n = 1; n <= n_max; ++n) {
    MuRationalFunction f1 = closed_form_4n_minus_2(n);
    MuRationalFunction f2 = closed_form_4n(n);
    MuRationalFunction f3 = closed_form_2n_sum(n);
    report.checks.push_back(make_check("p_4n_minus_2", n, 4 * n - 2, direct(4 * n - 2), f1));
    report.checks.push_back(make_check("p_4n", n, 4 * n, direct(4 * n), f2));
    report.checks.push_back(make_check("p_2n_sum", n, 2 * n, direct(2 * n), f3));
    by_index.emplace(4 * n - 2, std::make_pair("p_4n_minus_2", std::move(f1)));
    by_index.emplace(4 * n, std::make_pair("p_4n", std::move(f2)));
    by_index.emplace(2 * n, std::make_pair("p_2n_sum", std::move(f3)));
  }
  for (auto it = by_index.begin(); it != by_index.end();) {
    const auto range = by_index.equal_range(it->first);
    for (auto a = range.first; a != range.second; ++a) {
      for (auto b = std::next(a); b != range.second; ++b) {
        IdentityCheck c = make_check("cross_family", 0, it->first, a->second.second, b->second.second);
        c.family = "cross_family:" + a->second.first + "=" + b->second.first;
        report.checks.push_back(std::move(c));
      }
    }
    it = range.second;
  }
  return report;
}

namespace {

nlohmann::json rational_json(const MuRationalFunction& f) {
  return {{"num", f.num().to_strings()}, {"den", f.den().to_strings()}, {"text", f.to_string()}};
}

}  // namespace

nlohmann::json to_json(const IdentityCheck& check) {
  return {{"family", check.family},
          {"n", check.n},
          {"index", check.index},
          {"pass", check.passed && check.sampled_passed},
          {"exact_pass", check.passed},
          {"sampled_pass", check.sampled_passed},
          {"direct", rational_json(check.direct)},
          {"formula", rational_json(check.formula)}};
}

nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return {{"schema_version", 1},
          {"scope", "each entry is an exact per-index verification; no claim for general n"},
          {"all_pass", report.all_passed()},
          {"checks", std::move(checks)}};
}

}  // namespace mudef::exact
