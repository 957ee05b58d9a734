#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mudef/deformed.hpp"
#include "mudef/errors.hpp"
#include "mudef/exact/identities.hpp"

using namespace mudef;
using namespace mudef::exact;

namespace {

const MuPolynomial kMu = MuPolynomial::mu();

MuRationalFunction ratio(const MuPolynomial& n, const MuPolynomial& d) { return {n, d}; }

}  // namespace

TEST_CASE("MuPolynomial arithmetic") {
  const MuPolynomial p({1, 2});      // 1 + 2 mu
  const MuPolynomial q({3, 2});      // 3 + 2 mu
  const MuPolynomial pq = p * q;     // 3 + 8 mu + 4 mu^2
  CHECK(pq == MuPolynomial({3, 8, 4}));
  CHECK(pq.degree() == 2);
  CHECK((pq - pq).is_zero());
  CHECK((pq - pq).degree() == -1);
  auto [quot, rem] = pq.divmod(p);
  CHECK(quot == q);
  CHECK(rem.is_zero());
  CHECK(gcd(pq, p * MuPolynomial({5, 1})) == p.monic());
  CHECK(pq.evaluate(BigRational(1, 2)) == BigRational(8));
  CHECK(pq.to_string() == "4*mu^2 + 8*mu + 3");
  CHECK_THROWS_AS(pq.divmod(MuPolynomial()), std::domain_error);
}

TEST_CASE("MuRationalFunction normalization") {
  const MuPolynomial p({1, 2});
  const MuRationalFunction f(MuPolynomial({0, 8}) * p, p * p);  // 8mu / (1 + 2mu)
  CHECK(f.den() == MuPolynomial({BigRational(1, 2), 1}));        // monic
  CHECK(f.num() == MuPolynomial({0, 4}));
  CHECK(f == ratio(MuPolynomial({0, 16}), MuPolynomial({2, 4})));
  CHECK((f - f).is_zero());
  CHECK((f - f).den() == MuPolynomial(1));
  CHECK_THROWS_AS(MuRationalFunction(p, MuPolynomial()), std::domain_error);
}

TEST_CASE("gamma_mu_exact") {
  CHECK(gamma_mu_exact(0) == MuPolynomial(1));
  CHECK(gamma_mu_exact(1) == MuPolynomial({1, 2}));
  // 8 (1 + 2mu)(3 + 2mu) = 24 + 64 mu + 32 mu^2
  CHECK(gamma_mu_exact(4) == MuPolynomial({24, 64, 32}));
  for (int n = 0; n <= 30; ++n) CHECK(gamma_mu_exact(n).degree() == (n + 1) / 2);
  CHECK(eval_rational(gamma_mu_exact(3), 0) == 6);
}

TEST_CASE("p_at_exact small cases") {
  CHECK(p_at_exact(0) == MuRationalFunction(1));
  CHECK(p_at_exact(2) == ratio(4 * kMu, MuPolynomial({1, 2})));
  CHECK(p_at_exact(4) == ratio(8 * kMu, MuPolynomial({1, 2})));
  CHECK(eval_rational(p_at_exact(2), 1) == BigRational(4, 3));
  for (int k = 1; k <= 41; k += 2) CHECK(p_at_exact(k).is_zero());
}

TEST_CASE("eval_rational detects poles") {
  const MuRationalFunction f = p_at_exact(2);  // pole at mu = -1/2
  CHECK_THROWS_AS(eval_rational(f, BigRational(-1, 2)), EvaluationError);
}

TEST_CASE("classical alternating sums vanish at mu = 0") {
  CHECK(eval_rational(p_at_exact(0), 0) == 1);
  for (int k = 2; k <= 40; k += 2) CHECK(eval_rational(p_at_exact(k), 0) == 0);
}

TEST_CASE("floating deformed_binomial matches exact values (property)") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    // random rational mu in (-1/2, 5]
    const long den = 1 + static_cast<long>(rng() % 97);
    const long lo = -den / 2 + 1;
    const long num = lo + static_cast<long>(rng() % static_cast<unsigned long>(5 * den - lo + 1));
    const BigRational mu = make_rational(num, den);
    const MuContext ctx(mu.get_d());
    const int k = static_cast<int>(rng() % 31);
    const int j = static_cast<int>(rng() % (k + 1));
    const double exact = eval_rational(binomial_exact(k, j), mu).get_d();
    const double approx = deformed_binomial(k, j, ctx);
    CHECK(std::abs(approx - exact) <= 1e-11 * std::abs(exact));
  }
}

TEST_CASE("closed forms at n = 1 match the hand expansions") {
  CHECK(cross_multiplied_equal(closed_form_4n_minus_2(1), ratio(4 * kMu, MuPolynomial({1, 2}))));
  CHECK(cross_multiplied_equal(closed_form_4n(1), ratio(8 * kMu, MuPolynomial({1, 2}))));
  CHECK(cross_multiplied_equal(closed_form_2n_sum(1), p_at_exact(2)));
  // index 2 is covered by two families; the formulas must agree with each other
  CHECK(cross_multiplied_equal(closed_form_4n_minus_2(1), closed_form_2n_sum(1)));
  CHECK(cross_multiplied_equal(closed_form_2n_sum(1), closed_form_4n_minus_2(1)));
}

TEST_CASE("cross multiplication and sampling disagree with a wrong formula") {
  const MuRationalFunction wrong = ratio(6 * kMu, MuPolynomial({1, 2}));
  CHECK_FALSE(cross_multiplied_equal(p_at_exact(2), wrong));
  CHECK_FALSE(sampled_equal(p_at_exact(2), wrong));
  CHECK(sampled_equal(p_at_exact(4), closed_form_4n(1)));
}

TEST_CASE("verify_odd_vanishing") {
  const IdentityReport r5 = verify_odd_vanishing(5);
  CHECK(r5.checks.size() == 3);
  CHECK(r5.all_passed());
  const IdentityReport r41 = verify_odd_vanishing(41);
  CHECK(r41.checks.size() == 21);
  CHECK(r41.all_passed());
  CHECK_THROWS_AS(verify_odd_vanishing(0), std::invalid_argument);
}

TEST_CASE("verify_closed_forms for small n, with json") {
  const IdentityReport r = verify_closed_forms(4);
  CHECK(r.all_passed());
  int cross = 0;
  for (const auto& c : r.checks) {
    if (c.family.rfind("cross_family", 0) == 0) ++cross;
  }
  CHECK(cross > 0);
  const nlohmann::json j = to_json(r);
  CHECK(j["schema_version"] == 1);
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"][0]["family"] == "p_4n_minus_2");
  CHECK(j["checks"][0]["direct"]["num"] == nlohmann::json::array({"0", "2"}));
  CHECK(j["checks"][0]["direct"]["den"] == nlohmann::json::array({"1/2", "1"}));
}
