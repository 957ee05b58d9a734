#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "mudef/dunkl/fourier.hpp"
#include "mudef/dunkl/operators.hpp"
#include "mudef/dunkl/parser.hpp"
#include "mudef/errors.hpp"

using namespace mudef;
using namespace mudef::dunkl;

namespace {

const MuPolynomial kMu = MuPolynomial::mu();

ComplexMuPoly real(const MuPolynomial& p) { return ComplexMuPoly(p); }
ComplexMuPoly imag(const MuPolynomial& p) { return ComplexMuPoly(MuPolynomial(), p); }

// Plain -i d/dx on p(x) e^(-x^2/2), coefficients already specialized.
GaussPoly minus_i_derivative(const GaussPoly& psi) {
  std::vector<ComplexMuPoly> d(psi.coefficients().size() + 1);
  for (int n = 0; n <= psi.degree(); ++n) {
    if (n > 0) d[n - 1] += real(MuPolynomial(static_cast<long>(n))) * psi.coefficient(n);
    d[n + 1] -= psi.coefficient(n);
  }
  return imag(MuPolynomial(-1)) * GaussPoly(d);
}

GaussPoly random_psi(std::mt19937_64& rng, int max_degree) {
  std::vector<ComplexMuPoly> c(max_degree + 1);
  for (auto& v : c) {
    const long a = static_cast<long>(rng() % 7) - 3;
    const long b = static_cast<long>(rng() % 7) - 3;
    const long m = static_cast<long>(rng() % 3) - 1;
    v = ComplexMuPoly(MuPolynomial({BigRational(a), BigRational(m)}), MuPolynomial(exact::make_rational(b, 2)));
  }
  return GaussPoly(c);
}

}  // namespace

TEST_CASE("Q and J on basis elements") {
  const GaussPoly g = GaussPoly::gaussian();
  CHECK(apply_Q(g) == GaussPoly::basis(1));
  CHECK(apply_Q(apply_Q(g)) == GaussPoly::basis(2));
  CHECK(apply_J(GaussPoly::basis(1)) == real(MuPolynomial(-1)) * GaussPoly::basis(1));
  CHECK(apply_J(GaussPoly::basis(4)) == GaussPoly::basis(4));
  for (int n = 0; n <= 12; ++n) {
    const GaussPoly b = GaussPoly::basis(n);
    CHECK(apply_Q(b).degree() == n + 1);
    CHECK(apply_J(apply_J(b)) == b);
  }
}

TEST_CASE("P on the Gaussian and degree growth") {
  const GaussPoly g = GaussPoly::gaussian();
  CHECK(apply_P(g) == imag(MuPolynomial(1)) * GaussPoly::basis(1));  // i x e^(-x^2/2)
  for (int n = 0; n <= 12; ++n) {
    const GaussPoly b = GaussPoly::basis(n);
    CHECK(apply_P(b).degree() == n + 1);
    CHECK(apply_H(b).degree() == n);  // the x^(n+2) terms of Q^2 and P^2 cancel
  }
}

TEST_CASE("P at mu = 0 is -i d/dx") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 12; ++n) {
    CHECK(apply_P(GaussPoly::basis(n)).specialize(0) == minus_i_derivative(GaussPoly::basis(n)));
  }
  for (int t = 0; t < 10; ++t) {
    const GaussPoly psi = random_psi(rng, 6).specialize(0);
    CHECK(apply_P(psi, 2).specialize(0) == minus_i_derivative(psi));
  }
}

TEST_CASE("exact CCR for kappa = 1") {
  for (int n = 0; n <= 10; ++n) CHECK(ccr_residual(GaussPoly::basis(n)).is_zero());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) CHECK(ccr_residual(random_psi(rng, 7)).is_zero());
}

TEST_CASE("kappa = 2 leaves the residual 2 mu J psi on every basis element") {
  const ComplexMuPoly two_mu = real(kMu * BigRational(2));
  for (int n = 0; n <= 10; ++n) {
    const GaussPoly b = GaussPoly::basis(n);
    const GaussPoly r = ccr_residual(b, 2);
    CHECK_FALSE(r.is_zero());
    CHECK(r == two_mu * apply_J(b));
    CHECK(r.specialize(0).is_zero());  // no deformation, no residual
  }
  // general kappa: residual 2 mu (kappa - 1) J psi
  const BigRational kappa(7, 3);
  const GaussPoly b = GaussPoly::basis(3);
  CHECK(ccr_residual(b, kappa) == real(kMu * BigRational(2 * (kappa - 1))) * apply_J(b));
}

TEST_CASE("Hamiltonian ground state and linearity") {
  const GaussPoly g = GaussPoly::gaussian();
  CHECK(apply_H(g) == real(MuPolynomial({BigRational(1, 2), BigRational(1)})) * g);
  CHECK(apply_H(g).specialize(0) == real(MuPolynomial(BigRational(1, 2))) * g);
  std::mt19937_64 rng(13);
  const ComplexMuPoly a(MuPolynomial({BigRational(2), BigRational(1, 3)}), MuPolynomial(BigRational(-1)));
  const ComplexMuPoly b(MuPolynomial(BigRational(5, 7)), MuPolynomial(kMu));
  for (int t = 0; t < 5; ++t) {
    const GaussPoly psi = random_psi(rng, 5);
    const GaussPoly phi = random_psi(rng, 4);
    CHECK(apply_H(a * psi + b * phi) == a * apply_H(psi) + b * apply_H(phi));
  }
}

TEST_CASE("parity relations") {
  std::mt19937_64 rng(17);
  for (int n = 0; n <= 12; ++n) {
    const GaussPoly b = GaussPoly::basis(n);
    const ComplexMuPoly minus_one = real(MuPolynomial(-1));
    CHECK(apply_J(apply_Q(b)) == minus_one * apply_Q(apply_J(b)));
    CHECK(apply_J(apply_P(b)) == minus_one * apply_P(apply_J(b)));
    CHECK(apply_J(apply_H(b)) == apply_H(apply_J(b)));
  }
  const GaussPoly psi = random_psi(rng, 6);
  CHECK(apply_J(apply_P(psi)) == real(MuPolynomial(-1)) * apply_P(apply_J(psi)));
}

TEST_CASE("equations of motion fit -i and i") {
  const GaussPoly x_gauss = GaussPoly::basis(1);
  const EomResult at_half = eom_residuals(x_gauss.specialize(BigRational(1, 2)));
  REQUIRE(at_half.fitted_c1.has_value());
  CHECK(*at_half.fitted_c1 == ComplexRational{0, -1});
  for (int n = 0; n <= 8; ++n) {
    const EomResult r = eom_residuals(GaussPoly::basis(n));
    CHECK(r.hq_residual.is_zero());
    CHECK(r.hp_residual.is_zero());
    REQUIRE(r.fitted_c1.has_value());
    REQUIRE(r.fitted_c2.has_value());
    CHECK(*r.fitted_c1 == ComplexRational{0, -1});
    CHECK(*r.fitted_c2 == ComplexRational{0, 1});
  }
  // the printed constants 1 and -1 leave residuals
  const EomResult printed = eom_residuals(GaussPoly::basis(2), {1, 0}, {-1, 0});
  CHECK_FALSE(printed.hq_residual.is_zero());
  CHECK_FALSE(printed.hp_residual.is_zero());
  // classical oscillator at mu = 0
  const EomResult classical = eom_residuals(GaussPoly::gaussian().specialize(0));
  CHECK(classical.hq_residual.is_zero());
  CHECK(fit_constant(GaussPoly::basis(1), GaussPoly()) == std::nullopt);
  CHECK(fit_constant(GaussPoly::basis(1), GaussPoly::basis(2)) == std::nullopt);
}

TEST_CASE("literal parser") {
  const GaussPoly p = parse_gauss_poly("(1 + 2x^3) * gauss");
  CHECK(p.degree() == 3);
  CHECK(p.coefficient(0) == real(MuPolynomial(1)));
  CHECK(p.coefficient(3) == real(MuPolynomial(2)));
  CHECK(parse_gauss_poly("(0.5-2i) x gauss").coefficient(1) ==
        ComplexMuPoly(MuPolynomial(BigRational(1, 2)), MuPolynomial(-2)));
  CHECK(parse_gauss_poly("mu*x*gauss") == real(kMu) * GaussPoly::basis(1));
  CHECK(parse_gauss_poly("gauss") == GaussPoly::gaussian());
  CHECK(parse_gauss_poly("x^2 - x^2") == GaussPoly());
  CHECK(parse_gauss_poly("3x/4") == real(MuPolynomial(BigRational(3, 4))) * GaussPoly::basis(1));
  CHECK(parse_gauss_poly("-(1+i)") == ComplexMuPoly(MuPolynomial(-1), MuPolynomial(-1)) * GaussPoly::gaussian());
  CHECK(parse_rational("3/2") == BigRational(3, 2));
  CHECK(parse_rational("-0.25") == BigRational(-1, 4));
  CHECK(parse_rational("2") == 2);
  CHECK_THROWS_AS(parse_rational("i"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gauss_poly("(1 + x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gauss_poly("y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gauss_poly("x/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gauss_poly(""), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    const GaussPoly psi = random_psi(rng, 4).specialize(BigRational(1, 3));
    // the printed form uses "*" and "^" only, so it parses back
    std::string text = psi.to_string();
    CHECK(parse_gauss_poly(text) == psi);
  }
  CHECK(p.to_json()["terms"].size() == 2);
}

TEST_CASE("numeric evaluation") {
  const GaussPoly p = parse_gauss_poly("(1 + mu x^2) gauss");
  CHECK(std::abs(p.evaluate(2.0, 0.5) - std::complex<double>(3.0 * std::exp(-2.0), 0)) < 1e-15);
}

TEST_CASE("Fourier transform of the Gaussian is the Gaussian") {
  const std::vector<double> ks = {-3.0, -1.2, 0.0, 0.7, 2.5};
  for (double mu : {0.0, 0.5, 1.0, -0.3}) {
    const MuContext ctx(mu);
    const auto fg = fourier_mu_numeric(GaussPoly::gaussian(), ks, ctx);
    const auto fx = fourier_mu_numeric(GaussPoly::basis(1), ks, ctx);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double k = ks[i];
      CHECK(std::abs(fg[i].value - std::exp(-k * k / 2)) < 1e-9);
      CHECK(std::abs(fx[i].value - std::complex<double>(0, -k * std::exp(-k * k / 2))) < 1e-9);
      CHECK(fg[i].error < 1e-9);
    }
  }
}

TEST_CASE("Fourier transform is linear") {
  const MuContext ctx(0.75);
  const std::vector<double> ks = {-2.0, 0.3, 1.7};
  const GaussPoly psi = parse_gauss_poly("(1 - x + 0.5x^3) gauss").specialize(BigRational(3, 4));
  const GaussPoly phi = parse_gauss_poly("(2i x^2 + x^4) gauss");
  const ComplexMuPoly a(MuPolynomial(2), MuPolynomial(1));
  const auto lhs = fourier_mu_numeric(a * psi + phi, ks, ctx);
  const auto fp = fourier_mu_numeric(psi, ks, ctx);
  const auto ff = fourier_mu_numeric(phi, ks, ctx);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const std::complex<double> rhs = std::complex<double>(2, 1) * fp[i].value + ff[i].value;
    CHECK(std::abs(lhs[i].value - rhs) <= lhs[i].error + std::sqrt(5.0) * fp[i].error + ff[i].error + 1e-14);
  }
}

TEST_CASE("Plancherel spot check at mu = 0.5") {
  const MuContext ctx(0.5);
  const GaussPoly psi = parse_gauss_poly("(1 + x - 0.5x^2) gauss");
  const trace::PanelRules rules(12, ctx.mu());
  trace::QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  const double r = truncation_radius(psi, ctx, 1e-15);
  const auto norm2 = [&](const std::function<std::complex<double>(double)>& f) {
    return ctx.norm_const() *
           trace::integrate_weighted([&](double x) { return trace::Sample{std::norm(f(x)), 0.0}; },
                                     {{-r, 0.0}, {0.0, r}}, rules, spec)
               .value.real();
  };
  const double lhs = norm2([&](double k) { return fourier_mu_numeric(psi, {k}, ctx)[0].value; });
  const double rhs = norm2([&](double x) { return psi.evaluate(x, ctx.mu()); });
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
}

TEST_CASE("intertwining F(P psi) = k F(psi)") {
  std::vector<double> ks;
  for (int i = 0; i < 25; ++i) ks.push_back(-3.0 + 0.25 * i);
  for (double mu : {0.0, 0.5, 1.0}) {
    const MuContext ctx(mu);
    for (const GaussPoly& psi : {GaussPoly::gaussian(), GaussPoly::basis(1)}) {
      const IntertwiningReport rep = intertwining_check(psi, ks, ctx);
      CHECK(rep.max_discrepancy < 1e-8);
      CHECK(rep.discrepancy.size() == ks.size());
      CHECK(rep.max_discrepancy <= rep.max_quadrature_error + 1e-14);
    }
  }
  const IntertwiningReport odd = intertwining_check(parse_gauss_poly("(x + mu x^3) gauss"), {-1.0, 2.0}, MuContext(0.5));
  CHECK(odd.max_discrepancy < 1e-8);
}

TEST_CASE("looser quadrature tolerance gives a larger error model") {
  const MuContext ctx(0.5);
  const GaussPoly psi = parse_gauss_poly("(1 + x^5) gauss");
  trace::QuadratureSpec loose;
  loose.nodes_per_panel = 4;
  loose.rel_tol = 1e-4;
  loose.abs_tol = 1e-6;
  trace::QuadratureSpec tight;
  const auto a = intertwining_check(psi, {0.5, 1.5}, ctx, loose);
  const auto b = intertwining_check(psi, {0.5, 1.5}, ctx, tight);
  CHECK(b.max_discrepancy < 1e-8);
  CHECK(a.max_quadrature_error > b.max_quadrature_error);
  CHECK(a.max_discrepancy <= a.max_quadrature_error);
}
