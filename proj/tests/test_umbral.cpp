#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "peo/errors.hpp"
#include "peo/special_functions.hpp"
#include "peo/umbral.hpp"

using namespace peo;
using doctest::Approx;

TEST_CASE("fio_eval on single monomials") {
  VarAllocator va;
  const Var v = va.fresh_v(), u = va.fresh_u();
  for (int n = 0; n < 8; ++n) {
    UmbralTerm t;
    t.times(v, double(n + 1));
    CHECK(fio_eval(t).real() == Approx(1.0 / factorial(n)).epsilon(1e-15));
  }
  UmbralTerm id;
  id.times(u, 2.7).times(v, 2.7);
  CHECK(fio_eval(id).real() == Approx(1.0).epsilon(1e-14));

  VarAllocator vb;
  const Var u2 = vb.fresh_u(), v2 = vb.fresh_v();
  UmbralTerm poch;
  poch.times(u2, 4.5).times(v2, 1.5);
  CHECK(fio_eval(poch).real() == Approx(1.5 * 2.5 * 3.5).epsilon(1e-14));

  UmbralTerm pole;
  CHECK_THROWS_AS(pole.times(u, -2.0), DomainError);
  UmbralTerm zero;
  zero.times(v, -1.0);
  CHECK(fio_eval(zero) == cplx(0.0));
}

TEST_CASE("factorization on disjoint supports and reshaping invariance") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> e(0.2, 4.0), c(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    VarAllocator va;
    UmbralTerm a(cplx(c(rng), c(rng))), b(cplx(c(rng)));
    a.times(va.fresh_u(), e(rng)).times(va.fresh_v(), e(rng));
    b.times(va.fresh_v(), e(rng)).times(va.fresh_u(), e(rng)).times(va.fresh_v(), e(rng));
    REQUIRE(a.disjoint_from(b));
    const cplx lhs = fio_eval(a * b), rhs = fio_eval(a) * fio_eval(b);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));

    const double alpha = e(rng);
    UmbralTerm reshaped = a;
    reshaped.times(va.fresh_u(), alpha).times(va.fresh_v(), alpha);
    CHECK(std::abs(fio_eval(reshaped) - fio_eval(a)) <= 1e-13 * std::abs(fio_eval(a)));
  }
}

TEST_CASE("umbral images of the special functions") {
  for (cplx x : {cplx(1.0), cplx(-2.5), cplx(0.3, 1.1)})
    CHECK(std::abs(fio_eval_series(laguerre_exp_umbral(x, 60)) - laguerre_exp(x).value) <= 1e-13 * std::abs(laguerre_exp(x).value));
  CHECK(fio_eval_series(laguerre_e_nm_umbral(1, 2, 0.7, 60)).real() == Approx(oracle::kLe12of07).epsilon(1e-14));
  CHECK(fio_eval_series(mittag_leffler_umbral(0.5, 1, 0.3, 100)).real() == Approx(oracle::kE05of03).epsilon(1e-14));
  CHECK(fio_eval_series(mittag_leffler_umbral(0.8, 1.2, 1.5, 150)).real() == Approx(oracle::kE08_12of15).epsilon(1e-13));
  CHECK(fio_eval_series(hypergeometric_umbral({1.0, 1.0}, {2.0}, 0.5, 200)).real() == Approx(oracle::kTwoLn2).epsilon(1e-13));
  CHECK(fio_eval_series(hypergeometric_umbral({}, {1.0}, -2.5, 60)).real() == Approx(oracle::kLeMinus25).epsilon(1e-13));
}

TEST_CASE("Laplace forms of the Mittag-Leffler function") {
  const double a = 0.6, b = 1.1, x = 0.9;
  const cplx sdep = fio_eval_series(mittag_leffler_laplace_umbral(a, b, x, 150, LaplaceForm::SDependent));
  CHECK(std::abs(sdep - mittag_leffler(a, b, x).value) <= 1e-13 * std::abs(sdep));
  // the verbatim reading sums x^r / (r! Gamma(a r + b)) instead
  const cplx verb = fio_eval_series(mittag_leffler_laplace_umbral(a, b, x, 150, LaplaceForm::Verbatim));
  double want = 0, f = 1;
  for (int r = 0; r < 60; ++r) {
    if (r) f *= r;
    want += std::pow(x, r) / (f * std::tgamma(a * r + b));
  }
  CHECK(verb.real() == Approx(want).epsilon(1e-13));
  CHECK(std::abs(verb - sdep) > 0.1);
}

TEST_CASE("summability test") {
  // finite family: exact
  const auto few = fio_eval_series_report(laguerre_exp_umbral(0.5, 5));
  CHECK(few.finite);
  CHECK(few.summable);
  // converging family with a small tail
  const auto ok = fio_eval_series_report(laguerre_exp_umbral(2.0, 40));
  CHECK(ok.summable);
  CHECK(ok.tail_bound < 1e-13);
  // too few terms of a slowly converging family
  CHECK_THROWS_AS(fio_eval_series(laguerre_exp_umbral(30.0, 12)), NonConvergenceError);
  // divergent: sum x^r r! = I(u^{r+1}) x^r
  UmbralSum div;
  VarAllocator va;
  const Var u = va.fresh_u();
  for (int r = 0; r < 30; ++r) {
    UmbralTerm t(std::pow(0.5, r));
    t.times(u, r + 1.0);
    div.terms.push_back(t);
  }
  CHECK_FALSE(fio_eval_series_report(div).summable);
  CHECK_THROWS_AS(fio_eval_series(div), NonConvergenceError);
}

TEST_CASE("Laguerre Newton binomial") {
  const cplx x(0.7, 0.2), y(-0.3, 0.5);
  CHECK(std::abs(laguerre_binomial_pow(1, x, y) - (x + y)) < 1e-15);
  CHECK(std::abs(laguerre_binomial_pow(2, x, y) - (x * x + 4.0 * x * y + y * y)) < 1e-15);
  for (int n = 0; n <= 6; ++n)
    CHECK(std::abs(laguerre_binomial_umbral(n, x, y) - laguerre_binomial_pow(n, x, y)) <= 1e-13 * std::max(1.0, std::abs(laguerre_binomial_pow(n, x, y))));
}

TEST_CASE("Laguerre semigroup") {
  CHECK(laguerre_semigroup_check(0.0, 0.0, 10).residual == 0.0);
  const auto r = laguerre_semigroup_check(0.7, -0.3, 40);
  CHECK(r.pass);
  CHECK(r.residual <= 1e-13);
  const auto lhs = laguerre_product_coefficients(10), rhs = laguerre_binomial_series_coefficients(10);
  CHECK(lhs == rhs);
  for (int n = 0; n <= 10; ++n)
    for (int r = 0; r <= n; ++r) {
      const Rational want = Rational(1) / Rational(big_factorial(r) * big_factorial(r) * big_factorial(n - r) * big_factorial(n - r));
      CHECK(rhs.at({r, n - r}) == want);
    }
}

TEST_CASE("Mittag-Leffler binomial as printed") {
  const cplx x(0.4, -0.1), y(0.9, 0.3);
  CHECK(std::abs(ml_binomial_pow(0.7, 1.3, 0, x, y) - 1.0 / std::tgamma(1.3)) < 1e-14);
  CHECK(std::abs(ml_binomial_pow(1, 1, 1, x, y) - (x + y)) < 1e-14);
  CHECK(std::abs(ml_binomial_pow(1, 1, 2, x, y) - (x * x + 4.0 * x * y + y * y)) < 1e-14);
  for (int n = 0; n <= 6; ++n)
    CHECK(std::abs(ml_binomial_pow(0.6, 1.4, n, x, 0.0) - std::pow(x, n) / std::tgamma(1.4)) < 1e-13);
  CHECK_THROWS_AS(ml_binomial_pow(1, -1, 1, x, y), PoleError);
}

TEST_CASE("ML law discrepancy matches a brute-force expansion") {
  const double a = 0.5, b = 1.0;
  for (const auto& e : ml_semigroup_comparison(a, b, 8)) {
    // brute force: E(x) E(y) coefficient, and [x^r y^k] of sum_n (x (+) y)^n / Gamma(a n + b)
    const double product = 1 / (std::tgamma(a * e.r + b) * std::tgamma(a * e.k + b));
    const int n = e.r + e.k;
    double binom = 1;
    for (int i = 1; i <= e.r; ++i) binom = binom * (n - e.r + i) / i;
    const double law = binom * std::tgamma(n * a + b) / (std::tgamma(a * e.r + b) * std::tgamma(a * e.k + b)) /
                       std::tgamma(n * a + b);
    CHECK(e.product == Approx(product).epsilon(1e-13));
    CHECK(e.law == Approx(law).epsilon(1e-13));
    CHECK(e.ratio == Approx(law / product).epsilon(1e-13));
  }
  const auto num = ml_semigroup_numeric(0.5, 1.0, 0.3, 0.2, 60);
  CHECK(num.product.real() == Approx(oracle::kMlProduct).epsilon(1e-13));
  CHECK(num.law.real() == Approx(oracle::kMlLaw).epsilon(1e-13));
  // even at a = b = 1 the printed law keeps the extra C(n, r)
  for (const auto& e : ml_semigroup_comparison(1.0, 1.0, 4)) {
    double binom = 1;
    for (int i = 1; i <= e.r; ++i) binom = binom * (e.k + i) / i;
    CHECK(e.ratio == Approx(binom).epsilon(1e-13));
  }
}
