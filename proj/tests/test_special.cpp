#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "peo/errors.hpp"
#include "peo/rational.hpp"
#include "peo/special_functions.hpp"

using namespace peo;
using doctest::Approx;

TEST_CASE("laguerre_exp") {
  CHECK(laguerre_exp(0.0).value == cplx(1.0));
  CHECK(laguerre_exp(1.0).value.real() == Approx(oracle::kI0of2).epsilon(1e-15));
  CHECK(laguerre_exp(-2.5).value.real() == Approx(oracle::kLeMinus25).epsilon(1e-14));
  const cplx z = laguerre_exp(cplx(0.3, 1.1)).value;
  CHECK(z.real() == Approx(oracle::kLeComplexRe).epsilon(1e-15));
  CHECK(z.imag() == Approx(oracle::kLeComplexIm).epsilon(1e-15));
  for (int i = 0; i < 5; ++i) {
    const double t = oracle::kJ0Args[i];
    CHECK(std::abs(laguerre_exp(-t * t / 4).value.real() - oracle::kJ0[i]) <= 1e-12);
  }
  SeriesEvalConfig tight;
  tight.max_terms = 3;
  CHECK_THROWS_AS(laguerre_exp(10.0, tight), NonConvergenceError);
  tight.rel_tol = -1;
  CHECK_THROWS_AS(laguerre_exp(1.0, tight), DomainError);
}

TEST_CASE("conjugate symmetry") {
  const cplx x(-1.3, 2.2);
  CHECK(std::abs(laguerre_exp(std::conj(x)).value - std::conj(laguerre_exp(x).value)) < 1e-15);
  CHECK(std::abs(mittag_leffler(0.7, 1.3, std::conj(x)).value - std::conj(mittag_leffler(0.7, 1.3, x).value)) < 1e-14);
}

TEST_CASE("laguerre_e_nm") {
  for (double x : {-1.0, 0.4, 2.0}) CHECK(laguerre_e_nm(0, 1, x).value.real() == Approx(laguerre_exp(x).value.real()).epsilon(1e-15));
  CHECK(laguerre_e_nm(3, 2, 0.0).value.real() == Approx(1.0 / 6));
  CHECK(laguerre_e_nm(1, 2, 0.7).value.real() == Approx(oracle::kLe12of07).epsilon(1e-15));
  CHECK(laguerre_e_nm(2, 2, -0.5).value.real() == Approx(oracle::kLe22ofMinus05).epsilon(1e-15));
}

TEST_CASE("Laguerre cosine and sine") {
  CHECK(laguerre_cos(0) == 1.0);
  CHECK(laguerre_sin(0) == 0.0);
  for (int i = 0; i < 4; ++i) {
    const double x = oracle::kKelvinArgs[i];
    CHECK(std::abs(laguerre_cos(x) - oracle::kBer[i]) <= 1e-12 * std::max(1.0, std::abs(oracle::kBer[i])));
    CHECK(std::abs(laguerre_sin(x) - oracle::kBei[i]) <= 1e-12 * std::max(1.0, std::abs(oracle::kBei[i])));
  }
  CHECK(laguerre_cos(0.7) == Approx(oracle::kLc07).epsilon(1e-15));
  CHECK(laguerre_sin(3.0) == Approx(oracle::kLs3).epsilon(1e-15));
  // odd / even in x
  CHECK(laguerre_sin(-3.0) == Approx(-oracle::kLs3).epsilon(1e-15));
  CHECK(laguerre_cos(-3.0) == Approx(oracle::kLc3).epsilon(1e-15));
}

TEST_CASE("lc(omega t) satisfies l_d_t^2 s = -omega^2 s termwise") {
  const double w = 1.7;
  const int N = 24;
  const FracSeries s = laguerre_cos_series(w, N);
  const FracSeries lhs = laguerre_derivative(laguerre_derivative(s));
  CHECK(series_rel_error(lhs, cplx(-w * w) * s.with_truncation(N - 2)) <= 1e-14);
}

TEST_CASE("mittag_leffler") {
  CHECK(mittag_leffler(1, 1, 1.0).value.real() == Approx(std::exp(1.0)).epsilon(1e-13));
  CHECK(mittag_leffler(2, 1, -1.0).value.real() == Approx(std::cos(1.0)).epsilon(1e-13));
  CHECK(mittag_leffler(0.5, 1, 0.3).value.real() == Approx(oracle::kE05of03).epsilon(1e-14));
  CHECK(mittag_leffler(0.5, 1, -2.0).value.real() == Approx(oracle::kE05ofMinus2).epsilon(1e-12));
  CHECK(mittag_leffler(0.3, 1, -0.7).value.real() == Approx(oracle::kE03ofMinus07).epsilon(1e-13));
  CHECK(mittag_leffler(0.8, 1.2, 1.5).value.real() == Approx(oracle::kE08_12of15).epsilon(1e-14));
  // beta at a pole of 1/Gamma: the r = 0 term vanishes
  CHECK(mittag_leffler(1, 0, 0.5).value.real() == Approx(0.5 * std::exp(0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(mittag_leffler(0, 1, 0.5), DomainError);
}

TEST_CASE("entire functions terminate for |x| <= 50 with the default config") {
  for (double x : {-50.0, -17.0, 30.0, 50.0}) {
    CHECK_NOTHROW(laguerre_exp(x));
    CHECK_NOTHROW(laguerre_e_nm(2, 3, x));
    CHECK_NOTHROW(laguerre_cos(x));
    for (double a : {1.0, 1.5, 2.0}) CHECK_NOTHROW(mittag_leffler(a, 1, x));
  }
}

TEST_CASE("pseudo-eigenfunction property of the Mittag-Leffler series") {
  for (double mu : {0.3, 0.5, 0.8}) {
    const cplx m(0.7, -0.4);
    const FracSeries e = mittag_leffler_series(mu, 1, m, 11 * mu);
    const FracSeries res = rl_derivative(e, mu) - m * e - FracSeries::monomial(-mu, recip_gamma(1 - mu));
    CHECK(series_max_abs(res, 10 * mu) <= 1e-12);
  }
}

TEST_CASE("hermite3") {
  const cplx x(1.3, -0.2), y(0.4, 0.1);
  CHECK(hermite3(0, x, y) == cplx(1.0));
  CHECK(hermite3(1, x, y) == x);
  CHECK(std::abs(hermite3(2, x, y) - x * x) < 1e-15);
  CHECK(std::abs(hermite3(3, x, y) - (x * x * x + 6.0 * y)) < 1e-14);
  CHECK(hermite3(3, 1.0, 2.0).real() == 13.0);
  cplx s = 0;
  double fact = 1;
  for (int n = 0; n <= 40; ++n) {
    if (n) fact *= n;
    s += std::pow(0.3, n) / fact * hermite3(n, 1.1, -0.4);
  }
  CHECK(std::abs(s - oracle::kHermiteEgf) <= 1e-12);
}

TEST_CASE("hermite3 equals coefficient extraction of e^{tx + t^3 y}, exactly for n <= 15") {
  // Integer x, y keep the floating values exact, so an exact rational
  // expansion of the generating function can be compared bit for bit.
  const int x = 3, y = -2;
  for (int n = 0; n <= 15; ++n) {
    // n! [t^n] e^{tx} e^{t^3 y} = n! sum_r x^{n-3r}/(n-3r)! y^r/r!
    Rational c = 0;
    for (int r = 0; 3 * r <= n; ++r)
      c += Rational(boost::multiprecision::pow(BigInt(x), n - 3 * r)) * Rational(boost::multiprecision::pow(BigInt(y), r)) /
           Rational(big_factorial(n - 3 * r) * big_factorial(r));
    c *= Rational(big_factorial(n));
    CHECK(hermite3(n, double(x), double(y)).real() == to_double(c));
  }
}

TEST_CASE("independent oracles") {
  CHECK(bessel_j0(0) == 1.0);
  CHECK(kelvin_ber(0) == 1.0);
  CHECK(kelvin_bei(0) == 0.0);
  CHECK(std::abs(bessel_j0(oracle::kJ0FirstZero)) < 1e-10);
  for (int i = 0; i < 5; ++i) CHECK(bessel_j0(oracle::kJ0Args[i]) == Approx(oracle::kJ0[i]).epsilon(1e-13));
  CHECK(kelvin_ber(3.0) == Approx(oracle::kBer3).epsilon(1e-12));
  CHECK(kelvin_bei(3.0) == Approx(oracle::kBei3).epsilon(1e-12));
}

TEST_CASE("batch Laguerre cosine/sine matches the scalar functions") {
  std::vector<double> x, lc, ls;
  for (double v = -12; v <= 12; v += 0.37) x.push_back(v);
  lc.resize(x.size());
  ls.resize(x.size());
  laguerre_cos_sin_batch(x, lc, ls);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(lc[i] - laguerre_cos(x[i])) <= 1e-12 * std::max(1.0, std::abs(lc[i])));
    CHECK(std::abs(ls[i] - laguerre_sin(x[i])) <= 1e-12 * std::max(1.0, std::abs(ls[i])));
  }
  std::vector<double> bad(1);
  CHECK_THROWS_AS(laguerre_cos_sin_batch(x, bad, ls), std::invalid_argument);
}
