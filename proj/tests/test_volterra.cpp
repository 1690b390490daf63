#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "peo/volterra.hpp"

using namespace peo;
using doctest::Approx;

namespace {

Eigen::MatrixXcd mat(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXcd m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("Laguerre V-N with constant and monomial forcing") {
  const auto st = laguerre_vn_solve(ExactSeries::monomial(0, Rational(-3)), Rational(1), 100, 15);
  CHECK(st.partial_sum == laguerre_exp_exact(Rational(-3), 1, 15));
  CHECK(laguerre_vn_residual(st, ExactSeries::monomial(0, Rational(-3)), Rational(1)).empty());

  for (int m = 0; m <= 3; ++m) {
    const auto s = laguerre_vn_solve(ExactSeries::monomial(m, Rational(2)), Rational(5), 1000, 24);
    const Rational k = Rational(2) / Rational((m + 1) * (m + 1));
    CHECK(s.partial_sum == Rational(5) * laguerre_exp_exact(k, m + 1, 24));
  }
}

TEST_CASE("iteration stops once the valuation passes the order") {
  const auto st = laguerre_vn_solve(ExactSeries::monomial(2, Rational(1)), Rational(1), 1000, 10);
  CHECK(st.iterates.size() <= 5);
  for (const auto& [e, c] : st.partial_sum.terms()) CHECK(e <= 10);
  const auto fl = laguerre_vn_solve(FracSeries::monomial(0.5, 1.0), 1.0, 1000, 6.0);
  CHECK(fl.iterates.size() <= 6);
  CHECK(fl.partial_sum.valuation() == 0.0);
  // float and exact paths agree for integer data
  const auto fe = laguerre_vn_solve(FracSeries::monomial(1, -1.0), 1.0, 1000, 12.0);
  const auto ee = laguerre_vn_solve(ExactSeries::monomial(1, Rational(-1)), Rational(1), 1000, 12);
  CHECK(series_rel_error(fe.partial_sum, ee.partial_sum.to_frac()) < 1e-15);
}

TEST_CASE("cos forcing") {
  const auto a2 = cos_recursion_coeffs(2, 6);
  CHECK(a2[0] == 1);
  const auto a1 = cos_recursion_coeffs(1, 5);
  for (int r = 0; r <= 5; ++r) CHECK(a1[r] == Rational(1) / Rational(big_factorial(2 * r)));
  const ExactSeries cs = cos_series_exact(10);
  CHECK(cs.coefficient(4) == Rational(1, 24));
  CHECK(cs.coefficient(3) == 0);
  const auto st = laguerre_vn_solve(cos_series_exact(20), Rational(1), 4, 20);
  for (int n = 1; n <= 4; ++n) {
    const ExactSeries it = cos_recursion_iterate(n, 6);
    for (const auto& [e, c] : it.terms()) CHECK(st.iterates[n].coefficient(e) == c);
  }
}

TEST_CASE("fractional V-N") {
  // alpha = 1, f = -1: e^{-t}
  const auto st = fractional_vn_solve(FracSeries::constant(-1.0), 1.0, 1.0, 40, 20);
  for (int k = 0; k <= 20; ++k)
    CHECK(st.partial_sum.coefficient(k).real() == Approx(std::pow(-1.0, k) / std::tgamma(k + 1.0)).epsilon(1e-14));

  CHECK(fractional_vn_monomial_closed_form(0, 0.4, 1.7) == 1.0);
  CHECK(fractional_vn_monomial_closed_form(1, 0.5, 1.0) == Approx(oracle::kBetaProductN1).epsilon(1e-14));
  CHECK(fractional_vn_monomial_closed_form(3, 0.7, 0.9) == Approx(oracle::kBetaProductN3).epsilon(1e-13));

  const FracSeries f = FracSeries::monomial(1, -1.0);
  for (double alpha : {0.25, 0.6}) {
    const auto s = fractional_vn_solve(f, alpha, 1.0, 40, 12);
    CHECK(series_max_abs(fractional_vn_residual(s, f, alpha, 1.0), 12) < 1e-13);
    CHECK(series_max_abs(fractional_vn_differential_residual(s, f, alpha, 1.0), 12 - alpha) < 1e-12);
    for (int n = 0; n <= 4; ++n)
      CHECK(series_eval(s.iterates[n], 0.8).real() == Approx(fractional_vn_monomial_closed_form(n, alpha, 0.8)).epsilon(1e-12));
  }
}

TEST_CASE("matrix series arithmetic") {
  const auto A = MatrixSeries::polynomial({mat({{1, 0}, {0, 1}}), mat({{0, 1}, {0, 0}})});
  const auto B = MatrixSeries::polynomial({mat({{0, 0}, {0, 0}}), mat({{0, 0}, {1, 0}})});
  const auto P = A * B;
  CHECK((P.coefficient(1) - mat({{0, 0}, {1, 0}})).norm() == 0.0);
  CHECK((P.coefficient(2) - mat({{1, 0}, {0, 0}})).norm() == 0.0);
  CHECK(((B * A).coefficient(2) - mat({{0, 0}, {0, 1}})).norm() == 0.0);
  CHECK(P.valuation() == 1.0);
  CHECK((A - A).terms().empty());
  CHECK(((A + B).eval(0.5) - (A.eval(0.5) + B.eval(0.5))).norm() < 1e-15);
  CHECK(P.with_truncation(1).terms().size() == 1);
  CHECK(series_eval(P.entry(1, 0), 2.0) == cplx(2.0));
  const auto I = rl_integral(MatrixSeries::identity(2), 0.5);
  CHECK(I.coefficient(0.5)(0, 0).real() == Approx(1 / std::tgamma(1.5)).epsilon(1e-15));
}

TEST_CASE("Dyson series") {
  // scalar M(t) = a + b t at alpha = 1: exp(a t + b t^2/2)
  const auto M1 = MatrixSeries::polynomial({mat({{0.3}}), mat({{-0.8}})});
  const auto st = dyson_evolution_operator(M1, 1.0, 40, 30);
  for (double t : {0.5, 1.0}) CHECK(st.partial_sum.eval(t)(0, 0).real() == Approx(std::exp(0.3 * t - 0.4 * t * t)).epsilon(1e-13));

  // constant matrix: E_alpha(M t^alpha) = sum M^k t^{alpha k}/Gamma(alpha k + 1)
  const Eigen::MatrixXcd C = mat({{0, -1}, {1, 0}});
  const auto sc = dyson_evolution_operator(MatrixSeries::polynomial({C}), 0.4, 60, 12);
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(2, 2), pw = Eigen::MatrixXcd::Identity(2, 2);
  for (int k = 0; k <= 30; ++k) {
    want += pw * (std::pow(0.7, 0.4 * k) / std::tgamma(0.4 * k + 1));
    pw = pw * C;
  }
  CHECK((sc.partial_sum.eval(0.7) - want).norm() < 1e-5);  // truncated at t^12
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(2, 2);
  pw = Eigen::MatrixXcd::Identity(2, 2);
  for (int k = 0; k <= 150; ++k) {
    full += pw * (std::pow(0.7, 0.4 * k) / std::tgamma(0.4 * k + 1));
    pw = pw * C;
  }
  const auto sc_long = dyson_evolution_operator(MatrixSeries::polynomial({C}), 0.4, 200, 60);
  CHECK((sc_long.partial_sum.eval(0.7) - full).norm() < 1e-13);

  // non-commuting time dependence against fourth-order Magnus steps
  const auto M = MatrixSeries::polynomial({mat({{0, 1}, {-1, 0}}), mat({{0.5, 0}, {0, -0.5}})});
  const auto dy = dyson_evolution_operator(M, 1.0, 80, 60);
  CHECK((dy.partial_sum.eval(1.0) - magnus4_propagator(M, 1.0, 400)).norm() < 1e-11);

  // literal nesting coincides with the canonical series at alpha = 1
  CHECK((dyson_literal_value(M, 1.0, 1.0, 40) - dy.partial_sum.eval(1.0)).norm() < 1e-7);
  // for constant M the literal nesting is exp(M t^alpha / Gamma(alpha + 1)), not the canonical E_alpha
  const Eigen::MatrixXcd lit = dyson_literal_value(MatrixSeries::polynomial({C}), 0.4, 0.7, 60);
  const Eigen::MatrixXcd expo = (C * (std::pow(0.7, 0.4) / std::tgamma(1.4))).exp();
  CHECK((lit - expo).norm() < 1e-6);
  CHECK((lit - full).norm() > 1e-2);
}
