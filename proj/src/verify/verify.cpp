#include "peo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "peo/errors.hpp"
#include "peo/kernel.hpp"
#include "peo/polynomial.hpp"
#include "peo/solvers.hpp"
#include "peo/special_functions.hpp"
#include "peo/umbral.hpp"
#include "peo/volterra.hpp"
#include "peo/weyl.hpp"

namespace peo {
namespace {

struct Check {
  std::string name;
  double tol;
  std::function<double()> residual;  // exact checks return 0 or 1
};

double exact(bool ok) { return ok ? 0.0 : 1.0; }

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// special --------------------------------------------------------------------------

std::vector<Check> special_checks() {
  std::vector<Check> c;
  c.push_back({"le(-(t/2)^2) = J0(t)", 1e-12, [] {
                 double r = 0;
                 for (double t : {0.5, 1.0, 2.0, 5.0, 10.0})
                   r = std::max(r, std::abs(laguerre_exp(-t * t / 4).value.real() - bessel_j0(t)));
                 return r;
               }});
  c.push_back({"lc(x) = ber(2 sqrt x), ls(x) = bei(2 sqrt x)", 1e-12, [] {
                 double r = 0;
                 for (double x : {0.5, 1.0, 2.0, 5.0}) {
                   const double z = 2 * std::sqrt(x);
                   r = std::max({r, std::abs(laguerre_cos(x) - kelvin_ber(z)),
                                 std::abs(laguerre_sin(x) - kelvin_bei(z))});
                 }
                 return r;
               }});
  c.push_back({"E_{1,1}(x) = e^x, E_{2,1}(x^2) = cosh x, E_{1/2,1}(x) = e^{x^2} erfc(-x)", 1e-13, [] {
                 double r = 0;
                 for (double x : {-1.5, -0.3, 0.4, 1.2}) {
                   r = std::max(r, rel(mittag_leffler(1, 1, x).value, std::exp(x)));
                   r = std::max(r, rel(mittag_leffler(2, 1, x * x).value, std::cosh(x)));
                   r = std::max(r, rel(mittag_leffler(0.5, 1, x).value, std::exp(x * x) * std::erfc(-x)));
                 }
                 return r;
               }});
  c.push_back({"E_{mu,1}(m t^mu) is an RL pseudo-eigenfunction", 1e-12, [] {
                 double r = 0;
                 for (double mu : {0.3, 0.5, 0.8}) {
                   const cplx m{0.7, -0.4};
                   const FracSeries e = mittag_leffler_series(mu, 1, m, 10 * mu + mu);
                   const FracSeries res = rl_derivative(e, mu) - m * e -
                                          FracSeries::monomial(-mu, recip_gamma(1 - mu));
                   r = std::max(r, series_max_abs(res, 10 * mu));
                 }
                 return r;
               }});
  c.push_back({"H3_n(x, y) sums to its EGF e^{tx + t^3 y}", 1e-13, [] {
                 const cplx x{0.3, 0.1}, y{-0.2, 0.05};
                 const double t = 0.6;
                 cplx s = 0;
                 double f = 1;
                 for (int n = 0; n < 40; ++n) {
                   if (n) f *= n;
                   s += hermite3(n, x, y) * std::pow(t, n) / f;
                 }
                 return rel(s, std::exp(t * x + t * t * t * y));
               }});
  return c;
}

// umbral ---------------------------------------------------------------------------

std::vector<Check> umbral_checks() {
  std::vector<Check> c;
  c.push_back({"I(v e^{v x}) = le(x)", 1e-13, [] {
                 double r = 0;
                 for (cplx x : {cplx(1.0), cplx(-2.5), cplx(0.3, 1.1)})
                   r = std::max(r, rel(fio_eval_series(laguerre_exp_umbral(x, 60)), laguerre_exp(x).value));
                 return r;
               }});
  c.push_back({"I(v^{n+1} e^{x v^m}) = le_n^(m)(x)", 1e-13, [] {
                 return rel(fio_eval_series(laguerre_e_nm_umbral(1, 2, 0.7, 60)),
                            laguerre_e_nm(1, 2, 0.7).value);
               }});
  c.push_back({"I(v^b / (1 - x v^a)) = E_{a,b}(x)", 1e-13, [] {
                 return rel(fio_eval_series(mittag_leffler_umbral(0.8, 1.2, 1.5, 150)),
                            mittag_leffler(0.8, 1.2, 1.5).value);
               }});
  c.push_back({"Laplace form with g(s) = s gives E_{a,b}", 1e-13, [] {
                 return rel(fio_eval_series(mittag_leffler_laplace_umbral(0.6, 1, 0.9, 150,
                                                                          LaplaceForm::SDependent)),
                            mittag_leffler(0.6, 1, 0.9).value);
               }});
  c.push_back({"0F1(;1;z) = le(z), 1F1(1;2;z) = (e^z - 1)/z", 1e-13, [] {
                 const double z = 0.8;
                 return std::max(rel(fio_eval_series(hypergeometric_umbral({}, {1.0}, z, 60)), laguerre_exp(z).value),
                                 rel(fio_eval_series(hypergeometric_umbral({1.0}, {2.0}, z, 60)),
                                     (std::exp(z) - 1) / z));
               }});
  c.push_back({"le(x) le(y) = sum (x (+)_l y)^n/(n!)^2, exact n <= 10", 0, [] {
                 return exact(laguerre_product_coefficients(10) == laguerre_binomial_series_coefficients(10));
               }});
  c.push_back({"Laguerre semigroup numeric at (0.7, -0.3)", 1e-13, [] {
                 return laguerre_semigroup_check(0.7, -0.3, 40).residual;
               }});
  c.push_back({"umbral (x (+)_l y)^n matches the binomial form", 1e-12, [] {
                 double r = 0;
                 for (int n = 0; n <= 8; ++n)
                   r = std::max(r, rel(laguerre_binomial_umbral(n, 0.7, -0.3), laguerre_binomial_pow(n, 0.7, -0.3)));
                 return r;
               }});
  c.push_back({"ML law vs product: coefficient ratio is C(r+k, r)", 1e-12, [] {
                 double r = 0;
                 for (const auto& e : ml_semigroup_comparison(0.5, 1.0, 8)) {
                   double binom = 1;
                   for (int i = 1; i <= e.r; ++i) binom = binom * (e.k + i) / i;
                   r = std::max(r, std::abs(e.ratio - binom) / binom);
                 }
                 return r;
               }});
  return c;
}

// weyl -----------------------------------------------------------------------------

const std::vector<std::pair<Rational, Rational>>& rational_params() {
  static const std::vector<std::pair<Rational, Rational>> p{
      {Rational(1), Rational(1)}, {Rational(2, 3), Rational(-5, 7)}, {Rational(-3, 2), Rational(1, 4)}};
  return p;
}

std::vector<Check> weyl_checks() {
  std::vector<Check> c;
  c.push_back({"Weyl rule for the drift pair, order 6, 3 parameter sets", 0, [] {
                 bool ok = true;
                 for (const auto& [a, b] : rational_params()) ok = ok && weyl_drift_check(a, b, 6);
                 return exact(ok);
               }});
  c.push_back({"disentangling chain of e^{l d^2 + k x}, order 6, 3 parameter sets", 0, [] {
                 bool ok = true;
                 for (const auto& [a, b] : rational_params()) ok = ok && zassenhaus_chain_check(a, b, 6).all();
                 return exact(ok);
               }});
  c.push_back({"Zassenhaus C2 = [Y,X]/2, C3 = [C2, X+2Y]/3, C4 = C5 = 0 on (d^2, x)", 0, [] {
                 const WeylElement X = WeylElement::d() * WeylElement::d();
                 const WeylElement Y = WeylElement::x();
                 const auto C = zassenhaus_coeffs(X, Y, 5, 6);
                 const WeylElement c2 = commutator(Y, X) * GaussianRational(Rational(1, 2));
                 const WeylElement c3 = commutator(c2, X + Y * GaussianRational(2)) * GaussianRational(Rational(1, 3));
                 return exact(C[2] == c2 && C[3] == c3 && C[4] == WeylElement() && C[5] == WeylElement());
               }});
  c.push_back({"Crofton-Glaisher, m = 1, 2, 3, order 5", 0, [] {
                 const Polynomial f({GaussianRational(1), GaussianRational(-2), GaussianRational(0),
                                     GaussianRational(Rational(1, 3)), GaussianRational(Rational(-1, 5))});
                 const Polynomial p({GaussianRational(2), GaussianRational(0), GaussianRational(Rational(3, 2)),
                                     GaussianRational(1), GaussianRational(Rational(1, 7))});
                 bool ok = true;
                 for (int m = 1; m <= 3; ++m) ok = ok && crofton_glaisher_check(m, f, p, 5);
                 return exact(ok);
               }});
  c.push_back({"e^{y d^3} x^n = H3_n(x, y), n <= 9", 0, [] {
                 const GaussianRational y(Rational(2, 3));
                 const auto E = graded_exp(GradedOpSeries::term(WeylElement::d() * WeylElement::d() * WeylElement::d() *
                                                                    WeylElement::scalar(y),
                                                                1, 3),
                                           3);
                 bool ok = true;
                 for (int n = 0; n <= 9; ++n) {
                   Polynomial sum;
                   for (const auto& part : E.apply(Polynomial::monomial(n))) sum = sum + part;
                   ok = ok && sum == hermite3_polynomial(n, y);
                 }
                 return exact(ok);
               }});
  c.push_back({"Berry rule, graded, order 6", 0, [] {
                 bool ok = true;
                 for (const auto& [a, b] : rational_params())
                   ok = ok && berry_graded_check(a, b, 6) && berry_zassenhaus_graded_check(a, b, 6);
                 return exact(ok);
               }});
  c.push_back({"Berry rule residual at a = b = 0.1, degree <= 6", 1e-10, [] {
                 return berry_rule_check(Rational(1, 10), Rational(1, 10), 6, 40, 1e-10).residual;
               }});
  c.push_back({"Berry rule vs Zassenhaus route at a = b = 0.1", 1e-10, [] {
                 return berry_vs_zassenhaus(Rational(1, 10), Rational(1, 10), 6, 40, 1e-10).residual;
               }});
  return c;
}

// peo ------------------------------------------------------------------------------

std::vector<Check> peo_checks() {
  std::vector<Check> c;
  c.push_back({"transport: l_d_t F = alpha d_x F exactly", 0, [] {
                 const Polynomial f({GaussianRational(1), GaussianRational(2), GaussianRational(0),
                                     GaussianRational(Rational(-1, 3)), GaussianRational(1)});
                 const GaussianRational alpha(Rational(3, 2), Rational(1, 2));
                 return exact(transport_residual_exact(solve_laguerre_transport_exact(f, alpha, 6), alpha).empty());
               }});
  c.push_back({"drift: single sum, double sum and umbral image agree", 1e-12, [] {
                 const double t = 0.8;
                 const cplx a = 0.7, b = 0.4, x = 0.5;
                 const cplx s = solve_laguerre_drift(a, b, x, t).value;
                 return std::max({rel(solve_laguerre_drift_double_sum(a, b, x, t).value, s),
                                  rel(fio_eval_series(laguerre_drift_umbral(a, b, x, t, 40)), s)});
               }});
  c.push_back({"drift series residual", 1e-12, [] {
                 const Polynomial f({GaussianRational(1), GaussianRational(-1), GaussianRational(Rational(1, 2))});
                 const cplx a = 0.7, b = 0.4;
                 const BivariateSeries F = laguerre_drift_series(f, a, b, 12);
                 const BivariateSeries res =
                     laguerre_t_derivative(F) - ((-a) * times_x(F) + b * x_derivative(F));
                 return res.max_abs(11) / std::max(1.0, F.max_abs());
               }});
  c.push_back({"Schrodinger: (alpha x + beta/2 d^2) h_n = h_{n+1}, n <= 12", 0, [] {
                 const GaussianRational a(1), y(Rational(1, 12));  // alpha^2 beta / 6 at (1, 1/2)
                 const WeylElement op = WeylElement::x() * a +
                                        WeylElement::d() * WeylElement::d() * GaussianRational(Rational(1, 4));
                 bool ok = true;
                 for (int n = 0; n <= 12; ++n) ok = ok && apply(op, hermite3_scaled(n, a, y)) == hermite3_scaled(n + 1, a, y);
                 return exact(ok);
               }});
  c.push_back({"Schrodinger series residual at (1, 0.5)", 1e-12, [] {
                 const BivariateSeries psi = laguerre_schrodinger_series(1.0, 0.5, 11);
                 return schrodinger_residual(psi, 1.0, 0.5).max_abs(10);
               }});
  c.push_back({"Cayley-Hamilton vs 60-term series, 20 random matrices", 1e-11, [] {
                 std::mt19937_64 rng(20240611);
                 std::uniform_real_distribution<double> u(-1, 1);
                 double r = 0;
                 int done = 0;
                 while (done < 20) {
                   Matrix2 M;
                   M << cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng));
                   const auto [lp, lm] = eigenvalues(M);
                   if (std::abs(lp - lm) < 0.1) continue;
                   for (const auto& k : {EigenKernel::exp(), EigenKernel::laguerre(), EigenKernel::mittag_leffler(0.5)}) {
                     const Matrix2 a = matrix_kernel_exp(M, 0.5, k), b = matrix_kernel_series(M, 0.5, k);
                     for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(a(i) - b(i)) / std::abs(b(i)));
                   }
                   ++done;
                 }
                 return r;
               }});
  c.push_back({"pseudo-rotation matrix for [[0,-a],[b,0]]", 1e-12, [] {
                 const double a = 0.6, b = 1.5, t = 2.0;
                 Matrix2 M;
                 M << 0, -a, b, 0;
                 const Matrix2 U = matrix_laguerre_exp(M, t);
                 const double w = std::sqrt(a * b) * t;
                 const double lc = laguerre_cos(w), ls = laguerre_sin(w);
                 return std::max({std::abs(U(0, 0) - lc), std::abs(U(1, 1) - lc),
                                  std::abs(U(0, 1) + std::sqrt(a / b) * ls), std::abs(U(1, 0) - std::sqrt(b / a) * ls)});
               }});
  c.push_back({"fractional matrix problem residual", 1e-12, [] {
                 Matrix2 M;
                 M << cplx(0.2, 0.1), -1.0, 0.7, cplx(-0.3, 0);
                 const Vector2 y0(1.0, cplx(0, 0.5));
                 double r = 0;
                 for (double mu : {0.3, 0.5, 0.8}) {
                   const auto Y = fractional_matrix_series(M, mu, y0, 12 * mu);
                   const auto R = fractional_matrix_residual(Y, M, mu, y0);
                   r = std::max({r, series_max_abs(R[0], 11 * mu), series_max_abs(R[1], 11 * mu)});
                 }
                 return r;
               }});
  c.push_back({"fractional Schrodinger residual", 1e-12, [] {
                 double r = 0;
                 for (double mu : {0.3, 0.5, 0.8}) {
                   const BivariateSeries F = fractional_schrodinger_series(1.0, 0.5, mu, 10);
                   const auto R = fractional_schrodinger_residual(F, 1.0, 0.5, mu, Polynomial::constant(GaussianRational(1)));
                   r = std::max(r, R.max_abs(9 * mu) / std::max(1.0, F.max_abs()));
                 }
                 return r;
               }});
  return c;
}

// vn -------------------------------------------------------------------------------

std::vector<Check> vn_checks() {
  std::vector<Check> c;
  c.push_back({"f = -t^m gives le(-t^{m+1}/(m+1)^2) exactly through t^20", 0, [] {
                 bool ok = true;
                 for (int m = 1; m <= 3; ++m) {
                   const auto st = laguerre_vn_solve(ExactSeries::monomial(m, Rational(-1)), Rational(1), 40, 20);
                   ok = ok && st.partial_sum == laguerre_exp_exact(Rational(-1, (m + 1) * (m + 1)), m + 1, 20);
                 }
                 return exact(ok);
               }});
  c.push_back({"Laguerre V-N fixed-point residual vanishes", 0, [] {
                 const ExactSeries f = cos_series_exact(16);
                 const auto st = laguerre_vn_solve(f, Rational(1), 40, 16);
                 return exact(laguerre_vn_residual(st, f, Rational(1)).empty());
               }});
  c.push_back({"cos triple recursion = generic solver, n <= 4, r <= 6", 0, [] {
                 const auto st = laguerre_vn_solve(cos_series_exact(20), Rational(1), 4, 20);
                 bool ok = st.iterates.size() == 5;
                 for (int n = 1; ok && n <= 4; ++n)
                   for (const auto& [e, a] : cos_recursion_iterate(n, 6).terms())
                     ok = ok && st.iterates[n].coefficient(e) == a;
                 return exact(ok);
               }});
  c.push_back({"fractional f = -t matches the Beta product, n <= 5", 1e-12, [] {
                 double r = 0;
                 for (double alpha : {0.3, 0.7}) {
                   const auto st = fractional_vn_solve(FracSeries::monomial(1, -1.0), alpha, 1.0, 5, 40);
                   for (int n = 0; n <= 5; ++n)
                     for (double t : {0.5, 0.9, 1.3}) {
                       const double want = fractional_vn_monomial_closed_form(n, alpha, t);
                       r = std::max(r, std::abs(series_eval(st.iterates[n], t).real() - want) / std::max(1e-300, std::abs(want)));
                     }
                 }
                 return r;
               }});
  c.push_back({"fractional V-N integral and differential residuals", 1e-12, [] {
                 const FracSeries f = FracSeries::monomial(0.5, cplx(-0.8, 0.3)) + FracSeries::constant(0.4);
                 double r = 0;
                 for (double alpha : {0.3, 0.7}) {
                   const auto st = fractional_vn_solve(f, alpha, 1.0, 60, 8);
                   r = std::max(r, series_max_abs(fractional_vn_residual(st, f, alpha, 1.0)));
                   r = std::max(r, series_max_abs(fractional_vn_differential_residual(st, f, alpha, 1.0), 8 - alpha));
                 }
                 return r;
               }});
  c.push_back({"Dyson with constant M reproduces E_{alpha,1}(M t^alpha)", 1e-12, [] {
                 Eigen::MatrixXcd M(2, 2);
                 M << cplx(0.3, 0.2), -1.1, 0.6, cplx(-0.4, 0);
                 double r = 0;
                 for (double alpha : {0.4, 1.0}) {
                   const auto U = dyson_evolution_operator(MatrixSeries::polynomial({M}), alpha, 40, 8).partial_sum;
                   Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(2, 2);
                   for (int n = 0; n * alpha <= 8 + 1e-9; ++n) {
                     r = std::max(r, (U.coefficient(n * alpha) - P * recip_gamma(n * alpha + 1)).cwiseAbs().maxCoeff());
                     P = M * P;
                   }
                 }
                 return r;
               }});
  c.push_back({"Dyson with M = A + B t, [A,B] != 0, vs stepwise Magnus at t = 1", 1e-8, [] {
                 Eigen::MatrixXcd A(2, 2), B(2, 2);
                 A << 0, 1, -1, 0;
                 B << 0.3, 0, 0.2, -0.1;
                 const MatrixSeries M = MatrixSeries::polynomial({A, B});
                 const auto U = dyson_evolution_operator(M, 1.0, 60, 40).partial_sum.eval(1.0);
                 return (U - magnus4_propagator(M, 1.0, 400)).cwiseAbs().maxCoeff();
               }});
  c.push_back({"literal Dyson nesting, constant m: exp(m t^alpha / Gamma(alpha+1))", 1e-8, [] {
                 const MatrixSeries m = MatrixSeries::polynomial({Eigen::MatrixXcd::Constant(1, 1, 0.5)});
                 const double alpha = 0.7, t = 1.2;
                 const cplx got = dyson_literal_value(m, alpha, t, 30, 20000)(0, 0);
                 return rel(got, std::exp(0.5 * std::pow(t, alpha) * recip_gamma(alpha + 1)));
               }});
  c.push_back({"convolution kernel equals rl_integral on monomials", 1e-8, [] {
                 double r = 0;
                 for (auto [g, a] : {std::pair{0.0, 0.3}, {1.0, 0.5}, {2.5, 0.7}, {0.5, 0.9}, {3.0, 0.2}}) {
                   // int_0^1 tau^g (1-tau)^{a-1} dtau / Gamma(a); tanh-sinh copes with the endpoint singularity
                   boost::math::quadrature::tanh_sinh<double> q;
                   const double s = q.integrate([&](double tau, double tc) {
                     return std::pow(tau, g) * std::pow(tc > 0 ? tc : 1 - tau, a - 1);
                   }, 0.0, 1.0) / peo::gamma(a);
                   const double want = series_eval(rl_integral(FracSeries::monomial(g, 1.0), a), 1.0).real();
                   r = std::max(r, std::abs(s - want) / want);
                 }
                 return r;
               }});
  return c;
}

const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>> s{
      {"special", special_checks}, {"umbral", umbral_checks}, {"weyl", weyl_checks},
      {"peo", peo_checks},         {"vn", vn_checks}};
  return s;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"all", "umbral", "weyl", "peo", "vn", "special"};
  return names;
}

bool is_verify_suite(std::string_view name) {
  const auto& n = verify_suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CheckResult> run_verify(std::string_view suite) {
  if (!is_verify_suite(suite)) throw std::invalid_argument("unknown verify suite: " + std::string(suite));
  std::vector<CheckResult> out;
  for (const auto& [name, make] : suites()) {
    if (suite != "all" && suite != name) continue;
    for (const auto& c : make()) {
      double r;
      try {
        r = c.residual();
      } catch (const std::exception&) {
        r = std::numeric_limits<double>::infinity();
      }
      out.push_back({name, c.name, r <= c.tol, r, c.tol});
    }
  }
  return out;
}

}  // namespace peo
