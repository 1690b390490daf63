#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <utility>

#include "peo/bivariate.hpp"
#include "peo/kernel.hpp"
#include "peo/polynomial.hpp"
#include "peo/special_functions.hpp"
#include "peo/umbral.hpp"

namespace peo {

// Transport: D_t F = alpha d_x F, F(x, 0) = f(x).

/// F = E(alpha t d_x) f = sum_{n <= N} weight(n) alpha^n t^{exponent(n)} f^(n)(x).
/// Exact for polynomial f once N >= deg f.
BivariateSeries solve_laguerre_transport(const Polynomial& f, cplx alpha, int N,
                                         const EigenKernel& kernel = EigenKernel::laguerre());

/// Exact coefficients keyed by (x degree, t degree).
using ExactBivariate = std::map<std::pair<int, int>, GaussianRational>;
ExactBivariate solve_laguerre_transport_exact(const Polynomial& f, const GaussianRational& alpha,
                                              int N);
/// l_d_t F - alpha d_x F, exact.
ExactBivariate transport_residual_exact(const ExactBivariate& F, const GaussianRational& alpha);

// Drift: l_d_t F = -(alpha x - beta d_x) F, F(x, 0) = 1.

/// sum_n (-alpha t x)^n / n! le_n^(2)(-alpha beta t^2 / 2).
SeriesValue solve_laguerre_drift(cplx alpha, cplx beta, cplx x, double t,
                                 const SeriesEvalConfig& cfg = {});
/// sum_{n,r} (-alpha t x)^n (-alpha beta t^2/2)^r / (n! r! Gamma(n+2r+1)), summed by total degree.
SeriesValue solve_laguerre_drift_double_sum(cplx alpha, cplx beta, cplx x, double t,
                                            const SeriesEvalConfig& cfg = {});
/// Umbral image v e^{-(vt)^2 alpha beta/2} e^{-v t alpha x}, expanded over n, r < `degrees`.
UmbralSum laguerre_drift_umbral(cplx alpha, cplx beta, cplx x, double t, int degrees);
/// Series in (x, t) for a polynomial initial condition f, through t^N:
/// I(v e^{-(vt)^2 alpha beta/2} e^{-v t alpha x} f(x + v beta t)).
BivariateSeries laguerre_drift_series(const Polynomial& f, cplx alpha, cplx beta, int N);

// Schrodinger type: i l_d_t Psi = O Psi, O = -(alpha x + beta/2 d_x^2).

/// H_n^(3)(a x, y) as an exact polynomial in x.
Polynomial hermite3_scaled(int n, const GaussianRational& a, const GaussianRational& y);
/// sum_{n <= N} (i t)^n / (n!)^2 H_n^(3)(alpha x, alpha^2 beta / 6).
cplx solve_laguerre_schrodinger(double alpha, double beta, cplx x, double t, int N);
BivariateSeries laguerre_schrodinger_series(double alpha, double beta, int N);
/// General polynomial initial condition phi via the operational form
/// I(v e^{s^3 alpha^2 beta/6} e^{s alpha x} phi(x + s^2 alpha beta/2 + s beta d_x) 1), s = i v t,
/// expanded exactly in the Weyl algebra. N <= 12.
BivariateSeries solve_laguerre_schrodinger_general(const Polynomial& phi, const Rational& alpha,
                                                   const Rational& beta, int N);
/// i l_d_t Psi - O Psi, termwise.
BivariateSeries schrodinger_residual(const BivariateSeries& psi, double alpha, double beta);

// Matrix problems.

using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

/// Eigenvalues (lambda+, lambda-) of a 2x2 matrix.
std::pair<cplx, cplx> eigenvalues(const Matrix2& M);
/// Cayley-Hamilton form
/// E(M) = [(l+ 1 - M) E(l-) - (l- 1 - M) E(l+)] / (l+ - l-), with E the kernel at time t.
/// Throws ConditioningError when |l+ - l-| < 1e-8 ||M||.
Matrix2 matrix_kernel_exp(const Matrix2& M, double t, const EigenKernel& kernel,
                          const SeriesEvalConfig& cfg = {});
/// Direct series sum_{n < terms} weight(n) M^n t^{exponent(n)}. Throws
/// NonConvergenceError when the last term is not negligible.
Matrix2 matrix_kernel_series(const Matrix2& M, double t, const EigenKernel& kernel, int terms = 60);
Matrix2 matrix_laguerre_exp(const Matrix2& M, double t, const SeriesEvalConfig& cfg = {});

/// Y(t) = E_{mu,1}(M t^mu) Y0 via Cayley-Hamilton.
Vector2 fractional_matrix_evolution(const Matrix2& M, double mu, double t, const Vector2& Y0,
                                    const SeriesEvalConfig& cfg = {});
/// Component series sum_r M^r Y0 t^{mu r} / Gamma(mu r + 1) through t^order.
std::array<FracSeries, 2> fractional_matrix_series(const Matrix2& M, double mu, const Vector2& Y0,
                                                   double order);
/// d_t^mu Y - M Y - t^{-mu}/Gamma(1-mu) Y0, termwise.
std::array<FracSeries, 2> fractional_matrix_residual(const std::array<FracSeries, 2>& Y,
                                                     const Matrix2& M, double mu, const Vector2& Y0);

// Fractional Schrodinger type: d_t^mu F = O F + t^{-mu}/Gamma(1-mu) f, O as above.

/// sum_{r <= N} t^{mu r} / Gamma(mu r + 1) H_r^(3)(-alpha x, -alpha^2 beta / 6).
cplx fractional_schrodinger(double alpha, double beta, double mu, cplx x, double t, int N);
BivariateSeries fractional_schrodinger_series(double alpha, double beta, double mu, int N);
/// d_t^mu F - O F - t^{-mu}/Gamma(1-mu) f, termwise.
BivariateSeries fractional_schrodinger_residual(const BivariateSeries& F, double alpha, double beta,
                                                double mu, const Polynomial& f);

/// The operational form for general polynomial f, with s = (v t)^mu:
///   e^{-s^3 alpha^2 beta/6} e^{-s alpha x} f(x + shift + (-beta s) d_x) 1
/// Derived: shift = alpha beta/2 s^2 (what the Zassenhaus chain produces).
/// Verbatim: shift = alpha beta/2 s, as displayed.
/// Both agree for constant f. N <= 12.
enum class FractionalDisplay { Derived, Verbatim };
BivariateSeries fractional_general_series(const Polynomial& f, const Rational& alpha,
                                          const Rational& beta, double mu, int N,
                                          FractionalDisplay display = FractionalDisplay::Derived);

}  // namespace peo
