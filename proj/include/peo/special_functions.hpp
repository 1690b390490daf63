#pragma once

#include <span>

#include "peo/frac_series.hpp"

namespace peo {

/// Truncation policy for the entire-function series below.
struct SeriesEvalConfig {
  double rel_tol = 1e-14;
  int max_terms = 10000;
  /// Stop after this many successive terms with |term| <= rel_tol * |partial sum|.
  int consecutive_small = 3;

  void validate() const;
};

struct SeriesValue {
  cplx value;
  int terms;  // number of terms summed
};

/// le(x) = sum_r x^r / (r!)^2, the Laguerre exponential (= I0(2 sqrt x)).
SeriesValue laguerre_exp(cplx x, const SeriesEvalConfig& cfg = {});

/// le_n^(m)(x) = sum_r x^r / (r! Gamma(m r + n + 1)).
SeriesValue laguerre_e_nm(int n, int m, cplx x, const SeriesEvalConfig& cfg = {});

/// Laguerre cosine / sine: real and imaginary parts of le(i x).
double laguerre_cos(double x, const SeriesEvalConfig& cfg = {});
double laguerre_sin(double x, const SeriesEvalConfig& cfg = {});

/// Mittag-Leffler E_{alpha,beta}(x) = sum_r x^r / Gamma(alpha r + beta), alpha > 0.
/// Terms at Gamma poles contribute zero.
SeriesValue mittag_leffler(double alpha, double beta, cplx x, const SeriesEvalConfig& cfg = {});

/// Third-order Hermite polynomial
/// H_n(x, y) = n! sum_{r <= n/3} x^{n-3r} y^r / ((n-3r)! r!).
cplx hermite3(int n, cplx x, cplx y);

// Independent oracles, each summed by its own code path.

/// J0 via the trapezoidal rule on (1/2pi) int_0^{2pi} cos(t sin th) dth,
/// which converges geometrically for this periodic integrand.
double bessel_j0(double t);
/// Kelvin functions by their ascending series in (z/2)^4.
double kelvin_ber(double z);
double kelvin_bei(double z);

// Series forms (FracSeries in t), for termwise residual checks.

/// le(lambda t) through t^order.
FracSeries laguerre_exp_series(cplx lambda, int order);
/// lc(omega t) through t^order.
FracSeries laguerre_cos_series(double omega, int order);
/// E_{mu,beta}(m t^mu) = sum_r m^r t^{mu r} / Gamma(mu r + beta) through t^order.
FracSeries mittag_leffler_series(double mu, double beta, cplx m, double order);

/// Batch Laguerre cosine/sine over a grid, via the runtime-selected Horner
/// kernel (scalar / AVX2 / NEON). Spans must have equal length.
void laguerre_cos_sin_batch(std::span<const double> x, std::span<double> lc,
                            std::span<double> ls);

}  // namespace peo
