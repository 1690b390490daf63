#include "peo/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "peo/errors.hpp"
#include "peo/detail/series_accumulator.hpp"
#include "peo/simd/horner.hpp"

namespace peo {
namespace {

using detail::SeriesAccumulator;

cplx ipow(cplx z, int n) {
  cplx r{1.0, 0.0};
  cplx b = z;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

}  // namespace

void SeriesEvalConfig::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("SeriesEvalConfig: rel_tol must be > 0");
  if (max_terms < 1) throw DomainError("SeriesEvalConfig: max_terms must be >= 1");
  if (consecutive_small < 1) throw DomainError("SeriesEvalConfig: consecutive_small must be >= 1");
}

SeriesValue laguerre_exp(cplx x, const SeriesEvalConfig& cfg) {
  SeriesAccumulator acc(cfg);
  cplx term{1.0, 0.0};
  for (int r = 0; !acc.exhausted(); ++r) {
    if (acc.add(term)) return acc.result();
    const double k = r + 1.0;
    term *= x / (k * k);
  }
  acc.fail("laguerre_exp");
}

SeriesValue laguerre_e_nm(int n, int m, cplx x, const SeriesEvalConfig& cfg) {
  if (n < 0) throw DomainError("laguerre_e_nm: n must be >= 0");
  if (m < 1) throw DomainError("laguerre_e_nm: m must be >= 1");
  SeriesAccumulator acc(cfg);
  cplx term = recip_gamma(n + 1.0);
  for (int r = 0; !acc.exhausted(); ++r) {
    if (acc.add(term)) return acc.result();
    // term_{r+1}/term_r = x / ((r+1) (mr+n+1)...(mr+n+m))
    double den = r + 1.0;
    for (int j = 1; j <= m; ++j) den *= static_cast<double>(m) * r + n + j;
    term *= x / den;
  }
  acc.fail("laguerre_e_nm");
}

double laguerre_cos(double x, const SeriesEvalConfig& cfg) {
  return laguerre_exp({0.0, x}, cfg).value.real();
}

double laguerre_sin(double x, const SeriesEvalConfig& cfg) {
  return laguerre_exp({0.0, x}, cfg).value.imag();
}

SeriesValue mittag_leffler(double alpha, double beta, cplx x, const SeriesEvalConfig& cfg) {
  if (!(alpha > 0.0)) throw DomainError("mittag_leffler: alpha must be > 0");
  SeriesAccumulator acc(cfg);
  cplx power{1.0, 0.0};
  const double log_abs_x = std::log(std::abs(x));
  const double arg_x = std::arg(x);
  for (int r = 0; !acc.exhausted(); ++r) {
    const double a = alpha * r + beta;
    const bool pole = is_gamma_pole(a);
    cplx term{0.0, 0.0};
    if (!pole) {
      const double rg = recip_gamma(a);
      if (std::isfinite(std::abs(power)) && rg != 0.0) {
        term = power * rg;
      } else if (x != cplx{0.0, 0.0}) {
        int sign = 1;
        const double lg = lgamma_abs(a, &sign);
        term = static_cast<double>(sign) * std::polar(std::exp(r * log_abs_x - lg), r * arg_x);
      }
    }
    if (acc.add(term, pole)) return acc.result();
    power *= x;
  }
  acc.fail("mittag_leffler");
}

cplx hermite3(int n, cplx x, cplx y) {
  if (n < 0) throw DomainError("hermite3: n must be >= 0");
  cplx sum{0.0, 0.0};
  for (int r = 0; 3 * r <= n; ++r) {
    double weight;
    if (n <= 170) {
      weight = factorial(n) / (factorial(n - 3 * r) * factorial(r));
    } else {
      weight = std::exp(lgamma_abs(n + 1.0) - lgamma_abs(n - 3.0 * r + 1.0) - lgamma_abs(r + 1.0));
    }
    sum += weight * ipow(x, n - 3 * r) * ipow(y, r);
  }
  return sum;
}

double bessel_j0(double t) {
  const int n = 64 + 2 * static_cast<int>(std::ceil(std::abs(t)));
  const double h = 2.0 * std::numbers::pi / n;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::cos(t * std::sin(k * h));
  return sum / n;
}

double kelvin_ber(double z) {
  const double q = std::pow(z / 2.0, 4);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 2000; ++k) {
    const double a = (2.0 * k + 1.0) * (2.0 * k + 2.0);
    term *= -q / (a * a);
    sum += term;
    if (a * a > q && std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double kelvin_bei(double z) {
  const double h = (z / 2.0) * (z / 2.0);
  const double q = h * h;
  double term = h;
  double sum = h;
  for (int k = 0; k < 2000; ++k) {
    const double a = (2.0 * k + 2.0) * (2.0 * k + 3.0);
    term *= -q / (a * a);
    sum += term;
    if (a * a > q && std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

FracSeries laguerre_exp_series(cplx lambda, int order) {
  std::vector<SeriesTerm> terms;
  cplx c{1.0, 0.0};
  for (int r = 0; r <= order; ++r) {
    terms.push_back({static_cast<double>(r), c});
    c *= lambda / ((r + 1.0) * (r + 1.0));
  }
  return FracSeries(std::move(terms), order);
}

FracSeries laguerre_cos_series(double omega, int order) {
  std::vector<SeriesTerm> terms;
  double c = 1.0;
  for (int k = 0; 2 * k <= order; ++k) {
    terms.push_back({2.0 * k, c});
    const double a = (2.0 * k + 1.0) * (2.0 * k + 2.0);
    c *= -omega * omega / (a * a);
  }
  return FracSeries(std::move(terms), order);
}

FracSeries mittag_leffler_series(double mu, double beta, cplx m, double order) {
  if (!(mu > 0.0)) throw DomainError("mittag_leffler_series: mu must be > 0");
  std::vector<SeriesTerm> terms;
  cplx power{1.0, 0.0};
  for (int r = 0; mu * r <= order || same_exponent(mu * r, order); ++r) {
    terms.push_back({mu * r, power * recip_gamma(mu * r + beta)});
    power *= m;
  }
  return FracSeries(std::move(terms), order);
}

void laguerre_cos_sin_batch(std::span<const double> x, std::span<double> lc, std::span<double> ls) {
  if (lc.size() != x.size() || ls.size() != x.size())
    throw std::invalid_argument("laguerre_cos_sin_batch: size mismatch");
  double xmax = 0.0;
  for (double v : x) xmax = std::max(xmax, std::abs(v));

  // lc = sum_k (-1)^k y^k / ((2k)!)^2, ls = x sum_k (-1)^k y^k / ((2k+1)!)^2, y = x^2.
  std::vector<double> ccos{1.0};
  std::vector<double> csin{1.0};
  double bound = 1.0;  // xmax^(2k) / ((2k)!)^2
  for (int k = 0; k < 400; ++k) {
    const double a = (2.0 * k + 1.0);
    const double b = (2.0 * k + 2.0);
    ccos.push_back(-ccos.back() / (a * b * a * b));
    csin.push_back(-csin.back() / (b * (b + 1.0) * b * (b + 1.0)));
    bound *= xmax * xmax / (a * b * a * b);
    if (a * b > xmax && bound < 1e-20) break;
  }

  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * x[i];
  simd::horner2(ccos, csin, y, lc, ls);
  for (std::size_t i = 0; i < x.size(); ++i) ls[i] *= x[i];
}

}  // namespace peo
