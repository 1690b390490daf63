#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "peo/gamma.hpp"

namespace peo {

/// One term c * t^exponent of a generalized power series.
struct SeriesTerm {
  double exponent;
  cplx coeff;
};

/// Generalized power series sum_i c_i t^{g_i} with real, strictly increasing
/// exponents. Exponents above `truncation_order` (inclusive bound) are not
/// represented; an operation that had to drop terms sets `truncated()`.
///
/// Exponents within 1e-12 * max(1, |g|) of each other are one term; terms
/// with |c| < 1e-300 are pruned. Values are immutable after construction.
class FracSeries {
 public:
  static constexpr double kNoTruncation = std::numeric_limits<double>::infinity();

  FracSeries() = default;
  explicit FracSeries(std::vector<SeriesTerm> terms, double truncation_order = kNoTruncation,
                      bool truncated = false);

  static FracSeries constant(cplx c, double truncation_order = kNoTruncation);
  static FracSeries monomial(double exponent, cplx c, double truncation_order = kNoTruncation);

  const std::vector<SeriesTerm>& terms() const { return terms_; }
  double truncation_order() const { return truncation_order_; }
  bool truncated() const { return truncated_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of t^exponent (merge tolerance applies), 0 if absent.
  cplx coefficient(double exponent) const;

  /// Smallest stored exponent, +inf for the empty series.
  double valuation() const;

  /// Same terms, new (tighter or looser) truncation bound.
  FracSeries with_truncation(double order) const;

  /// Termwise map c t^g -> f(g, c); result exponents must stay sorted-compatible
  /// (any order is accepted, terms are re-merged).
  FracSeries map_terms(const std::function<SeriesTerm(const SeriesTerm&)>& f) const;

  FracSeries operator-() const;
  FracSeries& operator*=(cplx s);

  friend FracSeries operator*(cplx s, const FracSeries& a);

 private:
  std::vector<SeriesTerm> terms_;
  double truncation_order_ = kNoTruncation;
  bool truncated_ = false;
};

/// |g1 - g2| <= 1e-12 * max(1, |g1|).
bool same_exponent(double g1, double g2);

FracSeries series_add(const FracSeries& a, const FracSeries& b);
FracSeries series_sub(const FracSeries& a, const FracSeries& b);
/// Cauchy product; exponents add, truncation is the min of both bounds.
FracSeries series_mul(const FracSeries& a, const FracSeries& b);

inline FracSeries operator+(const FracSeries& a, const FracSeries& b) { return series_add(a, b); }
inline FracSeries operator-(const FracSeries& a, const FracSeries& b) { return series_sub(a, b); }
inline FracSeries operator*(const FracSeries& a, const FracSeries& b) { return series_mul(a, b); }

/// Multiply by t^shift (exponents and truncation bound move together).
FracSeries shift(const FracSeries& s, double shift);

/// Riemann-Liouville integral of order alpha > 0:
/// c t^g -> c Gamma(g+1)/Gamma(g+alpha+1) t^{g+alpha}. Requires g > -1.
FracSeries rl_integral(const FracSeries& s, double alpha);

/// Riemann-Liouville derivative of order mu in (0, 1):
/// c t^g -> c Gamma(g+1)/Gamma(g-mu+1) t^{g-mu}.
FracSeries rl_derivative(const FracSeries& s, double mu);

/// Laguerre derivative d/dt t d/dt: c t^g -> c g^2 t^{g-1}.
FracSeries laguerre_derivative(const FracSeries& s);

/// Inverse Laguerre derivative int_0^t dt1/t1 int_0^t1 (.) dt2:
/// c t^g -> c t^{g+1}/(g+1)^2. Requires g > -1.
FracSeries laguerre_antiderivative(const FracSeries& s);

/// Fractional Laguerre derivative d^a t^a d^a, composed literally from two
/// RL power rules; alpha in (0, 1]. On t^g this gives
/// [Gamma(g+1)/Gamma(g-a+1)]^2 t^{g-a}. A constant is NOT annihilated for
/// alpha < 1: 1 -> t^{-a}/Gamma(1-a)^2.
FracSeries laguerre_fractional_derivative(const FracSeries& s, double alpha);

/// Sum c_i t^{g_i}. Requires t > 0 when any exponent is negative.
cplx series_eval(const FracSeries& s, double t);

/// Coefficientwise comparison: max over the union of exponents of
/// |a-b| / max(|a|, |b|), where differences <= 1e-14 count as zero.
double series_rel_error(const FracSeries& a, const FracSeries& b);

/// Max |coefficient| over exponents <= upto.
double series_max_abs(const FracSeries& s, double upto = FracSeries::kNoTruncation);

}  // namespace peo
