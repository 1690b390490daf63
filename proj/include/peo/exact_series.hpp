#pragma once

#include <climits>
#include <map>

#include "peo/frac_series.hpp"
#include "peo/rational.hpp"

namespace peo {

/// Power series with integer exponents and exact rational coefficients.
/// Same truncation convention as FracSeries (inclusive bound, drop above).
class ExactSeries {
 public:
  static constexpr int kNoTruncation = INT_MAX;

  ExactSeries() = default;
  explicit ExactSeries(std::map<int, Rational> terms, int truncation_order = kNoTruncation);

  static ExactSeries monomial(int exponent, const Rational& c, int truncation_order = kNoTruncation);

  const std::map<int, Rational>& terms() const { return terms_; }
  int truncation_order() const { return order_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  /// Smallest exponent; INT_MAX when empty.
  int valuation() const;

  FracSeries to_frac() const;

  friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator*(const Rational& s, const ExactSeries& a);
  friend bool operator==(const ExactSeries& a, const ExactSeries& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, Rational> terms_;
  int order_ = kNoTruncation;
};

/// c t^n -> c t^{n+1}/(n+1)^2, n > -1.
ExactSeries laguerre_antiderivative(const ExactSeries& s);
/// c t^n -> c n^2 t^{n-1}.
ExactSeries laguerre_derivative(const ExactSeries& s);
/// c t^n -> c n t^{n-1}.
ExactSeries derivative(const ExactSeries& s);
/// Multiply by t^k.
ExactSeries shift(const ExactSeries& s, int k);

/// Coefficients of le(c t^m) = sum_r (c t^m)^r/(r!)^2 through t^order.
ExactSeries laguerre_exp_exact(const Rational& c, int m, int order);

}  // namespace peo
