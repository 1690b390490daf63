#pragma once

#include <map>
#include <vector>

#include "peo/frac_series.hpp"

namespace peo {

/// F(x, t) = sum c_{k,g} x^k t^g, stored as one FracSeries in t per x-degree.
class BivariateSeries {
 public:
  struct Term {
    int x_degree;
    double t_exponent;
    cplx coeff;
  };

  BivariateSeries() = default;
  explicit BivariateSeries(const std::vector<Term>& terms,
                           double t_truncation = FracSeries::kNoTruncation);
  explicit BivariateSeries(std::map<int, FracSeries> by_x_degree);

  const std::map<int, FracSeries>& by_x_degree() const { return rows_; }
  std::vector<Term> terms() const;
  cplx coefficient(int x_degree, double t_exponent) const;
  /// Largest x-degree present, -1 when empty.
  int x_degree() const;
  bool empty() const { return rows_.empty(); }

  cplx evaluate(cplx x, double t) const;
  /// Max |coefficient| over t exponents <= upto.
  double max_abs(double upto = FracSeries::kNoTruncation) const;

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(cplx s, const BivariateSeries& a);

 private:
  std::map<int, FracSeries> rows_;
};

/// Termwise operators.
BivariateSeries times_x(const BivariateSeries& s);
BivariateSeries x_derivative(const BivariateSeries& s);
/// Applies a t-series operator to every x-degree row.
BivariateSeries map_rows(const BivariateSeries& s, FracSeries (*op)(const FracSeries&));
BivariateSeries laguerre_t_derivative(const BivariateSeries& s);
BivariateSeries rl_t_derivative(const BivariateSeries& s, double mu);

}  // namespace peo
