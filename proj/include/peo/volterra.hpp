#pragma once

#include <Eigen/Dense>
#include <vector>

#include "peo/exact_series.hpp"
#include "peo/frac_series.hpp"

namespace peo {

/// Iterates Y_0, Y_1, ... of a Volterra-Neumann expansion and their sum
/// truncated at the requested order.
template <class Series>
struct VNState {
  std::vector<Series> iterates;
  Series partial_sum;
};

// Laguerre: l_d_t Y = f Y, Y(0) = Y0, iterated as
// Y_{n+1} = int_0^t dt1/t1 int_0^t1 f Y_n dt2.

/// Exact path (integer exponents, rational coefficients). f must have no
/// negative exponents. Stops after n_iter iterates or once an iterate's
/// valuation exceeds `order`.
VNState<ExactSeries> laguerre_vn_solve(const ExactSeries& f, const Rational& Y0, int n_iter, int order);
/// Floating-point path, exponents of f > -1.
VNState<FracSeries> laguerre_vn_solve(const FracSeries& f, cplx Y0, int n_iter, double order);

/// S - l_d_t^{-1}[f S] - Y0 through `order`; identically zero for a converged state.
ExactSeries laguerre_vn_residual(const VNState<ExactSeries>& st, const ExactSeries& f, const Rational& Y0);

/// n a_r for r <= R from the triple recursion with 1 a_r = 1/(2r)!.
std::vector<Rational> cos_recursion_coeffs(int n, int R);
/// Y_n = sum_{r <= R} (-1)^r t^{2r+n} n a_r / (2r+n)^2.
ExactSeries cos_recursion_iterate(int n, int R);
/// cos t through t^order as an exact series.
ExactSeries cos_series_exact(int order);

// Fractional: Y_{n+1} = rl_integral(f Y_n, alpha), alpha in (0, 1].

VNState<FracSeries> fractional_vn_solve(const FracSeries& f, double alpha, cplx Y0, int n_iter,
                                        double order);
/// S - rl_integral(f S, alpha) - Y0.
FracSeries fractional_vn_residual(const VNState<FracSeries>& st, const FracSeries& f, double alpha,
                                  cplx Y0);
/// d_t^alpha S - f S - Y0 t^{-alpha}/Gamma(1-alpha), for alpha in (0, 1).
FracSeries fractional_vn_differential_residual(const VNState<FracSeries>& st, const FracSeries& f,
                                               double alpha, cplx Y0);
/// (-t^{alpha+1}/Gamma(alpha))^n prod_{k<n} B(k(alpha+1)+2, alpha), for f = -t, Y0 = 1.
double fractional_vn_monomial_closed_form(int n, double alpha, double t);

/// Matrix-valued series sum_g C_g t^g; same merge and truncation rules as FracSeries.
class MatrixSeries {
 public:
  struct Term {
    double exponent;
    Eigen::MatrixXcd coeff;
  };

  MatrixSeries() = default;
  MatrixSeries(int dim, std::vector<Term> terms, double truncation_order = FracSeries::kNoTruncation);
  static MatrixSeries identity(int dim, double truncation_order = FracSeries::kNoTruncation);
  /// A + B t + C t^2 + ... from a list of coefficient matrices.
  static MatrixSeries polynomial(const std::vector<Eigen::MatrixXcd>& coeffs,
                                 double truncation_order = FracSeries::kNoTruncation);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  double truncation_order() const { return order_; }
  double valuation() const;
  Eigen::MatrixXcd coefficient(double exponent) const;
  FracSeries entry(int i, int j) const;
  /// Requires t > 0 when any exponent is negative.
  Eigen::MatrixXcd eval(double t) const;
  MatrixSeries with_truncation(double order) const;

  friend MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b);
  friend MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b);
  /// Matrix product with exponent addition; a stays on the left.
  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);

 private:
  int dim_ = 0;
  std::vector<Term> terms_;
  double order_ = FracSeries::kNoTruncation;
};

/// Termwise c t^g -> c Gamma(g+1)/Gamma(g+alpha+1) t^{g+alpha}.
MatrixSeries rl_integral(const MatrixSeries& s, double alpha);

/// Canonical Dyson series: U_0 = 1, U_{n+1} = rl_integral(M U_n, alpha),
/// M on the left (latest time). Truncated at `order`.
VNState<MatrixSeries> dyson_evolution_operator(const MatrixSeries& M, double alpha, int n_iter,
                                               double order);

/// The nesting as displayed, with every kernel (t - t_k)^{alpha-1} taken at
/// the outer time t. For fixed t this is the time-ordered exponential of
/// M(tau)(t-tau)^{alpha-1}/Gamma(alpha) on [0, t]. Evaluated through n_iter
/// iterates on a uniform grid in w = (t - tau)^alpha with cumulative trapezoid.
/// Coincides with the canonical series for alpha = 1.
Eigen::MatrixXcd dyson_literal_value(const MatrixSeries& M, double alpha, double t, int n_iter,
                                     int grid = 20000);

/// Independent oracle for alpha = 1: fourth-order Magnus steps for U' = M(t) U.
Eigen::MatrixXcd magnus4_propagator(const MatrixSeries& M, double t, int steps);

}  // namespace peo
