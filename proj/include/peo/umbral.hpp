#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "peo/check.hpp"
#include "peo/gamma.hpp"
#include "peo/rational.hpp"

namespace peo {

// Umbral image evaluation. A formal integration operator I maps
//   I(u^a) = Gamma(a)   (a not in {0, -1, -2, ...})
//   I(v^b) = 1/Gamma(b)
// and factorizes over monomials whose variable supports are disjoint.

enum class VarKind : std::uint8_t { U, V };

struct Var {
  VarKind kind;
  std::uint32_t id;
};

/// Hands out fresh variable ids for one expression. u and v ids come from a
/// single counter, so they never collide.
class VarAllocator {
 public:
  Var fresh_u() { return {VarKind::U, next_++}; }
  Var fresh_v() { return {VarKind::V, next_++}; }

 private:
  std::uint32_t next_ = 0;
};

/// coeff * prod_u u^{a_u} * prod_v v^{b_v}. Exponents equal to 0 mean the
/// variable is absent and are dropped.
class UmbralTerm {
 public:
  UmbralTerm() = default;
  explicit UmbralTerm(cplx coeff) : coeff_(coeff) {}
  UmbralTerm(cplx coeff, std::map<std::uint32_t, cplx> u_exps, std::map<std::uint32_t, cplx> v_exps);

  /// Multiply by var^exponent (exponents add).
  UmbralTerm& times(Var var, cplx exponent);
  UmbralTerm& scale(cplx s) {
    coeff_ *= s;
    return *this;
  }

  cplx coeff() const { return coeff_; }
  const std::map<std::uint32_t, cplx>& u_exps() const { return u_; }
  const std::map<std::uint32_t, cplx>& v_exps() const { return v_; }

  /// True when no variable id appears in both terms.
  bool disjoint_from(const UmbralTerm& other) const;

  friend UmbralTerm operator*(const UmbralTerm& a, const UmbralTerm& b);

 private:
  void normalize();

  cplx coeff_{1.0, 0.0};
  std::map<std::uint32_t, cplx> u_;
  std::map<std::uint32_t, cplx> v_;
};

/// Ordered family of umbral terms (the natural series order matters for the
/// summability test).
struct UmbralSum {
  std::vector<UmbralTerm> terms;
};

/// I(term) = coeff * prod Gamma(a_u) * prod 1/Gamma(b_v).
/// Throws PoleError if a u-exponent is a non-positive integer.
cplx fio_eval(const UmbralTerm& term);

struct SummabilityReport {
  cplx value;
  double tail_bound;  // estimated |remainder|
  bool finite;        // fewer than 10 terms: plain finite sum
  bool summable;      // finite, or tail_bound <= rel_tol * max(1, |value|)
};

/// Sum of I over the family. Summation runs in descending-magnitude order;
/// the tail is estimated from a geometric fit (least-squares slope of
/// log|I(term)|) over the last ten non-zero terms in the supplied order and
/// must be below rel_tol * max(1, |sum|). Throws NonConvergenceError otherwise.
SummabilityReport fio_eval_series_report(const UmbralSum& s, double rel_tol = 1e-13);
cplx fio_eval_series(const UmbralSum& s, double rel_tol = 1e-13);

// Umbral images of the special functions (first `terms` terms).

/// le(x) = I(v e^{v x}) = sum_r x^r/r! I(v^{r+1}).
UmbralSum laguerre_exp_umbral(cplx x, int terms);
/// le_n^(m)(x) = I(v^{n+1} e^{x v^m}).
UmbralSum laguerre_e_nm_umbral(int n, int m, cplx x, int terms);
/// E_{a,b}(x) = I(v^b / (1 - x v^a)) = sum_r x^r I(v^{a r + b}).
UmbralSum mittag_leffler_umbral(double alpha, double beta, cplx x, int terms);

/// Laplace-type umbral form of the Mittag-Leffler function,
/// I(v^b int_0^inf e^{-s} e^{g(s) v^a x} ds).
enum class LaplaceForm {
  SDependent,  // g(s) = s: the s-integral realised as a u-variable, equals E_{a,b}
  Verbatim,    // g(s) = 1: s-integral is 1, gives sum_r x^r / (r! Gamma(a r + b))
};
UmbralSum mittag_leffler_laplace_umbral(double alpha, double beta, cplx x, int terms,
                                        LaplaceForm form);

/// pFq(a; b; z) = I(prod (u_i v_i)^{a_i} prod (u_j v_j)^{b_j} e^{z u_1..u_p v_{p+1}..v_{p+q}}).
UmbralSum hypergeometric_umbral(const std::vector<double>& a, const std::vector<double>& b, cplx z,
                                int terms);

// Composition laws.

/// (x (+)_l y)^n = sum_s C(n,s)^2 x^{n-s} y^s.
cplx laguerre_binomial_pow(int n, cplx x, cplx y);
/// The reshaped umbral form I(u v1 v2 (u (v1 x + v2 y))^n), expanded and evaluated.
cplx laguerre_binomial_umbral(int n, cplx x, cplx y);

/// (x (+)_{E_{a,b}} y)^n = sum_r C(n,r) Gamma(n a + b) x^r y^{n-r}
///                         / (Gamma(a r + b) Gamma(a (n-r) + b)), as printed.
/// Throws PoleError if any of the Gammas sits on a pole.
cplx ml_binomial_pow(double alpha, double beta, int n, cplx x, cplx y);

/// residual = |sum_{n<=N} (x (+)_l y)^n/(n!)^2 - le(x) le(y)|, pass = residual <= tol.
ResidualCheck laguerre_semigroup_check(cplx x, cplx y, int N, double tol = 1e-13);

/// Exact bivariate coefficients, keyed by (power of x, power of y).
using BivariateRational = std::map<std::pair<int, int>, Rational>;
/// le(x) le(y) through total degree n_max.
BivariateRational laguerre_product_coefficients(int n_max);
/// sum_n (x (+)_l y)^n / (n!)^2 through total degree n_max.
BivariateRational laguerre_binomial_series_coefficients(int n_max);

/// Coefficient of x^r y^k on both sides of the claimed Mittag-Leffler
/// multiplicative law:
///   product = 1 / (Gamma(a r + b) Gamma(a k + b))               [E(x) E(y)]
///   law     = [x^r y^k] (x (+)_E y)^{r+k} / Gamma(a (r+k) + b)  [E(x (+)_E y)]
/// The printed law carries an extra C(r+k, r), so ratio = law/product is
/// reported rather than assumed to be 1.
struct MlLawCoefficient {
  int r;
  int k;
  double product;
  double law;
  double ratio;
};
std::vector<MlLawCoefficient> ml_semigroup_comparison(double alpha, double beta, int n_max);

/// Numeric sides E(x) E(y) and sum_{n<=N} (x (+)_E y)^n / Gamma(a n + b).
struct MlLawNumeric {
  cplx product;
  cplx law;
};
MlLawNumeric ml_semigroup_numeric(double alpha, double beta, cplx x, cplx y, int N);

}  // namespace peo
