#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "peo/check.hpp"
#include "peo/polynomial.hpp"
#include "peo/rational.hpp"

namespace peo {

// Exact Weyl algebra over x and d = d/dx, [d, x] = 1. Elements are kept in
// normal order: sum c_{a,b} x^a d^b.

class WeylElement {
 public:
  using Key = std::pair<int, int>;  // (x power, d power)

  WeylElement() = default;

  static WeylElement scalar(const GaussianRational& c);
  static WeylElement monomial(int x_pow, int d_pow, const GaussianRational& c = GaussianRational(1));
  static WeylElement x() { return monomial(1, 0); }
  static WeylElement d() { return monomial(0, 1); }
  /// Multiplication operator f(x).
  static WeylElement multiplication(const Polynomial& f);

  const std::map<Key, GaussianRational>& terms() const { return terms_; }
  GaussianRational coefficient(int x_pow, int d_pow) const;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int x_pow, int d_pow, const GaussianRational& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const GaussianRational& s);

  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator-(WeylElement a) { return a *= GaussianRational(-1); }
  friend WeylElement operator*(WeylElement a, const GaussianRational& s) { return a *= s; }
  friend WeylElement operator*(const GaussianRational& s, WeylElement a) { return a *= s; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Key, GaussianRational> terms_;
};

/// Normal-ordered product, using d^b x^c = sum_k k! C(b,k) C(c,k) x^{c-k} d^{b-k}.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// Exact action on a polynomial: x multiplies, d differentiates.
Polynomial apply(const WeylElement& op, const Polynomial& p);

/// Truncated series sum_{k <= order} s^k A_k in a formal grading parameter s.
class GradedOpSeries {
 public:
  explicit GradedOpSeries(int order);

  static GradedOpSeries identity(int order);
  /// s^degree * e, truncated at order.
  static GradedOpSeries term(const WeylElement& e, int degree, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const WeylElement& operator[](int k) const { return c_.at(k); }
  WeylElement& coeff(int k) { return c_.at(k); }
  /// Largest term count over all coefficients.
  std::size_t max_terms() const;

  GradedOpSeries& operator+=(const GradedOpSeries& o);
  GradedOpSeries& operator-=(const GradedOpSeries& o);
  GradedOpSeries& operator*=(const GaussianRational& s);

  friend GradedOpSeries operator+(GradedOpSeries a, const GradedOpSeries& b) { return a += b; }
  friend GradedOpSeries operator-(GradedOpSeries a, const GradedOpSeries& b) { return a -= b; }
  friend GradedOpSeries operator*(GradedOpSeries a, const GaussianRational& s) { return a *= s; }
  /// Cauchy product truncated at the smaller order.
  friend GradedOpSeries operator*(const GradedOpSeries& a, const GradedOpSeries& b);
  friend bool operator==(const GradedOpSeries& a, const GradedOpSeries& b) { return a.c_ == b.c_; }

  /// Coefficientwise action: result[k] = A_k p.
  std::vector<Polynomial> apply(const Polynomial& p) const;

 private:
  std::vector<WeylElement> c_;
};

/// Maximum grading order and coefficient size accepted by graded_exp.
inline constexpr int kMaxGradedOrder = 12;
inline constexpr std::size_t kMaxGradedTerms = 500;

/// exp(arg) = sum_n arg^n / n! through s-degree K. arg must have a zero
/// degree-0 coefficient. Throws DomainError on K > 12 or > 500-term coefficients.
GradedOpSeries graded_exp(const GradedOpSeries& arg, int K);

/// f(Z) for a polynomial f and graded operator Z, by Horner's scheme.
GradedOpSeries graded_substitute(const Polynomial& f, const GradedOpSeries& Z);

/// Zassenhaus coefficients.
///   Left:  e^{s(X+Y)} = e^{sX} e^{sY} e^{s^2 C_2} e^{s^3 C_3} ...
///   Right: e^{s(X+Y)} = ... e^{s^3 C^_3} e^{s^2 C^_2} e^{sY} e^{sX}
/// C_n is the s^n coefficient of e^{-s^{n-1} C_{n-1}} ... e^{-sY} e^{-sX} e^{s(X+Y)}
/// (mirrored for the right form). Requires 2 <= n <= K.
enum class ZassenhausForm { Left, Right };
WeylElement zassenhaus_coeff(const WeylElement& X, const WeylElement& Y, int n, int K,
                             ZassenhausForm form = ZassenhausForm::Left);
/// All coefficients C_2..C_n_max in one pass; entries 0 and 1 are zero.
std::vector<WeylElement> zassenhaus_coeffs(const WeylElement& X, const WeylElement& Y, int n_max,
                                           int K, ZassenhausForm form = ZassenhausForm::Left);

/// Both sides of e^{s d^m} f(x) p = f(x + m s d^{m-1}) e^{s d^m} p, per s-degree.
struct GradedSides {
  std::vector<Polynomial> lhs;
  std::vector<Polynomial> rhs;
};
GradedSides crofton_glaisher_sides(int m, const Polynomial& f, const Polynomial& p, int K);
bool crofton_glaisher_check(int m, const Polynomial& f, const Polynomial& p, int K);

/// Weyl rule for the drift pair X = -a x, Y = b d:
/// e^{s(X+Y)} == e^{-s^2 [X,Y]/2} e^{sX} e^{sY} exactly through degree K.
bool weyl_drift_check(const Rational& a, const Rational& b, int K);

/// The chain e^{A+B} with A = l d^2, B = k x (both degree 1):
///   step 0: e^{s(A+B)}
///   step 1: e^{s^3 ([A,[A,B]] + 2[B,[A,B]])/6} e^{s^2 [A,B]/2} e^{sB} e^{sA}
///   step 2: e^{-2/3 s^3 k^2 l} e^{s^2 k l d} e^{s k x} e^{s l d^2}
///   step 3: e^{-2/3 s^3 k^2 l} e^{s k (x + s^2 k l)} e^{s^2 k l d} e^{s l d^2}
///   step 4: e^{s^3 k^2 l / 3} e^{s k x} e^{s^2 k l d} e^{s l d^2}
/// equal[i] reports step i == step 0 through degree K.
struct ChainCheck {
  std::vector<bool> equal;
  bool all() const;
};
ChainCheck zassenhaus_chain_check(const Rational& kappa, const Rational& lambda, int K);

// Berry-type rule for X = a d^2, Y = b x.

/// Graded form: e^{s(X+Y)} == e^{s^3 a b^2/3 - s^2 a b d + s a d^2} e^{s b x}, exact through K.
bool berry_graded_check(const Rational& a, const Rational& b, int K);
/// Zassenhaus route: e^{s(X+Y)} == e^{sX} e^{sY} e^{-s^2 [X,Y]/2} e^{s^3 ([Y,[X,Y]]/3 + [X,[X,Y]]/6)}.
bool berry_zassenhaus_graded_check(const Rational& a, const Rational& b, int K);

/// Floating-point check at s = 1. Every exponential is summed to N terms on
/// coefficient vectors capped at degree deg + N + 1; the residual is the
/// largest coefficient difference up to degree deg + N/2 over p = x^k, k <= deg.
/// Documented range: |a|, |b| <= 0.2, N >= 30.
ResidualCheck berry_rule_check(const Rational& a, const Rational& b, int deg, int N, double tol);
/// Same comparison between the Berry right-hand side and the Zassenhaus route
/// e^{a d^2} e^{b x} e^{-a b d} e^{-2 a b^2/3}.
ResidualCheck berry_vs_zassenhaus(const Rational& a, const Rational& b, int deg, int N, double tol);

}  // namespace peo
