#pragma once

#include <string>
#include <vector>

#include "peo/gamma.hpp"
#include "peo/rational.hpp"

namespace peo {

/// Univariate polynomial in x with exact Gaussian-rational coefficients.
/// coeffs()[k] is the coefficient of x^k; trailing zeros are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);

  static Polynomial constant(const GaussianRational& c);
  static Polynomial monomial(int k, const GaussianRational& c = GaussianRational(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational coeff(int k) const;

  Polynomial derivative() const;
  cplx evaluate(cplx x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }
  friend Polynomial operator*(const GaussianRational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// H_n^(3)(x, y) as an exact polynomial in x for a fixed value of y:
/// n! sum_{r <= n/3} x^{n-3r} y^r / ((n-3r)! r!).
Polynomial hermite3_polynomial(int n, const GaussianRational& y);

}  // namespace peo
