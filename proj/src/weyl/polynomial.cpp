#include "peo/polynomial.hpp"

#include <sstream>

namespace peo {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const GaussianRational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int k, const GaussianRational& c) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return c_[k];
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<int>(k));
  return Polynomial(std::move(d));
}

cplx Polynomial::evaluate(cplx x) const {
  cplx acc{0.0, 0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << peo::to_string(c_[k]) << ")";
    if (k > 0) os << "*x^" << k;
  }
  return os.str();
}

Polynomial hermite3_polynomial(int n, const GaussianRational& y) {
  if (n < 0) return {};
  const BigInt fn = big_factorial(n);
  std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
  GaussianRational ypow(1);
  for (int r = 0; 3 * r <= n; ++r) {
    const Rational w(fn, big_factorial(n - 3 * r) * big_factorial(r));
    c[n - 3 * r] += ypow * GaussianRational(w);
    ypow *= y;
  }
  return Polynomial(std::move(c));
}

}  // namespace peo
