#include "peo/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "peo/errors.hpp"

namespace peo {

WeylElement WeylElement::scalar(const GaussianRational& c) { return monomial(0, 0, c); }

WeylElement WeylElement::monomial(int x_pow, int d_pow, const GaussianRational& c) {
  WeylElement e;
  e.add_term(x_pow, d_pow, c);
  return e;
}

WeylElement WeylElement::multiplication(const Polynomial& f) {
  WeylElement e;
  for (int k = 0; k <= f.degree(); ++k) e.add_term(k, 0, f.coeff(k));
  return e;
}

GaussianRational WeylElement::coefficient(int x_pow, int d_pow) const {
  auto it = terms_.find({x_pow, d_pow});
  return it == terms_.end() ? GaussianRational() : it->second;
}

void WeylElement::add_term(int x_pow, int d_pow, const GaussianRational& c) {
  if (x_pow < 0 || d_pow < 0) throw DomainError("WeylElement: negative power");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({x_pow, d_pow}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement out;
  for (const auto& [ka, ca] : a.terms_) {
    const auto [xa, da] = ka;
    for (const auto& [kb, cb] : b.terms_) {
      const auto [xb, db] = kb;
      const GaussianRational c = ca * cb;
      // d^da x^xb = sum_k k! C(da,k) C(xb,k) x^{xb-k} d^{da-k}
      BigInt w = 1;
      for (int k = 0; k <= std::min(da, xb); ++k) {
        if (k > 0) w = w * (da - k + 1) * (xb - k + 1) / k;
        out.add_term(xa + xb - k, da + db - k, c * GaussianRational(Rational(w)));
      }
    }
  }
  return out;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << peo::to_string(c) << ")";
    if (k.first > 0) os << "*x^" << k.first;
    if (k.second > 0) os << "*d^" << k.second;
  }
  return os.str();
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) { return a * b; }

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

Polynomial apply(const WeylElement& op, const Polynomial& p) {
  const int n = p.degree();
  if (n < 0) return {};
  std::vector<GaussianRational> out;
  for (const auto& [k, c] : op.terms()) {
    const auto [xp, dp] = k;
    for (int j = dp; j <= n; ++j) {
      const GaussianRational& pj = p.coeffs()[j];
      if (pj.is_zero()) continue;
      BigInt falling = 1;  // j! / (j - dp)!
      for (int i = 0; i < dp; ++i) falling *= (j - i);
      const std::size_t idx = static_cast<std::size_t>(j - dp + xp);
      if (out.size() <= idx) out.resize(idx + 1);
      out[idx] += c * pj * GaussianRational(Rational(falling));
    }
  }
  return Polynomial(std::move(out));
}

// GradedOpSeries ------------------------------------------------------------

GradedOpSeries::GradedOpSeries(int order) {
  if (order < 0) throw DomainError("GradedOpSeries: negative order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

GradedOpSeries GradedOpSeries::identity(int order) {
  GradedOpSeries s(order);
  s.c_[0] = WeylElement::scalar(1);
  return s;
}

GradedOpSeries GradedOpSeries::term(const WeylElement& e, int degree, int order) {
  GradedOpSeries s(order);
  if (degree < 0) throw DomainError("GradedOpSeries::term: negative degree");
  if (degree <= order) s.c_[degree] = e;
  return s;
}

std::size_t GradedOpSeries::max_terms() const {
  std::size_t m = 0;
  for (const auto& e : c_) m = std::max(m, e.size());
  return m;
}

GradedOpSeries& GradedOpSeries::operator+=(const GradedOpSeries& o) {
  const int k = std::min(order(), o.order());
  c_.resize(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) c_[i] += o.c_[i];
  return *this;
}

GradedOpSeries& GradedOpSeries::operator-=(const GradedOpSeries& o) {
  const int k = std::min(order(), o.order());
  c_.resize(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) c_[i] -= o.c_[i];
  return *this;
}

GradedOpSeries& GradedOpSeries::operator*=(const GaussianRational& s) {
  for (auto& e : c_) e *= s;
  return *this;
}

GradedOpSeries operator*(const GradedOpSeries& a, const GradedOpSeries& b) {
  const int k = std::min(a.order(), b.order());
  GradedOpSeries out(k);
  for (int i = 0; i <= k; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= k; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

std::vector<Polynomial> GradedOpSeries::apply(const Polynomial& p) const {
  std::vector<Polynomial> out;
  out.reserve(c_.size());
  for (const auto& e : c_) out.push_back(peo::apply(e, p));
  return out;
}

GradedOpSeries graded_exp(const GradedOpSeries& arg, int K) {
  if (K < 0 || K > kMaxGradedOrder)
    throw DomainError("graded_exp: order must be in [0, " + std::to_string(kMaxGradedOrder) + "]");
  if (!arg[0].is_zero()) throw DomainError("graded_exp: argument has a degree-0 part");
  if (arg.max_terms() > kMaxGradedTerms)
    throw DomainError("graded_exp: argument coefficient exceeds the term limit");
  GradedOpSeries a = arg * GradedOpSeries::identity(K);  // truncate to K
  GradedOpSeries result = GradedOpSeries::identity(a.order());
  GradedOpSeries power = GradedOpSeries::identity(a.order());
  // arg has valuation >= 1, so arg^n vanishes through degree K once n > K.
  for (int n = 1; n <= a.order(); ++n) {
    power = power * a;
    power *= GaussianRational(Rational(1, n));
    result += power;
  }
  return result;
}

GradedOpSeries graded_substitute(const Polynomial& f, const GradedOpSeries& Z) {
  GradedOpSeries acc(Z.order());
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * Z;
    acc += GradedOpSeries::term(WeylElement::scalar(f.coeff(k)), 0, Z.order());
  }
  return acc;
}

// Zassenhaus ----------------------------------------------------------------

namespace {

GradedOpSeries exp_term(const WeylElement& e, int degree, int K) {
  return graded_exp(GradedOpSeries::term(e, degree, K), K);
}

}  // namespace

std::vector<WeylElement> zassenhaus_coeffs(const WeylElement& X, const WeylElement& Y, int n_max,
                                           int K, ZassenhausForm form) {
  if (n_max < 2 || n_max > K) throw DomainError("zassenhaus: need 2 <= n <= K");
  std::vector<WeylElement> C(static_cast<std::size_t>(n_max) + 1);
  const GradedOpSeries full = exp_term(X + Y, 1, K);
  GradedOpSeries P(K);
  if (form == ZassenhausForm::Left) {
    P = exp_term(-Y, 1, K) * exp_term(-X, 1, K) * full;
  } else {
    P = full * exp_term(-X, 1, K) * exp_term(-Y, 1, K);
  }
  for (int n = 2; n <= n_max; ++n) {
    C[n] = P[n];
    if (n == n_max) break;
    const GradedOpSeries strip = exp_term(-C[n], n, K);
    P = form == ZassenhausForm::Left ? strip * P : P * strip;
  }
  return C;
}

WeylElement zassenhaus_coeff(const WeylElement& X, const WeylElement& Y, int n, int K,
                             ZassenhausForm form) {
  return zassenhaus_coeffs(X, Y, n, K, form)[n];
}

GradedSides crofton_glaisher_sides(int m, const Polynomial& f, const Polynomial& p, int K) {
  if (m < 1) throw DomainError("crofton_glaisher: m must be >= 1");
  const GradedOpSeries E = exp_term(WeylElement::monomial(0, m), 1, K);
  const GradedOpSeries F = GradedOpSeries::term(WeylElement::multiplication(f), 0, K);
  GradedOpSeries Z = GradedOpSeries::term(WeylElement::x(), 0, K);
  Z += GradedOpSeries::term(WeylElement::monomial(0, m - 1, GaussianRational(m)), 1, K);
  const GradedOpSeries lhs = E * F;
  const GradedOpSeries rhs = graded_substitute(f, Z) * E;
  return {lhs.apply(p), rhs.apply(p)};
}

bool crofton_glaisher_check(int m, const Polynomial& f, const Polynomial& p, int K) {
  const auto s = crofton_glaisher_sides(m, f, p, K);
  return s.lhs == s.rhs;
}

bool weyl_drift_check(const Rational& a, const Rational& b, int K) {
  const WeylElement X = WeylElement::x() * GaussianRational(-a);
  const WeylElement Y = WeylElement::d() * GaussianRational(b);
  const GradedOpSeries lhs = exp_term(X + Y, 1, K);
  const WeylElement half = commutator(X, Y) * GaussianRational(Rational(-1, 2));
  const GradedOpSeries rhs = exp_term(half, 2, K) * exp_term(X, 1, K) * exp_term(Y, 1, K);
  return lhs == rhs;
}

bool ChainCheck::all() const {
  return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

ChainCheck zassenhaus_chain_check(const Rational& kappa, const Rational& lambda, int K) {
  const GaussianRational k(kappa), l(lambda);
  const WeylElement A = WeylElement::monomial(0, 2, l);
  const WeylElement B = WeylElement::monomial(1, 0, k);
  const WeylElement AB = commutator(A, B);

  std::vector<GradedOpSeries> steps;
  steps.push_back(exp_term(A + B, 1, K));

  const WeylElement c3 = (commutator(A, AB) + commutator(B, AB) * GaussianRational(2)) *
                         GaussianRational(Rational(1, 6));
  steps.push_back(exp_term(c3, 3, K) * exp_term(AB * GaussianRational(Rational(1, 2)), 2, K) *
                  exp_term(B, 1, K) * exp_term(A, 1, K));

  const GaussianRational k2l = k * k * l;
  const WeylElement front = WeylElement::scalar(k2l * GaussianRational(Rational(-2, 3)));
  const WeylElement kld = WeylElement::monomial(0, 1, k * l);
  steps.push_back(exp_term(front, 3, K) * exp_term(kld, 2, K) * exp_term(B, 1, K) *
                  exp_term(A, 1, K));

  GradedOpSeries shifted = GradedOpSeries::term(B, 1, K);
  shifted += GradedOpSeries::term(WeylElement::scalar(k * k * l), 3, K);
  steps.push_back(exp_term(front, 3, K) * graded_exp(shifted, K) * exp_term(kld, 2, K) *
                  exp_term(A, 1, K));

  const WeylElement third = WeylElement::scalar(k2l * GaussianRational(Rational(1, 3)));
  steps.push_back(exp_term(third, 3, K) * exp_term(B, 1, K) * exp_term(kld, 2, K) *
                  exp_term(A, 1, K));

  ChainCheck out;
  for (const auto& s : steps) out.equal.push_back(s == steps[0]);
  return out;
}

bool berry_graded_check(const Rational& a, const Rational& b, int K) {
  const WeylElement X = WeylElement::monomial(0, 2, GaussianRational(a));
  const WeylElement Y = WeylElement::monomial(1, 0, GaussianRational(b));
  const GradedOpSeries lhs = exp_term(X + Y, 1, K);
  GradedOpSeries arg = GradedOpSeries::term(X, 1, K);
  arg += GradedOpSeries::term(WeylElement::monomial(0, 1, GaussianRational(-a * b)), 2, K);
  arg += GradedOpSeries::term(WeylElement::scalar(GaussianRational(a * b * b / 3)), 3, K);
  const GradedOpSeries rhs = graded_exp(arg, K) * exp_term(Y, 1, K);
  return lhs == rhs;
}

bool berry_zassenhaus_graded_check(const Rational& a, const Rational& b, int K) {
  const WeylElement X = WeylElement::monomial(0, 2, GaussianRational(a));
  const WeylElement Y = WeylElement::monomial(1, 0, GaussianRational(b));
  const WeylElement XY = commutator(X, Y);
  const WeylElement c3 = commutator(Y, XY) * GaussianRational(Rational(1, 3)) +
                         commutator(X, XY) * GaussianRational(Rational(1, 6));
  const GradedOpSeries lhs = exp_term(X + Y, 1, K);
  const GradedOpSeries rhs = exp_term(X, 1, K) * exp_term(Y, 1, K) *
                             exp_term(XY * GaussianRational(Rational(-1, 2)), 2, K) *
                             exp_term(c3, 3, K);
  return lhs == rhs;
}

// Floating-point realisation for the Berry check ------------------------------

namespace {

struct NumTerm {
  int x_pow;
  int d_pow;
  double c;
};
using NumOp = std::vector<NumTerm>;
using NumPoly = std::vector<double>;  // index = degree, fixed length cap + 1

NumPoly num_apply(const NumOp& op, const NumPoly& p) {
  NumPoly out(p.size(), 0.0);
  const int cap = static_cast<int>(p.size()) - 1;
  for (const auto& t : op) {
    for (int j = t.d_pow; j <= cap; ++j) {
      if (p[j] == 0.0) continue;
      double falling = 1.0;
      for (int i = 0; i < t.d_pow; ++i) falling *= (j - i);
      const int idx = j - t.d_pow + t.x_pow;
      if (idx <= cap) out[idx] += t.c * falling * p[j];
    }
  }
  return out;
}

NumPoly num_exp_apply(const NumOp& op, const NumPoly& p, int N) {
  NumPoly sum = p;
  NumPoly term = p;
  for (int n = 1; n < N; ++n) {
    term = num_apply(op, term);
    for (auto& v : term) v /= n;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
  }
  return sum;
}

struct BerryNumeric {
  NumOp X, Y, berry, zas_d, zas_c;
};

BerryNumeric berry_ops(double a, double b) {
  BerryNumeric o;
  o.X = {{0, 2, a}};
  o.Y = {{1, 0, b}};
  o.berry = {{0, 0, a * b * b / 3.0}, {0, 1, -a * b}, {0, 2, a}};
  o.zas_d = {{0, 1, -a * b}};
  o.zas_c = {{0, 0, -2.0 * a * b * b / 3.0}};
  return o;
}

template <class F>
ResidualCheck compare_on_monomials(int deg, int N, double tol, F&& sides) {
  if (deg < 0 || N < 1) throw DomainError("berry check: need deg >= 0 and N >= 1");
  const int cap = deg + N + 1;
  const int compare_to = deg + N / 2;
  double worst = 0.0;
  for (int k = 0; k <= deg; ++k) {
    NumPoly p(static_cast<std::size_t>(cap) + 1, 0.0);
    p[k] = 1.0;
    const auto [l, r] = sides(p);
    for (int i = 0; i <= compare_to; ++i) worst = std::max(worst, std::abs(l[i] - r[i]));
  }
  return {worst, worst <= tol};
}

}  // namespace

ResidualCheck berry_rule_check(const Rational& a, const Rational& b, int deg, int N, double tol) {
  const auto o = berry_ops(to_double(a), to_double(b));
  NumOp sum = o.X;
  sum.insert(sum.end(), o.Y.begin(), o.Y.end());
  return compare_on_monomials(deg, N, tol, [&](const NumPoly& p) {
    return std::pair{num_exp_apply(sum, p, N), num_exp_apply(o.berry, num_exp_apply(o.Y, p, N), N)};
  });
}

ResidualCheck berry_vs_zassenhaus(const Rational& a, const Rational& b, int deg, int N, double tol) {
  const auto o = berry_ops(to_double(a), to_double(b));
  return compare_on_monomials(deg, N, tol, [&](const NumPoly& p) {
    NumPoly z = num_exp_apply(o.zas_c, p, N);
    z = num_exp_apply(o.zas_d, z, N);
    z = num_exp_apply(o.Y, z, N);
    z = num_exp_apply(o.X, z, N);
    return std::pair{num_exp_apply(o.berry, num_exp_apply(o.Y, p, N), N), z};
  });
}

}  // namespace peo
