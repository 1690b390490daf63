#include "peo/umbral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "peo/errors.hpp"
#include "peo/special_functions.hpp"

namespace peo {
namespace {

void add_exponent(std::map<std::uint32_t, cplx>& m, std::uint32_t id, cplx e) {
  m[id] += e;
}

void drop_zeros(std::map<std::uint32_t, cplx>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == cplx{0.0, 0.0}; });
}

cplx ipow(cplx z, int n) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace

UmbralTerm::UmbralTerm(cplx coeff, std::map<std::uint32_t, cplx> u_exps,
                       std::map<std::uint32_t, cplx> v_exps)
    : coeff_(coeff), u_(std::move(u_exps)), v_(std::move(v_exps)) {
  normalize();
}

void UmbralTerm::normalize() {
  drop_zeros(u_);
  drop_zeros(v_);
  for (const auto& [id, e] : u_) {
    if (v_.count(id)) throw DomainError("UmbralTerm: id " + std::to_string(id) + " is both u and v");
    if (is_gamma_pole(e))
      throw PoleError("UmbralTerm: u-exponent " + std::to_string(e.real()) +
                      " is a non-positive integer");
  }
}

UmbralTerm& UmbralTerm::times(Var var, cplx exponent) {
  add_exponent(var.kind == VarKind::U ? u_ : v_, var.id, exponent);
  normalize();
  return *this;
}

bool UmbralTerm::disjoint_from(const UmbralTerm& other) const {
  auto in = [](const std::map<std::uint32_t, cplx>& m, std::uint32_t id) { return m.count(id) > 0; };
  for (const auto& kv : u_)
    if (in(other.u_, kv.first) || in(other.v_, kv.first)) return false;
  for (const auto& kv : v_)
    if (in(other.u_, kv.first) || in(other.v_, kv.first)) return false;
  return true;
}

UmbralTerm operator*(const UmbralTerm& a, const UmbralTerm& b) {
  UmbralTerm r = a;
  r.coeff_ *= b.coeff_;
  for (const auto& [id, e] : b.u_) add_exponent(r.u_, id, e);
  for (const auto& [id, e] : b.v_) add_exponent(r.v_, id, e);
  r.normalize();
  return r;
}

cplx fio_eval(const UmbralTerm& term) {
  cplx value = term.coeff();
  for (const auto& [id, e] : term.u_exps()) value *= gamma(e);
  for (const auto& [id, e] : term.v_exps()) value *= recip_gamma(e);
  if (std::isfinite(value.real()) && std::isfinite(value.imag())) return value;

  // Overflow in the intermediate Gammas: redo in log space (real exponents only).
  if (term.coeff() == cplx(0.0)) return 0.0;
  double log_mag = std::log(std::abs(term.coeff()));
  int sign = 1;
  for (const auto& [id, e] : term.u_exps()) {
    if (e.imag() != 0.0) return value;
    int s = 1;
    log_mag += lgamma_abs(e.real(), &s);
    sign *= s;
  }
  for (const auto& [id, e] : term.v_exps()) {
    if (e.imag() != 0.0) return value;
    if (is_gamma_pole(e)) return 0.0;
    int s = 1;
    log_mag -= lgamma_abs(e.real(), &s);
    sign *= s;
  }
  return term.coeff() / std::abs(term.coeff()) * (sign * std::exp(log_mag));
}

SummabilityReport fio_eval_series_report(const UmbralSum& s, double rel_tol) {
  std::vector<cplx> values;
  values.reserve(s.terms.size());
  for (const auto& t : s.terms) values.push_back(fio_eval(t));

  std::vector<cplx> sorted = values;
  std::sort(sorted.begin(), sorted.end(),
            [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
  cplx sum{0.0, 0.0};
  for (cplx v : sorted) sum += v;

  constexpr std::size_t kWindow = 10;
  if (values.size() < kWindow) return {sum, 0.0, true, true};

  std::vector<std::pair<double, double>> pts;  // (index, log|value|)
  for (std::size_t i = values.size() - kWindow; i < values.size(); ++i) {
    const double m = std::abs(values[i]);
    if (m > 0.0) pts.emplace_back(static_cast<double>(i), std::log(m));
  }
  double tail = 0.0;
  if (pts.size() >= 2) {
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= pts.size();
    my /= pts.size();
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    const double ratio = std::exp(sxy / sxx);
    const double last = std::exp(pts.back().second);
    tail = ratio < 1.0 ? last * ratio / (1.0 - ratio) : HUGE_VAL;
  }
  return {sum, tail, false, tail <= rel_tol * std::max(1.0, std::abs(sum))};
}

cplx fio_eval_series(const UmbralSum& s, double rel_tol) {
  const auto report = fio_eval_series_report(s, rel_tol);
  if (!report.summable)
    throw NonConvergenceError("fio_eval_series: family not summable (tail bound " +
                              std::to_string(report.tail_bound) + ")");
  return report.value;
}

UmbralSum laguerre_exp_umbral(cplx x, int terms) { return laguerre_e_nm_umbral(0, 1, x, terms); }

UmbralSum laguerre_e_nm_umbral(int n, int m, cplx x, int terms) {
  VarAllocator alloc;
  const Var v = alloc.fresh_v();
  UmbralSum s;
  cplx c{1.0, 0.0};
  for (int r = 0; r < terms; ++r) {
    s.terms.push_back(UmbralTerm(c).times(v, static_cast<double>(n + 1 + m * r)));
    c *= x / (r + 1.0);
  }
  return s;
}

UmbralSum mittag_leffler_umbral(double alpha, double beta, cplx x, int terms) {
  VarAllocator alloc;
  const Var v = alloc.fresh_v();
  UmbralSum s;
  cplx c{1.0, 0.0};
  for (int r = 0; r < terms; ++r) {
    s.terms.push_back(UmbralTerm(c).times(v, alpha * r + beta));
    c *= x;
  }
  return s;
}

UmbralSum mittag_leffler_laplace_umbral(double alpha, double beta, cplx x, int terms,
                                        LaplaceForm form) {
  VarAllocator alloc;
  const Var v = alloc.fresh_v();
  const Var u = alloc.fresh_u();
  UmbralSum s;
  cplx c{1.0, 0.0};  // x^r / r!
  for (int r = 0; r < terms; ++r) {
    UmbralTerm t(c);
    t.times(v, alpha * r + beta);
    // int_0^inf e^{-s} s^r ds = I(u^{r+1}); the verbatim form has no s^r.
    if (form == LaplaceForm::SDependent) t.times(u, static_cast<double>(r + 1));
    s.terms.push_back(t);
    c *= x / (r + 1.0);
  }
  return s;
}

UmbralSum hypergeometric_umbral(const std::vector<double>& a, const std::vector<double>& b, cplx z,
                                int terms) {
  VarAllocator alloc;
  std::vector<Var> ua, va, ub, vb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ua.push_back(alloc.fresh_u());
    va.push_back(alloc.fresh_v());
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    ub.push_back(alloc.fresh_u());
    vb.push_back(alloc.fresh_v());
  }
  UmbralSum s;
  cplx c{1.0, 0.0};  // z^n / n!
  for (int n = 0; n < terms; ++n) {
    UmbralTerm t(c);
    // (u_i v_i)^{a_i} times (u_i)^n from the exponential; (u_j v_j)^{b_j} times v_j^n.
    for (std::size_t i = 0; i < a.size(); ++i) t.times(ua[i], a[i] + n).times(va[i], a[i]);
    for (std::size_t j = 0; j < b.size(); ++j) t.times(ub[j], b[j]).times(vb[j], b[j] + n);
    s.terms.push_back(t);
    c *= z / (n + 1.0);
  }
  return s;
}

cplx laguerre_binomial_pow(int n, cplx x, cplx y) {
  if (n < 0) throw DomainError("laguerre_binomial_pow: n must be >= 0");
  cplx sum{0.0, 0.0};
  for (int s = 0; s <= n; ++s) {
    const double c = to_double(Rational(big_binomial(n, s)));
    sum += c * c * ipow(x, n - s) * ipow(y, s);
  }
  return sum;
}

cplx laguerre_binomial_umbral(int n, cplx x, cplx y) {
  if (n < 0) throw DomainError("laguerre_binomial_umbral: n must be >= 0");
  VarAllocator alloc;
  const Var u = alloc.fresh_u();
  const Var v1 = alloc.fresh_v();
  const Var v2 = alloc.fresh_v();
  // u v1 v2 (u (v1 x + v2 y))^n = sum_r C(n,r) x^r y^{n-r} u^{n+1} v1^{r+1} v2^{n-r+1}
  UmbralSum s;
  for (int r = 0; r <= n; ++r) {
    const double c = to_double(Rational(big_binomial(n, r)));
    UmbralTerm t(c * ipow(x, r) * ipow(y, n - r));
    t.times(u, n + 1.0).times(v1, r + 1.0).times(v2, n - r + 1.0);
    s.terms.push_back(t);
  }
  return fio_eval_series(s);
}

cplx ml_binomial_pow(double alpha, double beta, int n, cplx x, cplx y) {
  if (!(alpha > 0.0)) throw DomainError("ml_binomial_pow: alpha must be > 0");
  if (n < 0) throw DomainError("ml_binomial_pow: n must be >= 0");
  const double top = gamma(n * alpha + beta);
  cplx sum{0.0, 0.0};
  for (int r = 0; r <= n; ++r) {
    const double c = to_double(Rational(big_binomial(n, r)));
    const double den = gamma(alpha * r + beta) * gamma(alpha * (n - r) + beta);
    sum += c * top * ipow(x, r) * ipow(y, n - r) / den;
  }
  return sum;
}

ResidualCheck laguerre_semigroup_check(cplx x, cplx y, int N, double tol) {
  cplx lhs{0.0, 0.0};
  for (int n = 0; n <= N; ++n) {
    const double f = factorial(n);
    lhs += laguerre_binomial_pow(n, x, y) / (f * f);
  }
  const cplx rhs = laguerre_exp(x).value * laguerre_exp(y).value;
  const double residual = std::abs(lhs - rhs);
  return {residual, residual <= tol};
}

BivariateRational laguerre_product_coefficients(int n_max) {
  BivariateRational out;
  for (int r = 0; r <= n_max; ++r)
    for (int k = 0; r + k <= n_max; ++k) {
      const BigInt fr = big_factorial(r);
      const BigInt fk = big_factorial(k);
      out[{r, k}] = Rational(1) / Rational(fr * fr * fk * fk);
    }
  return out;
}

BivariateRational laguerre_binomial_series_coefficients(int n_max) {
  BivariateRational out;
  for (int n = 0; n <= n_max; ++n) {
    const BigInt fn = big_factorial(n);
    for (int s = 0; s <= n; ++s) {
      const BigInt c = big_binomial(n, s);
      out[{n - s, s}] += Rational(c * c) / Rational(fn * fn);
    }
  }
  return out;
}

std::vector<MlLawCoefficient> ml_semigroup_comparison(double alpha, double beta, int n_max) {
  std::vector<MlLawCoefficient> out;
  for (int n = 0; n <= n_max; ++n) {
    const double top = gamma(n * alpha + beta);
    const double weight = recip_gamma(n * alpha + beta);
    for (int r = 0; r <= n; ++r) {
      const int k = n - r;
      const double c = to_double(Rational(big_binomial(n, r)));
      const double binom_coeff = c * top / (gamma(alpha * r + beta) * gamma(alpha * k + beta));
      const double law = binom_coeff * weight;
      const double product = recip_gamma(alpha * r + beta) * recip_gamma(alpha * k + beta);
      out.push_back({r, k, product, law, law / product});
    }
  }
  return out;
}

MlLawNumeric ml_semigroup_numeric(double alpha, double beta, cplx x, cplx y, int N) {
  cplx law{0.0, 0.0};
  for (int n = 0; n <= N; ++n) law += ml_binomial_pow(alpha, beta, n, x, y) * recip_gamma(alpha * n + beta);
  const cplx product = mittag_leffler(alpha, beta, x).value * mittag_leffler(alpha, beta, y).value;
  return {product, law};
}

}  // namespace peo
