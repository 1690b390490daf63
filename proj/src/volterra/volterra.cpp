#include "peo/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "peo/errors.hpp"

namespace peo {
namespace {

void check_valuation(double got, double floor, int n, const char* who) {
  if (got + 1e-9 * std::max(1.0, std::abs(floor)) < floor)
    throw std::logic_error(std::string(who) + ": iterate " + std::to_string(n) + " has valuation " +
                           std::to_string(got) + " below " + std::to_string(floor));
}

ExactSeries truncate(const ExactSeries& s, int order) { return ExactSeries(s.terms(), order); }

}  // namespace

// Laguerre ------------------------------------------------------------------------

VNState<ExactSeries> laguerre_vn_solve(const ExactSeries& f, const Rational& Y0, int n_iter, int order) {
  if (n_iter < 0) throw DomainError("laguerre_vn_solve: n_iter must be >= 0");
  if (!f.empty() && f.valuation() < 0) throw DomainError("laguerre_vn_solve: f has a negative exponent");
  const double step = 1.0 + (f.empty() ? 0 : f.valuation());
  VNState<ExactSeries> st;
  st.iterates.push_back(ExactSeries::monomial(0, Y0, order));
  st.partial_sum = st.iterates.back();
  for (int n = 1; n <= n_iter; ++n) {
    ExactSeries next = truncate(laguerre_antiderivative(f * st.iterates.back()), order);
    if (next.empty()) break;
    check_valuation(next.valuation(), n * step, n, "laguerre_vn_solve");
    st.partial_sum = st.partial_sum + next;
    st.iterates.push_back(std::move(next));
  }
  return st;
}

VNState<FracSeries> laguerre_vn_solve(const FracSeries& f, cplx Y0, int n_iter, double order) {
  if (n_iter < 0) throw DomainError("laguerre_vn_solve: n_iter must be >= 0");
  if (!f.empty() && !(f.valuation() > -1.0))
    throw DomainError("laguerre_vn_solve: f exponents must be > -1");
  const double step = 1.0 + (f.empty() ? 0.0 : f.valuation());
  VNState<FracSeries> st;
  st.iterates.push_back(FracSeries::constant(Y0, order));
  st.partial_sum = st.iterates.back();
  for (int n = 1; n <= n_iter; ++n) {
    FracSeries next = laguerre_antiderivative(f * st.iterates.back()).with_truncation(order);
    if (next.empty()) break;
    check_valuation(next.valuation(), n * step, n, "laguerre_vn_solve");
    st.partial_sum = st.partial_sum + next;
    st.iterates.push_back(std::move(next));
  }
  return st;
}

ExactSeries laguerre_vn_residual(const VNState<ExactSeries>& st, const ExactSeries& f, const Rational& Y0) {
  const int order = st.partial_sum.truncation_order();
  const ExactSeries image = truncate(laguerre_antiderivative(f * st.partial_sum), order);
  return st.partial_sum - image - ExactSeries::monomial(0, Y0, order);
}

std::vector<Rational> cos_recursion_coeffs(int n, int R) {
  if (n < 1 || R < 0) throw DomainError("cos_recursion_coeffs: need n >= 1, R >= 0");
  std::vector<Rational> inv_even_fact(static_cast<std::size_t>(R) + 1);
  for (int r = 0; r <= R; ++r) inv_even_fact[r] = Rational(1) / Rational(big_factorial(2 * r));
  std::vector<Rational> a = inv_even_fact;
  for (int m = 2; m <= n; ++m) {
    std::vector<Rational> next(a.size());
    for (int r = 0; r <= R; ++r)
      for (int k = 0; k <= r; ++k) {
        const int q = 2 * k + m - 1;
        next[r] += a[k] * inv_even_fact[r - k] / Rational(q * q);
      }
    a = std::move(next);
  }
  return a;
}

ExactSeries cos_recursion_iterate(int n, int R) {
  const auto a = cos_recursion_coeffs(n, R);
  std::map<int, Rational> terms;
  for (int r = 0; r <= R; ++r) {
    const int e = 2 * r + n;
    terms[e] = (r % 2 ? Rational(-1) : Rational(1)) * a[r] / Rational(e * e);
  }
  return ExactSeries(std::move(terms));
}

ExactSeries cos_series_exact(int order) {
  std::map<int, Rational> terms;
  for (int r = 0; 2 * r <= order; ++r)
    terms[2 * r] = (r % 2 ? Rational(-1) : Rational(1)) / Rational(big_factorial(2 * r));
  return ExactSeries(std::move(terms), order);
}

// Fractional ----------------------------------------------------------------------

VNState<FracSeries> fractional_vn_solve(const FracSeries& f, double alpha, cplx Y0, int n_iter,
                                        double order) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("fractional_vn_solve: alpha must be in (0, 1]");
  if (n_iter < 0) throw DomainError("fractional_vn_solve: n_iter must be >= 0");
  if (!f.empty() && !(f.valuation() > -1.0))
    throw DomainError("fractional_vn_solve: f exponents must be > -1");
  const double step = alpha + (f.empty() ? 0.0 : f.valuation());
  VNState<FracSeries> st;
  st.iterates.push_back(FracSeries::constant(Y0, order));
  st.partial_sum = st.iterates.back();
  for (int n = 1; n <= n_iter; ++n) {
    FracSeries next = rl_integral(f * st.iterates.back(), alpha).with_truncation(order);
    if (next.empty()) break;
    check_valuation(next.valuation(), n * step, n, "fractional_vn_solve");
    st.partial_sum = st.partial_sum + next;
    st.iterates.push_back(std::move(next));
  }
  return st;
}

FracSeries fractional_vn_residual(const VNState<FracSeries>& st, const FracSeries& f, double alpha,
                                  cplx Y0) {
  const double order = st.partial_sum.truncation_order();
  const FracSeries image = rl_integral(f * st.partial_sum, alpha).with_truncation(order);
  return st.partial_sum - image - FracSeries::constant(Y0, order);
}

FracSeries fractional_vn_differential_residual(const VNState<FracSeries>& st, const FracSeries& f,
                                               double alpha, cplx Y0) {
  const FracSeries source = FracSeries::monomial(-alpha, Y0 * recip_gamma(1.0 - alpha));
  return rl_derivative(st.partial_sum, alpha) - f * st.partial_sum - source;
}

double fractional_vn_monomial_closed_form(int n, double alpha, double t) {
  if (n < 0) throw DomainError("fractional_vn_monomial_closed_form: n must be >= 0");
  if (!(alpha > 0.0)) throw DomainError("fractional_vn_monomial_closed_form: alpha must be > 0");
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= beta(k * (alpha + 1.0) + 2.0, alpha);
  return std::pow(-std::pow(t, alpha + 1.0) / gamma(alpha), n) * prod;
}

// MatrixSeries --------------------------------------------------------------------

MatrixSeries::MatrixSeries(int dim, std::vector<Term> terms, double truncation_order)
    : dim_(dim), order_(truncation_order) {
  if (dim < 1) throw DomainError("MatrixSeries: dim must be >= 1");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    if (t.coeff.rows() != dim || t.coeff.cols() != dim)
      throw DomainError("MatrixSeries: coefficient has the wrong shape");
    if (t.exponent > order_ && !same_exponent(t.exponent, order_)) continue;
    if (!terms_.empty() && same_exponent(terms_.back().exponent, t.exponent))
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff.cwiseAbs().maxCoeff() < 1e-300; });
}

MatrixSeries MatrixSeries::identity(int dim, double truncation_order) {
  return MatrixSeries(dim, {{0.0, Eigen::MatrixXcd::Identity(dim, dim)}}, truncation_order);
}

MatrixSeries MatrixSeries::polynomial(const std::vector<Eigen::MatrixXcd>& coeffs,
                                      double truncation_order) {
  if (coeffs.empty()) throw DomainError("MatrixSeries::polynomial: no coefficients");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) terms.push_back({static_cast<double>(k), coeffs[k]});
  return MatrixSeries(static_cast<int>(coeffs[0].rows()), std::move(terms), truncation_order);
}

double MatrixSeries::valuation() const {
  return terms_.empty() ? FracSeries::kNoTruncation : terms_.front().exponent;
}

Eigen::MatrixXcd MatrixSeries::coefficient(double exponent) const {
  for (const auto& t : terms_)
    if (same_exponent(t.exponent, exponent)) return t.coeff;
  return Eigen::MatrixXcd::Zero(dim_, dim_);
}

FracSeries MatrixSeries::entry(int i, int j) const {
  std::vector<SeriesTerm> out;
  for (const auto& t : terms_) out.push_back({t.exponent, t.coeff(i, j)});
  return FracSeries(std::move(out), order_);
}

Eigen::MatrixXcd MatrixSeries::eval(double t) const {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& term : terms_) {
    if (t == 0.0) {
      if (term.exponent < 0.0) throw DomainError("MatrixSeries::eval: negative exponent at t = 0");
      if (term.exponent == 0.0) sum += term.coeff;
      continue;
    }
    sum += std::pow(t, term.exponent) * term.coeff;
  }
  return sum;
}

MatrixSeries MatrixSeries::with_truncation(double order) const {
  return MatrixSeries(dim_, terms_, order);
}

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.dim_ != b.dim_) throw DomainError("MatrixSeries: dimension mismatch");
  std::vector<MatrixSeries::Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return MatrixSeries(a.dim_, std::move(t), std::min(a.order_, b.order_));
}

MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.dim_ != b.dim_) throw DomainError("MatrixSeries: dimension mismatch");
  std::vector<MatrixSeries::Term> t = a.terms_;
  for (const auto& x : b.terms_) t.push_back({x.exponent, -x.coeff});
  return MatrixSeries(a.dim_, std::move(t), std::min(a.order_, b.order_));
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.dim_ != b.dim_) throw DomainError("MatrixSeries: dimension mismatch");
  std::vector<MatrixSeries::Term> t;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) t.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
  return MatrixSeries(a.dim_, std::move(t), std::min(a.order_, b.order_));
}

MatrixSeries rl_integral(const MatrixSeries& s, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("rl_integral: alpha must be > 0");
  std::vector<MatrixSeries::Term> out;
  for (const auto& t : s.terms()) {
    if (!(t.exponent > -1.0)) throw DomainError("rl_integral: exponent must be > -1");
    const double w = gamma(t.exponent + 1.0) * recip_gamma(t.exponent + alpha + 1.0);
    out.push_back({t.exponent + alpha, w * t.coeff});
  }
  return MatrixSeries(s.dim(), std::move(out), s.truncation_order() + alpha);
}

// Dyson ---------------------------------------------------------------------------

VNState<MatrixSeries> dyson_evolution_operator(const MatrixSeries& M, double alpha, int n_iter,
                                               double order) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("dyson_evolution_operator: alpha must be in (0, 1]");
  if (n_iter < 0) throw DomainError("dyson_evolution_operator: n_iter must be >= 0");
  if (M.valuation() < 0.0) throw DomainError("dyson_evolution_operator: M has a negative exponent");
  const double step = alpha + (M.terms().empty() ? 0.0 : M.valuation());
  VNState<MatrixSeries> st;
  st.iterates.push_back(MatrixSeries::identity(M.dim(), order));
  st.partial_sum = st.iterates.back();
  for (int n = 1; n <= n_iter; ++n) {
    MatrixSeries next = rl_integral(M * st.iterates.back(), alpha).with_truncation(order);
    if (next.terms().empty()) break;
    check_valuation(next.valuation(), n * step, n, "dyson_evolution_operator");
    st.partial_sum = st.partial_sum + next;
    st.iterates.push_back(std::move(next));
  }
  return st;
}

Eigen::MatrixXcd dyson_literal_value(const MatrixSeries& M, double alpha, double t, int n_iter,
                                     int grid) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("dyson_literal_value: alpha must be in (0, 1]");
  if (!(t >= 0.0)) throw DomainError("dyson_literal_value: t must be >= 0");
  if (grid < 2 || n_iter < 0) throw DomainError("dyson_literal_value: need grid >= 2, n_iter >= 0");
  if (M.valuation() < 0.0) throw DomainError("dyson_literal_value: M has a negative exponent");
  const int d = M.dim();
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(d, d);
  if (t == 0.0) return I;
  // tau runs 0 -> t while w = (t - tau)^alpha runs t^alpha -> 0;
  // (t - tau)^{alpha-1} dtau / Gamma(alpha) = -dw / Gamma(alpha + 1).
  const double W = std::pow(t, alpha);
  const double dw = W / grid;
  const double scale = recip_gamma(alpha + 1.0);
  std::vector<Eigen::MatrixXcd> N(grid + 1);
  for (int j = 0; j <= grid; ++j) {
    const double w = W * (1.0 - static_cast<double>(j) / grid);
    const double tau = std::max(0.0, t - std::pow(w, 1.0 / alpha));
    N[j] = scale * M.eval(tau);
  }
  std::vector<Eigen::MatrixXcd> U(grid + 1, I);
  Eigen::MatrixXcd total = I;
  for (int k = 1; k <= n_iter; ++k) {
    std::vector<Eigen::MatrixXcd> next(grid + 1, Eigen::MatrixXcd::Zero(d, d));
    for (int j = 1; j <= grid; ++j)
      next[j] = next[j - 1] + 0.5 * dw * (N[j] * U[j] + N[j - 1] * U[j - 1]);
    U = std::move(next);
    total += U[grid];
  }
  return total;
}

Eigen::MatrixXcd magnus4_propagator(const MatrixSeries& M, double t, int steps) {
  if (steps < 1) throw DomainError("magnus4_propagator: steps must be >= 1");
  const double h = t / steps;
  const double c1 = 0.5 - std::sqrt(3.0) / 6.0;
  const double c2 = 0.5 + std::sqrt(3.0) / 6.0;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(M.dim(), M.dim());
  for (int n = 0; n < steps; ++n) {
    const double t0 = n * h;
    const Eigen::MatrixXcd A1 = M.eval(t0 + c1 * h);
    const Eigen::MatrixXcd A2 = M.eval(t0 + c2 * h);
    const Eigen::MatrixXcd omega =
        0.5 * h * (A1 + A2) + (std::sqrt(3.0) / 12.0) * h * h * (A2 * A1 - A1 * A2);
    U = omega.exp() * U;
  }
  return U;
}

}  // namespace peo
