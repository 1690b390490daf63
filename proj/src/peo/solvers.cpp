#include "peo/solvers.hpp"

#include <cmath>

#include "peo/detail/series_accumulator.hpp"
#include "peo/errors.hpp"
#include "peo/weyl.hpp"

namespace peo {
namespace {

constexpr cplx kI{0.0, 1.0};

cplx ipow(cplx z, int n) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

void require_order(int N, const char* who) {
  if (N < 0) throw DomainError(std::string(who) + ": order must be >= 0");
}

/// O F with O = -(alpha x + beta/2 d_x^2).
BivariateSeries apply_schrodinger_op(const BivariateSeries& F, double alpha, double beta) {
  return cplx(-alpha, 0.0) * times_x(F) - cplx(beta / 2.0, 0.0) * x_derivative(x_derivative(F));
}

/// Polynomials g_k, the s^k coefficients of
/// e^{s^3 c3} e^{s c1 x} f(x + shift + s cd d_x) 1,
/// with shift = sc * s^shift_degree.
std::vector<Polynomial> operational_coefficients(const Polynomial& f, const GaussianRational& c3,
                                                 const GaussianRational& c1,
                                                 const GaussianRational& sc, int shift_degree,
                                                 const GaussianRational& cd, int N) {
  if (N > kMaxGradedOrder)
    throw DomainError("operational expansion: order must be <= " + std::to_string(kMaxGradedOrder));
  GradedOpSeries Z = GradedOpSeries::term(WeylElement::x(), 0, N);
  Z += GradedOpSeries::term(WeylElement::d() * cd, 1, N);
  Z += GradedOpSeries::term(WeylElement::scalar(sc), shift_degree, N);
  const GradedOpSeries op = graded_exp(GradedOpSeries::term(WeylElement::scalar(c3), 3, N), N) *
                            graded_exp(GradedOpSeries::term(WeylElement::x() * c1, 1, N), N) *
                            graded_substitute(f, Z);
  return op.apply(Polynomial::constant(1));
}

}  // namespace

// Transport ---------------------------------------------------------------------

BivariateSeries solve_laguerre_transport(const Polynomial& f, cplx alpha, int N,
                                         const EigenKernel& kernel) {
  require_order(N, "solve_laguerre_transport");
  std::vector<BivariateSeries::Term> terms;
  Polynomial deriv = f;
  for (int n = 0; n <= N && !deriv.is_zero(); ++n) {
    const cplx w = kernel.weight(n) * ipow(alpha, n);
    for (int k = 0; k <= deriv.degree(); ++k)
      terms.push_back({k, kernel.exponent(n), w * deriv.coeff(k).to_complex()});
    deriv = deriv.derivative();
  }
  return BivariateSeries(terms, kernel.exponent(N));
}

ExactBivariate solve_laguerre_transport_exact(const Polynomial& f, const GaussianRational& alpha,
                                              int N) {
  require_order(N, "solve_laguerre_transport_exact");
  ExactBivariate out;
  Polynomial deriv = f;
  GaussianRational apow(1);
  for (int n = 0; n <= N && !deriv.is_zero(); ++n) {
    const BigInt fn = big_factorial(n);
    const GaussianRational w = apow * GaussianRational(Rational(1) / Rational(fn * fn));
    for (int k = 0; k <= deriv.degree(); ++k) {
      const GaussianRational c = w * deriv.coeff(k);
      if (!c.is_zero()) out[{k, n}] = c;
    }
    deriv = deriv.derivative();
    apow *= alpha;
  }
  return out;
}

ExactBivariate transport_residual_exact(const ExactBivariate& F, const GaussianRational& alpha) {
  ExactBivariate out;
  auto add = [&](std::pair<int, int> key, const GaussianRational& c) {
    GaussianRational& slot = out[key];
    slot += c;
    if (slot.is_zero()) out.erase(key);
  };
  for (const auto& [key, c] : F) {
    const auto [k, n] = key;
    if (n > 0) add({k, n - 1}, c * GaussianRational(n * n));
    if (k > 0) add({k - 1, n}, -(alpha * c * GaussianRational(k)));
  }
  return out;
}

// Drift -------------------------------------------------------------------------

SeriesValue solve_laguerre_drift(cplx alpha, cplx beta, cplx x, double t, const SeriesEvalConfig& cfg) {
  detail::SeriesAccumulator acc(cfg);
  const cplx z = -alpha * beta * t * t / 2.0;
  const cplx a = -alpha * t * x;
  cplx pref{1.0, 0.0};  // a^n / n!
  for (int n = 0; !acc.exhausted(); ++n) {
    if (acc.add(pref * laguerre_e_nm(n, 2, z, cfg).value)) return acc.result();
    pref *= a / (n + 1.0);
  }
  acc.fail("solve_laguerre_drift");
}

SeriesValue solve_laguerre_drift_double_sum(cplx alpha, cplx beta, cplx x, double t,
                                            const SeriesEvalConfig& cfg) {
  detail::SeriesAccumulator acc(cfg);
  const cplx a = -alpha * t * x;
  const cplx b = -alpha * beta * t * t / 2.0;
  for (int d = 0; !acc.exhausted(); ++d) {
    // all (n, r) with n + 2r = d; weight 1/(n! r! d!)
    cplx group{};
    for (int r = 0; 2 * r <= d; ++r) {
      const int n = d - 2 * r;
      group += ipow(a, n) * ipow(b, r) / (factorial(n) * factorial(r));
    }
    if (acc.add(group / factorial(d))) return acc.result();
  }
  acc.fail("solve_laguerre_drift_double_sum");
}

UmbralSum laguerre_drift_umbral(cplx alpha, cplx beta, cplx x, double t, int degrees) {
  VarAllocator alloc;
  const Var v = alloc.fresh_v();
  const cplx a = -alpha * t * x;
  const cplx b = -alpha * beta * t * t / 2.0;
  UmbralSum s;
  // n outer, r inner: the last terms of the family run along r with fixed n,
  // which decays monotonically and suits the tail fit.
  for (int n = 0; n < degrees; ++n)
    for (int r = 0; r < degrees; ++r) {
      UmbralTerm term(ipow(a, n) * ipow(b, r) / (factorial(n) * factorial(r)));
      term.times(v, n + 2.0 * r + 1.0);
      s.terms.push_back(term);
    }
  return s;
}

BivariateSeries laguerre_drift_series(const Polynomial& f, cplx alpha, cplx beta, int N) {
  require_order(N, "laguerre_drift_series");
  std::vector<BivariateSeries::Term> terms;
  const cplx b = -alpha * beta / 2.0;
  std::vector<Polynomial> derivs{f};
  while (!derivs.back().is_zero()) derivs.push_back(derivs.back().derivative());
  for (int k = 0; k + 1 < static_cast<int>(derivs.size()) && k <= N; ++k)
    for (int n = 0; n + k <= N; ++n)
      for (int r = 0; n + k + 2 * r <= N; ++r) {
        const int d = n + 2 * r + k;
        const cplx w = ipow(-alpha, n) * ipow(b, r) * ipow(beta, k) /
                       (factorial(n) * factorial(r) * factorial(k) * factorial(d));
        const Polynomial& g = derivs[k];
        for (int j = 0; j <= g.degree(); ++j)
          terms.push_back({j + n, static_cast<double>(d), w * g.coeff(j).to_complex()});
      }
  return BivariateSeries(terms, N);
}

// Schrodinger -------------------------------------------------------------------

Polynomial hermite3_scaled(int n, const GaussianRational& a, const GaussianRational& y) {
  const Polynomial h = hermite3_polynomial(n, y);
  std::vector<GaussianRational> c(h.coeffs());
  GaussianRational apow(1);
  for (auto& ck : c) {
    ck *= apow;
    apow *= a;
  }
  return Polynomial(std::move(c));
}

cplx solve_laguerre_schrodinger(double alpha, double beta, cplx x, double t, int N) {
  require_order(N, "solve_laguerre_schrodinger");
  const cplx y = alpha * alpha * beta / 6.0;
  cplx sum{};
  for (int n = 0; n <= N; ++n) {
    const double f = factorial(n);
    sum += ipow(kI * t, n) / (f * f) * hermite3(n, alpha * x, y);
  }
  return sum;
}

BivariateSeries laguerre_schrodinger_series(double alpha, double beta, int N) {
  require_order(N, "laguerre_schrodinger_series");
  std::vector<BivariateSeries::Term> terms;
  const double y = alpha * alpha * beta / 6.0;
  for (int n = 0; n <= N; ++n) {
    const double fn = factorial(n);
    const cplx w = ipow(kI, n) / fn;  // times n!/(n!)^2 from H_n
    for (int r = 0; 3 * r <= n; ++r) {
      const int k = n - 3 * r;
      const double c = std::pow(alpha, k) * std::pow(y, r) / (factorial(k) * factorial(r));
      terms.push_back({k, static_cast<double>(n), w * c});
    }
  }
  return BivariateSeries(terms, N);
}

BivariateSeries solve_laguerre_schrodinger_general(const Polynomial& phi, const Rational& alpha,
                                                   const Rational& beta, int N) {
  require_order(N, "solve_laguerre_schrodinger_general");
  const GaussianRational a(alpha), b(beta);
  const auto g = operational_coefficients(phi, a * a * b * GaussianRational(Rational(1, 6)), a,
                                          a * b * GaussianRational(Rational(1, 2)), 2, b, N);
  std::vector<BivariateSeries::Term> terms;
  for (int n = 0; n <= N; ++n) {
    const cplx w = ipow(kI, n) / factorial(n);
    for (int k = 0; k <= g[n].degree(); ++k)
      terms.push_back({k, static_cast<double>(n), w * g[n].coeff(k).to_complex()});
  }
  return BivariateSeries(terms, N);
}

BivariateSeries schrodinger_residual(const BivariateSeries& psi, double alpha, double beta) {
  return kI * laguerre_t_derivative(psi) - apply_schrodinger_op(psi, alpha, beta);
}

// Fractional Schrodinger --------------------------------------------------------

cplx fractional_schrodinger(double alpha, double beta, double mu, cplx x, double t, int N) {
  require_order(N, "fractional_schrodinger");
  if (!(mu > 0.0 && mu < 1.0)) throw DomainError("fractional_schrodinger: mu must be in (0, 1)");
  const cplx y = -alpha * alpha * beta / 6.0;
  cplx sum{};
  for (int r = 0; r <= N; ++r)
    sum += std::pow(t, mu * r) * recip_gamma(mu * r + 1.0) * hermite3(r, -alpha * x, y);
  return sum;
}

BivariateSeries fractional_schrodinger_series(double alpha, double beta, double mu, int N) {
  require_order(N, "fractional_schrodinger_series");
  if (!(mu > 0.0 && mu < 1.0)) throw DomainError("fractional_schrodinger: mu must be in (0, 1)");
  std::vector<BivariateSeries::Term> terms;
  const double y = -alpha * alpha * beta / 6.0;
  for (int n = 0; n <= N; ++n) {
    const double w = factorial(n) * recip_gamma(mu * n + 1.0);
    for (int r = 0; 3 * r <= n; ++r) {
      const int k = n - 3 * r;
      const double c = std::pow(-alpha, k) * std::pow(y, r) / (factorial(k) * factorial(r));
      terms.push_back({k, mu * n, w * c});
    }
  }
  return BivariateSeries(terms, mu * N);
}

BivariateSeries fractional_schrodinger_residual(const BivariateSeries& F, double alpha, double beta,
                                                double mu, const Polynomial& f) {
  std::vector<BivariateSeries::Term> src;
  const double w = recip_gamma(1.0 - mu);
  for (int k = 0; k <= f.degree(); ++k) src.push_back({k, -mu, w * f.coeff(k).to_complex()});
  return rl_t_derivative(F, mu) - apply_schrodinger_op(F, alpha, beta) - BivariateSeries(src);
}

BivariateSeries fractional_general_series(const Polynomial& f, const Rational& alpha,
                                          const Rational& beta, double mu, int N,
                                          FractionalDisplay display) {
  require_order(N, "fractional_general_series");
  if (!(mu > 0.0 && mu < 1.0)) throw DomainError("fractional_general_series: mu must be in (0, 1)");
  const GaussianRational a(alpha), b(beta);
  const int shift_degree = display == FractionalDisplay::Derived ? 2 : 1;
  const auto g = operational_coefficients(f, -(a * a * b * GaussianRational(Rational(1, 6))), -a,
                                          a * b * GaussianRational(Rational(1, 2)), shift_degree,
                                          -b, N);
  // O^r f = r! g_r, and E_{mu,1}(t^mu O) f = sum_r t^{mu r} O^r f / Gamma(mu r + 1).
  std::vector<BivariateSeries::Term> terms;
  for (int r = 0; r <= N; ++r) {
    const double w = factorial(r) * recip_gamma(mu * r + 1.0);
    for (int k = 0; k <= g[r].degree(); ++k)
      terms.push_back({k, mu * r, w * g[r].coeff(k).to_complex()});
  }
  return BivariateSeries(terms, mu * N);
}

}  // namespace peo
