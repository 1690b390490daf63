#include <cmath>

#include "peo/errors.hpp"
#include "peo/solvers.hpp"

namespace peo {

std::pair<cplx, cplx> eigenvalues(const Matrix2& M) {
  const cplx half_tr = M.trace() / 2.0;
  const cplx disc = std::sqrt(half_tr * half_tr - M.determinant());
  return {half_tr + disc, half_tr - disc};
}

Matrix2 matrix_kernel_exp(const Matrix2& M, double t, const EigenKernel& kernel,
                          const SeriesEvalConfig& cfg) {
  const auto [lp, lm] = eigenvalues(M);
  const double gap = std::abs(lp - lm);
  if (!(gap >= 1e-8 * M.norm()) || gap == 0.0)
    throw ConditioningError("matrix_kernel_exp: eigenvalues too close for Cayley-Hamilton (gap " +
                            std::to_string(gap) + ")");
  const Matrix2 I = Matrix2::Identity();
  return ((lp * I - M) * kernel.eval(lm, t, cfg) - (lm * I - M) * kernel.eval(lp, t, cfg)) /
         (lp - lm);
}

Matrix2 matrix_kernel_series(const Matrix2& M, double t, const EigenKernel& kernel, int terms) {
  if (terms < 1) throw DomainError("matrix_kernel_series: terms must be >= 1");
  Matrix2 sum = Matrix2::Zero();
  Matrix2 power = Matrix2::Identity();
  Matrix2 last = Matrix2::Zero();
  for (int n = 0; n < terms; ++n) {
    const double tp = kernel.exponent(n) == 0.0 ? 1.0 : std::pow(t, kernel.exponent(n));
    last = kernel.weight(n) * tp * power;
    sum += last;
    power = power * M;
  }
  if (!(last.norm() <= 1e-15 * std::max(1.0, sum.norm())))
    throw NonConvergenceError("matrix_kernel_series: " + std::to_string(terms) +
                              " terms do not reach the tail tolerance");
  return sum;
}

Matrix2 matrix_laguerre_exp(const Matrix2& M, double t, const SeriesEvalConfig& cfg) {
  return matrix_kernel_exp(M, t, EigenKernel::laguerre(), cfg);
}

Vector2 fractional_matrix_evolution(const Matrix2& M, double mu, double t, const Vector2& Y0,
                                    const SeriesEvalConfig& cfg) {
  if (!(mu > 0.0 && mu < 1.0)) throw DomainError("fractional_matrix_evolution: mu must be in (0, 1)");
  if (t == 0.0) return Y0;
  return matrix_kernel_exp(M, t, EigenKernel::mittag_leffler(mu), cfg) * Y0;
}

std::array<FracSeries, 2> fractional_matrix_series(const Matrix2& M, double mu, const Vector2& Y0,
                                                   double order) {
  if (!(mu > 0.0 && mu < 1.0)) throw DomainError("fractional_matrix_series: mu must be in (0, 1)");
  std::array<std::vector<SeriesTerm>, 2> comp;
  Vector2 v = Y0;
  for (int r = 0; mu * r <= order + 1e-12; ++r) {
    const double w = recip_gamma(mu * r + 1.0);
    for (int i = 0; i < 2; ++i) comp[i].push_back({mu * r, w * v(i)});
    v = M * v;
  }
  return {FracSeries(comp[0], order), FracSeries(comp[1], order)};
}

std::array<FracSeries, 2> fractional_matrix_residual(const std::array<FracSeries, 2>& Y,
                                                     const Matrix2& M, double mu, const Vector2& Y0) {
  const double w = recip_gamma(1.0 - mu);
  std::array<FracSeries, 2> out;
  for (int i = 0; i < 2; ++i) {
    const FracSeries MY = M(i, 0) * Y[0] + M(i, 1) * Y[1];
    out[i] = rl_derivative(Y[i], mu) - MY - FracSeries::monomial(-mu, w * Y0(i));
  }
  return out;
}

}  // namespace peo
