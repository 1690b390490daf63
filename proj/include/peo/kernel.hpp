#pragma once

#include <string>

#include "peo/special_functions.hpp"

namespace peo {

/// Pseudo-exponential kernel E of a pseudo-evolution problem: the eigenfunction
/// of the generalized time derivative, E(lambda t^s) = sum_n weight(n) lambda^n t^{exponent(n)}.
///   Exp            weight 1/n!,           exponent n
///   LaguerreExp    weight 1/(n!)^2,       exponent n
///   MittagLeffler  weight 1/Gamma(mu n+1), exponent mu n, mu in (0, 1]
struct EigenKernel {
  enum class Kind { Exp, LaguerreExp, MittagLeffler };

  Kind kind = Kind::Exp;
  double mu = 1.0;

  static EigenKernel exp() { return {Kind::Exp, 1.0}; }
  static EigenKernel laguerre() { return {Kind::LaguerreExp, 1.0}; }
  static EigenKernel mittag_leffler(double mu);

  double weight(int n) const;
  double exponent(int n) const;
  /// Scalar E(lambda t) (Exp, LaguerreExp) or E_{mu,1}(lambda t^mu).
  cplx eval(cplx lambda, double t, const SeriesEvalConfig& cfg = {}) const;
  std::string name() const;
};

}  // namespace peo
