#include "peo/kernel.hpp"

#include <cmath>

#include "peo/errors.hpp"

namespace peo {

EigenKernel EigenKernel::mittag_leffler(double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("EigenKernel: mu must be in (0, 1]");
  return {Kind::MittagLeffler, mu};
}

double EigenKernel::weight(int n) const {
  switch (kind) {
    case Kind::Exp:
      return 1.0 / factorial(n);
    case Kind::LaguerreExp: {
      const double f = factorial(n);
      return 1.0 / (f * f);
    }
    case Kind::MittagLeffler:
      return recip_gamma(mu * n + 1.0);
  }
  return 0.0;
}

double EigenKernel::exponent(int n) const { return kind == Kind::MittagLeffler ? mu * n : n; }

cplx EigenKernel::eval(cplx lambda, double t, const SeriesEvalConfig& cfg) const {
  switch (kind) {
    case Kind::Exp:
      return std::exp(lambda * t);
    case Kind::LaguerreExp:
      return laguerre_exp(lambda * t, cfg).value;
    case Kind::MittagLeffler:
      return peo::mittag_leffler(mu, 1.0, lambda * std::pow(t, mu), cfg).value;
  }
  return {};
}

std::string EigenKernel::name() const {
  switch (kind) {
    case Kind::Exp:
      return "exp";
    case Kind::LaguerreExp:
      return "laguerre";
    case Kind::MittagLeffler:
      return "mittag-leffler(" + std::to_string(mu) + ")";
  }
  return "?";
}

}  // namespace peo
