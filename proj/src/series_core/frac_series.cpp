#include "peo/frac_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "peo/errors.hpp"

namespace peo {
namespace {

constexpr double kPruneBelow = 1e-300;
constexpr double kCompareFloor = 1e-14;

bool above_order(double g, double order) { return g > order && !same_exponent(g, order); }

// c t^g -> c Gamma(g+1)/Gamma(g+1-order) t^{g-order}; negative order integrates.
FracSeries power_rule(const FracSeries& s, double order, const char* who) {
  std::vector<SeriesTerm> out;
  out.reserve(s.size());
  for (const auto& [g, c] : s.terms()) {
    if (is_gamma_pole(g + 1.0))
      throw DomainError(std::string(who) + ": exponent " + std::to_string(g) +
                        " hits a Gamma pole");
    const double factor = gamma(g + 1.0) * recip_gamma(g + 1.0 - order);
    out.push_back({g - order, c * factor});
  }
  return FracSeries(std::move(out), s.truncation_order() - order, s.truncated());
}

}  // namespace

bool same_exponent(double g1, double g2) {
  return std::abs(g1 - g2) <= 1e-12 * std::max(1.0, std::abs(g1));
}

FracSeries::FracSeries(std::vector<SeriesTerm> terms, double truncation_order, bool truncated)
    : truncation_order_(truncation_order), truncated_(truncated) {
  std::sort(terms.begin(), terms.end(),
            [](const SeriesTerm& a, const SeriesTerm& b) { return a.exponent < b.exponent; });
  terms_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    SeriesTerm merged = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && same_exponent(merged.exponent, terms[j].exponent)) {
      merged.coeff += terms[j].coeff;
      ++j;
    }
    i = j;
    if (above_order(merged.exponent, truncation_order_)) {
      truncated_ = true;
      continue;
    }
    if (std::abs(merged.coeff) < kPruneBelow) continue;
    terms_.push_back(merged);
  }
}

FracSeries FracSeries::constant(cplx c, double truncation_order) {
  return FracSeries({{0.0, c}}, truncation_order);
}

FracSeries FracSeries::monomial(double exponent, cplx c, double truncation_order) {
  return FracSeries({{exponent, c}}, truncation_order);
}

cplx FracSeries::coefficient(double exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const SeriesTerm& t, double g) {
                               return t.exponent < g && !same_exponent(t.exponent, g);
                             });
  if (it != terms_.end() && same_exponent(it->exponent, exponent)) return it->coeff;
  return {0.0, 0.0};
}

double FracSeries::valuation() const {
  return terms_.empty() ? kNoTruncation : terms_.front().exponent;
}

FracSeries FracSeries::with_truncation(double order) const {
  return FracSeries(terms_, order, truncated_);
}

FracSeries FracSeries::map_terms(const std::function<SeriesTerm(const SeriesTerm&)>& f) const {
  std::vector<SeriesTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(f(t));
  return FracSeries(std::move(out), truncation_order_, truncated_);
}

FracSeries FracSeries::operator-() const {
  FracSeries r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

FracSeries& FracSeries::operator*=(cplx s) {
  std::vector<SeriesTerm> out = terms_;
  for (auto& t : out) t.coeff *= s;
  *this = FracSeries(std::move(out), truncation_order_, truncated_);
  return *this;
}

FracSeries operator*(cplx s, const FracSeries& a) {
  FracSeries r = a;
  r *= s;
  return r;
}

FracSeries series_add(const FracSeries& a, const FracSeries& b) {
  std::vector<SeriesTerm> all = a.terms();
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return FracSeries(std::move(all), std::min(a.truncation_order(), b.truncation_order()),
                    a.truncated() || b.truncated());
}

FracSeries series_sub(const FracSeries& a, const FracSeries& b) { return series_add(a, -b); }

FracSeries series_mul(const FracSeries& a, const FracSeries& b) {
  const double order = std::min(a.truncation_order(), b.truncation_order());
  std::vector<SeriesTerm> prod;
  prod.reserve(a.size() * b.size());
  bool dropped = a.truncated() || b.truncated();
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      const double g = ta.exponent + tb.exponent;
      if (above_order(g, order)) {
        dropped = true;
        break;  // b's exponents increase
      }
      prod.push_back({g, ta.coeff * tb.coeff});
    }
  }
  return FracSeries(std::move(prod), order, dropped);
}

FracSeries shift(const FracSeries& s, double shift_by) {
  std::vector<SeriesTerm> out = s.terms();
  for (auto& t : out) t.exponent += shift_by;
  return FracSeries(std::move(out), s.truncation_order() + shift_by, s.truncated());
}

FracSeries rl_integral(const FracSeries& s, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("rl_integral: order must be > 0");
  for (const auto& t : s.terms())
    if (!(t.exponent > -1.0)) throw DomainError("rl_integral: exponents must be > -1");
  return power_rule(s, -alpha, "rl_integral");
}

FracSeries rl_derivative(const FracSeries& s, double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw DomainError("rl_derivative: order must lie in (0, 1)");
  return power_rule(s, mu, "rl_derivative");
}

FracSeries laguerre_derivative(const FracSeries& s) {
  std::vector<SeriesTerm> out;
  out.reserve(s.size());
  for (const auto& [g, c] : s.terms()) out.push_back({g - 1.0, c * (g * g)});
  return FracSeries(std::move(out), s.truncation_order() - 1.0, s.truncated());
}

FracSeries laguerre_antiderivative(const FracSeries& s) {
  std::vector<SeriesTerm> out;
  out.reserve(s.size());
  for (const auto& [g, c] : s.terms()) {
    if (!(g > -1.0)) throw DomainError("laguerre_antiderivative: exponents must be > -1");
    out.push_back({g + 1.0, c / ((g + 1.0) * (g + 1.0))});
  }
  return FracSeries(std::move(out), s.truncation_order() + 1.0, s.truncated());
}

FracSeries laguerre_fractional_derivative(const FracSeries& s, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw DomainError("laguerre_fractional_derivative: order must lie in (0, 1]");
  const FracSeries inner = power_rule(s, alpha, "laguerre_fractional_derivative");
  return power_rule(shift(inner, alpha), alpha, "laguerre_fractional_derivative");
}

cplx series_eval(const FracSeries& s, double t) {
  if (t < 0.0) throw DomainError("series_eval: t must be >= 0");
  cplx sum{0.0, 0.0};
  for (const auto& [g, c] : s.terms()) {
    if (t == 0.0) {
      if (g < 0.0) throw DomainError("series_eval: negative exponent at t = 0");
      if (g == 0.0) sum += c;
      continue;
    }
    sum += c * std::pow(t, g);
  }
  return sum;
}

double series_rel_error(const FracSeries& a, const FracSeries& b) {
  double worst = 0.0;
  auto visit = [&](double g) {
    const cplx ca = a.coefficient(g);
    const cplx cb = b.coefficient(g);
    const double diff = std::abs(ca - cb);
    if (diff <= kCompareFloor) return;
    worst = std::max(worst, diff / std::max(std::abs(ca), std::abs(cb)));
  };
  for (const auto& t : a.terms()) visit(t.exponent);
  for (const auto& t : b.terms()) visit(t.exponent);
  return worst;
}

double series_max_abs(const FracSeries& s, double upto) {
  double m = 0.0;
  for (const auto& t : s.terms())
    if (!above_order(t.exponent, upto)) m = std::max(m, std::abs(t.coeff));
  return m;
}

}  // namespace peo
