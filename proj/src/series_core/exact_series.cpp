#include "peo/exact_series.hpp"

#include <algorithm>

#include "peo/errors.hpp"

namespace peo {

ExactSeries::ExactSeries(std::map<int, Rational> terms, int truncation_order)
    : order_(truncation_order) {
  for (auto& [n, c] : terms)
    if (c != 0 && n <= order_) terms_.emplace(n, std::move(c));
}

ExactSeries ExactSeries::monomial(int exponent, const Rational& c, int truncation_order) {
  return ExactSeries({{exponent, c}}, truncation_order);
}

Rational ExactSeries::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int ExactSeries::valuation() const { return terms_.empty() ? INT_MAX : terms_.begin()->first; }

FracSeries ExactSeries::to_frac() const {
  std::vector<SeriesTerm> out;
  out.reserve(terms_.size());
  for (const auto& [n, c] : terms_) out.push_back({static_cast<double>(n), to_double(c)});
  return FracSeries(std::move(out),
                    order_ == kNoTruncation ? FracSeries::kNoTruncation : static_cast<double>(order_));
}

ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
  std::map<int, Rational> sum = a.terms_;
  for (const auto& [n, c] : b.terms_) sum[n] += c;
  return ExactSeries(std::move(sum), std::min(a.order_, b.order_));
}

ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) {
  std::map<int, Rational> sum = a.terms_;
  for (const auto& [n, c] : b.terms_) sum[n] -= c;
  return ExactSeries(std::move(sum), std::min(a.order_, b.order_));
}

ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
  const int order = std::min(a.order_, b.order_);
  std::map<int, Rational> prod;
  for (const auto& [na, ca] : a.terms_)
    for (const auto& [nb, cb] : b.terms_) {
      if (static_cast<long long>(na) + nb > order) break;
      prod[na + nb] += ca * cb;
    }
  return ExactSeries(std::move(prod), order);
}

ExactSeries operator*(const Rational& s, const ExactSeries& a) {
  std::map<int, Rational> out;
  for (const auto& [n, c] : a.terms_) out.emplace(n, s * c);
  return ExactSeries(std::move(out), a.order_);
}

namespace {
int bump(int order, int by) {
  return order == ExactSeries::kNoTruncation ? order : order + by;
}
}  // namespace

ExactSeries laguerre_antiderivative(const ExactSeries& s) {
  std::map<int, Rational> out;
  for (const auto& [n, c] : s.terms()) {
    if (n <= -1) throw DomainError("laguerre_antiderivative: exponents must be > -1");
    out.emplace(n + 1, c / Rational((n + 1) * (n + 1)));
  }
  return ExactSeries(std::move(out), bump(s.truncation_order(), 1));
}

ExactSeries laguerre_derivative(const ExactSeries& s) {
  std::map<int, Rational> out;
  for (const auto& [n, c] : s.terms()) out.emplace(n - 1, c * n * n);
  return ExactSeries(std::move(out), bump(s.truncation_order(), -1));
}

ExactSeries derivative(const ExactSeries& s) {
  std::map<int, Rational> out;
  for (const auto& [n, c] : s.terms()) out.emplace(n - 1, c * n);
  return ExactSeries(std::move(out), bump(s.truncation_order(), -1));
}

ExactSeries shift(const ExactSeries& s, int k) {
  std::map<int, Rational> out;
  for (const auto& [n, c] : s.terms()) out.emplace(n + k, c);
  return ExactSeries(std::move(out), bump(s.truncation_order(), k));
}

ExactSeries laguerre_exp_exact(const Rational& c, int m, int order) {
  if (m <= 0) throw DomainError("laguerre_exp_exact: power must be positive");
  std::map<int, Rational> out;
  Rational term = 1;
  for (int r = 0; r * m <= order; ++r) {
    out.emplace(r * m, term);
    term = term * c / Rational((r + 1) * (r + 1));
  }
  return ExactSeries(std::move(out), order);
}

}  // namespace peo
