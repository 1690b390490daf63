#include "peo/bivariate.hpp"

#include <algorithm>
#include <cmath>

namespace peo {

BivariateSeries::BivariateSeries(const std::vector<Term>& terms, double t_truncation) {
  std::map<int, std::vector<SeriesTerm>> rows;
  for (const auto& t : terms) rows[t.x_degree].push_back({t.t_exponent, t.coeff});
  for (auto& [k, v] : rows) {
    FracSeries s(std::move(v), t_truncation);
    if (!s.empty()) rows_.emplace(k, std::move(s));
  }
}

BivariateSeries::BivariateSeries(std::map<int, FracSeries> by_x_degree) {
  for (auto& [k, s] : by_x_degree)
    if (!s.empty()) rows_.emplace(k, std::move(s));
}

std::vector<BivariateSeries::Term> BivariateSeries::terms() const {
  std::vector<Term> out;
  for (const auto& [k, s] : rows_)
    for (const auto& t : s.terms()) out.push_back({k, t.exponent, t.coeff});
  return out;
}

cplx BivariateSeries::coefficient(int x_degree, double t_exponent) const {
  auto it = rows_.find(x_degree);
  return it == rows_.end() ? cplx{} : it->second.coefficient(t_exponent);
}

int BivariateSeries::x_degree() const { return rows_.empty() ? -1 : rows_.rbegin()->first; }

cplx BivariateSeries::evaluate(cplx x, double t) const {
  cplx sum{};
  for (const auto& [k, s] : rows_) sum += std::pow(x, k) * series_eval(s, t);
  return sum;
}

double BivariateSeries::max_abs(double upto) const {
  double m = 0.0;
  for (const auto& kv : rows_) m = std::max(m, series_max_abs(kv.second, upto));
  return m;
}

namespace {

template <class Op>
BivariateSeries merge(const BivariateSeries& a, const BivariateSeries& b, Op op) {
  std::map<int, FracSeries> rows = a.by_x_degree();
  // Rows absent on one side still inherit the other side's truncation bound.
  double ta = FracSeries::kNoTruncation, tb = FracSeries::kNoTruncation;
  for (const auto& kv : a.by_x_degree()) ta = std::min(ta, kv.second.truncation_order());
  for (const auto& kv : b.by_x_degree()) tb = std::min(tb, kv.second.truncation_order());
  for (const auto& [k, s] : b.by_x_degree()) {
    auto it = rows.find(k);
    const FracSeries lhs = it == rows.end() ? FracSeries({}, ta) : it->second;
    rows[k] = op(lhs, s);
  }
  for (auto& [k, s] : rows)
    if (!b.by_x_degree().count(k)) s = op(s, FracSeries({}, tb));
  return BivariateSeries(std::move(rows));
}

}  // namespace

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  return merge(a, b, [](const FracSeries& x, const FracSeries& y) { return x + y; });
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  return merge(a, b, [](const FracSeries& x, const FracSeries& y) { return x - y; });
}

BivariateSeries operator*(cplx s, const BivariateSeries& a) {
  std::map<int, FracSeries> rows;
  for (const auto& [k, r] : a.by_x_degree()) rows.emplace(k, s * r);
  return BivariateSeries(std::move(rows));
}

BivariateSeries times_x(const BivariateSeries& s) {
  std::map<int, FracSeries> rows;
  for (const auto& [k, r] : s.by_x_degree()) rows.emplace(k + 1, r);
  return BivariateSeries(std::move(rows));
}

BivariateSeries x_derivative(const BivariateSeries& s) {
  std::map<int, FracSeries> rows;
  for (const auto& [k, r] : s.by_x_degree())
    if (k > 0) rows.emplace(k - 1, cplx(k, 0.0) * r);
  return BivariateSeries(std::move(rows));
}

BivariateSeries map_rows(const BivariateSeries& s, FracSeries (*op)(const FracSeries&)) {
  std::map<int, FracSeries> rows;
  for (const auto& [k, r] : s.by_x_degree()) rows.emplace(k, op(r));
  return BivariateSeries(std::move(rows));
}

BivariateSeries laguerre_t_derivative(const BivariateSeries& s) {
  return map_rows(s, [](const FracSeries& r) { return laguerre_derivative(r); });
}

BivariateSeries rl_t_derivative(const BivariateSeries& s, double mu) {
  std::map<int, FracSeries> rows;
  for (const auto& [k, r] : s.by_x_degree()) rows.emplace(k, rl_derivative(r, mu));
  return BivariateSeries(std::move(rows));
}

}  // namespace peo
