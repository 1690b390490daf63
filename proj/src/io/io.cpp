#include "peo/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "peo/errors.hpp"
#include "peo/special_functions.hpp"

namespace peo::io {
namespace {

json truncation_to_json(double order) { return std::isinf(order) ? json(nullptr) : json(order); }

double truncation_from_json(const json& j) {
  return j.is_null() ? FracSeries::kNoTruncation : j.get<double>();
}

void expect_kind(const json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", std::string{}) != kind)
    throw DomainError(std::string("expected a serialized ") + kind);
}

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw DomainError("expected a number or [re, im], got " + j.dump());
}

json to_json(const FracSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back({{"exponent", t.exponent}, {"coeff", complex_to_json(t.coeff)}});
  return {{"kind", "frac_series"},
          {"truncation_order", truncation_to_json(s.truncation_order())},
          {"truncated", s.truncated()},
          {"terms", terms}};
}

FracSeries frac_series_from_json(const json& j) {
  expect_kind(j, "frac_series");
  std::vector<SeriesTerm> terms;
  for (const auto& t : j.at("terms")) terms.push_back({t.at("exponent").get<double>(), complex_from_json(t.at("coeff"))});
  return FracSeries(std::move(terms), truncation_from_json(j.at("truncation_order")),
                    j.value("truncated", false));
}

json to_json(const ExactSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exponent", e}, {"coeff", to_string(c)}});
  const int order = s.truncation_order();
  return {{"kind", "exact_series"},
          {"truncation_order", order == ExactSeries::kNoTruncation ? json(nullptr) : json(order)},
          {"terms", terms}};
}

ExactSeries exact_series_from_json(const json& j) {
  expect_kind(j, "exact_series");
  std::map<int, Rational> terms;
  for (const auto& t : j.at("terms")) terms[t.at("exponent").get<int>()] = parse_rational(t.at("coeff").get<std::string>());
  const json& o = j.at("truncation_order");
  return ExactSeries(std::move(terms), o.is_null() ? ExactSeries::kNoTruncation : o.get<int>());
}

json to_json(const BivariateSeries& s) {
  json rows = json::array();
  for (const auto& [k, row] : s.by_x_degree()) rows.push_back({{"x_degree", k}, {"series", to_json(row)}});
  return {{"kind", "bivariate_series"}, {"rows", rows}};
}

BivariateSeries bivariate_from_json(const json& j) {
  expect_kind(j, "bivariate_series");
  std::map<int, FracSeries> rows;
  for (const auto& r : j.at("rows")) rows[r.at("x_degree").get<int>()] = frac_series_from_json(r.at("series"));
  return BivariateSeries(std::move(rows));
}

json to_json(const MatrixSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) {
    json m = json::array();
    for (int i = 0; i < s.dim(); ++i) {
      json row = json::array();
      for (int k = 0; k < s.dim(); ++k) row.push_back(complex_to_json(t.coeff(i, k)));
      m.push_back(row);
    }
    terms.push_back({{"exponent", t.exponent}, {"coeff", m}});
  }
  return {{"kind", "matrix_series"},
          {"dim", s.dim()},
          {"truncation_order", truncation_to_json(s.truncation_order())},
          {"terms", terms}};
}

MatrixSeries matrix_series_from_json(const json& j) {
  expect_kind(j, "matrix_series");
  const int d = j.at("dim").get<int>();
  std::vector<MatrixSeries::Term> terms;
  for (const auto& t : j.at("terms")) {
    Eigen::MatrixXcd m(d, d);
    const json& rows = t.at("coeff");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
      throw DomainError("matrix_series: coefficient has the wrong shape");
    for (int i = 0; i < d; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != d)
        throw DomainError("matrix_series: coefficient has the wrong shape");
      for (int k = 0; k < d; ++k) m(i, k) = complex_from_json(rows[i][k]);
    }
    terms.push_back({t.at("exponent").get<double>(), std::move(m)});
  }
  return MatrixSeries(d, std::move(terms), truncation_from_json(j.at("truncation_order")));
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const PlotTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw DomainError("write_csv: ragged row");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!std::isfinite(row[i])) throw DomainError("write_csv: non-finite value");
      os << (i ? "," : "") << format_double(row[i]);
    }
    os << '\n';
  }
}

PlotTable plot_trig(double x_min, double x_max, double step) {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max))
    throw DomainError("plot_trig: need finite x_min < x_max");
  if (!(step > 0.0 && std::isfinite(step))) throw DomainError("plot_trig: step must be > 0");
  const double span = (x_max - x_min) / step;
  if (span > 1e7) throw DomainError("plot_trig: more than 1e7 rows requested");
  // Index-based grid so rows do not accumulate rounding; x_max is kept when
  // it is within rounding of a grid point.
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> x(n), lc(n), ls(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = x_min + static_cast<double>(i) * step;
    if (std::abs(x[i]) < 1e-12 * step) x[i] = 0.0;
  }
  laguerre_cos_sin_batch(x, lc, ls);
  PlotTable t{{"x", "lc", "ls"}, {}};
  t.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.rows.push_back({x[i], lc[i], ls[i]});
  return t;
}

namespace {

double bisect_ls(double a, double b, double tol) {
  double fa = laguerre_sin(a);
  for (int it = 0; it < 200 && b - a > tol * std::max(1.0, std::abs(a)); ++it) {
    const double m = 0.5 * (a + b);
    const double fm = laguerre_sin(m);
    if (fm == 0.0) return m;
    if ((fa < 0) == (fm < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

TrigZeros ls_zeros(const PlotTable& table, double tol) {
  if (table.columns.size() < 3 || table.columns[0] != "x" || table.columns[2] != "ls")
    throw DomainError("ls_zeros: expected columns x, lc, ls");
  TrigZeros z;
  const auto& r = table.rows;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double x0 = r[i][0], x1 = r[i + 1][0], s0 = r[i][2], s1 = r[i + 1][2];
    std::optional<double> root;
    if (s0 == 0.0 && x0 != 0.0) {
      root = x0;
    } else if (x0 * x1 > 0.0 && (s0 < 0) != (s1 < 0) && s1 != 0.0) {
      root = bisect_ls(x0, x1, tol);
    }
    if (!root) continue;
    if (*root < 0.0) z.negative = root;  // keeps the last one below 0
    else if (!z.positive) z.positive = root;
  }
  if (!r.empty() && r.back()[2] == 0.0 && r.back()[0] != 0.0) {
    const double x = r.back()[0];
    if (x < 0.0) z.negative = x;
    else if (!z.positive) z.positive = x;
  }
  return z;
}

}  // namespace peo::io
