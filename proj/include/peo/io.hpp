#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "peo/bivariate.hpp"
#include "peo/exact_series.hpp"
#include "peo/volterra.hpp"

namespace peo::io {

using json = nlohmann::json;

// Solution serialization. Complex numbers are [re, im]; rationals are "p/q"
// strings; an absent truncation bound is null. Doubles are written with
// round-trip precision, so save/load is coefficientwise exact.

json to_json(const FracSeries& s);
json to_json(const ExactSeries& s);
json to_json(const BivariateSeries& s);
json to_json(const MatrixSeries& s);

FracSeries frac_series_from_json(const json& j);
ExactSeries exact_series_from_json(const json& j);
BivariateSeries bivariate_from_json(const json& j);
MatrixSeries matrix_series_from_json(const json& j);

json complex_to_json(cplx z);
/// Accepts a number or [re, im].
cplx complex_from_json(const json& j);

// Plot tables.

struct PlotTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Comma separated, header row, LF line endings, 17 significant digits.
/// Throws DomainError on a ragged row or a non-finite value.
void write_csv(std::ostream& os, const PlotTable& table);
std::string format_double(double v);

/// Columns x, lc, ls on x_min, x_min + step, ... <= x_max (x_max included
/// when it lands on the grid), through the batch Horner kernel.
PlotTable plot_trig(double x_min, double x_max, double step);

struct TrigZeros {
  std::optional<double> negative;  // closest to the origin from below
  std::optional<double> positive;  // closest to the origin from above
};
/// Zeros of ls bracketed by sign changes between consecutive rows (rows
/// straddling the trivial zero at x = 0 are skipped), refined by bisection on ls.
TrigZeros ls_zeros(const PlotTable& table, double tol = 1e-14);

}  // namespace peo::io
