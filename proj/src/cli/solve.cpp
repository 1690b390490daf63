#include <cmath>
#include <sstream>

#include "peo/cli.hpp"
#include "peo/errors.hpp"
#include "peo/io.hpp"
#include "peo/kernel.hpp"
#include "peo/polynomial.hpp"
#include "peo/solvers.hpp"
#include "peo/volterra.hpp"

namespace peo::cli {
namespace {

using json = nlohmann::json;

// Config readers. Every shape problem becomes a ConfigError.

const json& req(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing field \"" + key + "\"");
  return j.at(key);
}

double as_double(const json& v, const std::string& what) {
  if (!v.is_number()) throw ConfigError("\"" + what + "\" must be a number");
  return v.get<double>();
}

double get_double(const json& j, const std::string& key) { return as_double(req(j, key), key); }

int get_int(const json& j, const std::string& key, int dflt) {
  if (!j.contains(key)) return dflt;
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError("\"" + key + "\" must be an integer");
  return v.get<int>();
}

cplx as_cplx(const json& v, const std::string& what) {
  try {
    return io::complex_from_json(v);
  } catch (const DomainError&) {
    throw ConfigError("\"" + what + "\" must be a number or [re, im]");
  }
}

cplx get_cplx(const json& j, const std::string& key) { return as_cplx(req(j, key), key); }

cplx get_cplx(const json& j, const std::string& key, cplx dflt) {
  return j.contains(key) ? as_cplx(j.at(key), key) : dflt;
}

/// Integer, "p/q" string, or (exactly, as a binary fraction) a float.
Rational as_rational(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError("\"" + what + "\" must be finite");
    return Rational(d);
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError("\"" + what + "\": " + e.what());
    }
  }
  throw ConfigError("\"" + what + "\" must be an integer, a \"p/q\" string or a number");
}

bool is_exact_scalar(const json& v) { return v.is_number_integer() || v.is_string(); }

GaussianRational as_gaussian(const json& v, const std::string& what) {
  if (v.is_array()) {
    if (v.size() != 2) throw ConfigError("\"" + what + "\" must be [re, im]");
    return {as_rational(v[0], what), as_rational(v[1], what)};
  }
  return GaussianRational(as_rational(v, what));
}

/// Ascending coefficients.
Polynomial get_polynomial(const json& j, const std::string& key) {
  const json& v = req(j, key);
  if (!v.is_array()) throw ConfigError("\"" + key + "\" must be an array of coefficients");
  std::vector<GaussianRational> c;
  for (const auto& e : v) c.push_back(as_gaussian(e, key));
  return Polynomial(std::move(c));
}

Eigen::MatrixXcd as_matrix(const json& v, const std::string& what, int dim = -1) {
  if (!v.is_array() || v.empty()) throw ConfigError("\"" + what + "\" must be a square matrix");
  const int n = static_cast<int>(v.size());
  if (dim >= 0 && n != dim) throw ConfigError("\"" + what + "\" must be " + std::to_string(dim) + "x" + std::to_string(dim));
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != n) throw ConfigError("\"" + what + "\" must be square");
    for (int k = 0; k < n; ++k) m(i, k) = as_cplx(v[i][k], what);
  }
  return m;
}

Matrix2 get_matrix2(const json& j, const std::string& key) { return as_matrix(req(j, key), key, 2); }

Vector2 get_vector2(const json& j, const std::string& key) {
  const json& v = req(j, key);
  if (!v.is_array() || v.size() != 2) throw ConfigError("\"" + key + "\" must be a 2-vector");
  return {as_cplx(v[0], key), as_cplx(v[1], key)};
}

std::vector<double> get_grid(const json& j, const std::string& key) {
  if (!j.contains(key)) return {};
  const json& v = j.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ConfigError("\"" + key + "\" must be a number or an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(as_double(e, key));
  return out;
}

/// Series as [[exponent, coeff], ...].
std::vector<std::pair<json, json>> get_series_terms(const json& j, const std::string& key) {
  const json& v = req(j, key);
  if (!v.is_array()) throw ConfigError("\"" + key + "\" must be an array of [exponent, coeff] pairs");
  std::vector<std::pair<json, json>> out;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number())
      throw ConfigError("\"" + key + "\" must be an array of [exponent, coeff] pairs");
    out.emplace_back(e[0], e[1]);
  }
  return out;
}

double get_order(const json& j, const SolveOptions& opt) {
  if (opt.order) return *opt.order;
  return get_double(j, "order");
}

int get_int_order(const json& j, const SolveOptions& opt) {
  const double o = get_order(j, opt);
  if (o != std::floor(o) || o < 0 || o > 1e6) throw ConfigError("\"order\" must be a non-negative integer here");
  return static_cast<int>(o);
}

EigenKernel get_kernel(const json& j) {
  const std::string k = j.value("kernel", std::string("laguerre"));
  if (k == "laguerre") return EigenKernel::laguerre();
  if (k == "exp") return EigenKernel::exp();
  if (k == "mittag-leffler" || k == "ml") return EigenKernel::mittag_leffler(get_double(j, "mu"));
  throw ConfigError("unknown kernel \"" + k + "\" (laguerre | exp | mittag-leffler)");
}

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int k = 0; k < m.cols(); ++k) r.push_back(io::complex_to_json(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

json bivariate_values(const BivariateSeries& F, const json& cfg) {
  json values = json::array();
  for (double x : get_grid(cfg, "x"))
    for (double t : get_grid(cfg, "t"))
      values.push_back({{"x", x}, {"t", t}, {"value", io::complex_to_json(F.evaluate(x, t))}});
  return values;
}

// Problem kinds ----------------------------------------------------------------------

json solve_transport(const json& c, const SolveOptions& opt) {
  const Polynomial f = get_polynomial(c, "f");
  const cplx alpha = get_cplx(c, "alpha");
  const BivariateSeries F = solve_laguerre_transport(f, alpha, get_int_order(c, opt), get_kernel(c));
  return {{"kernel", get_kernel(c).name()}, {"series", io::to_json(F)}, {"values", bivariate_values(F, c)}};
}

json solve_drift(const json& c, const SolveOptions& opt) {
  const cplx alpha = get_cplx(c, "alpha"), beta = get_cplx(c, "beta");
  json out;
  if (c.contains("f")) {
    const BivariateSeries F = laguerre_drift_series(get_polynomial(c, "f"), alpha, beta, get_int_order(c, opt));
    out["series"] = io::to_json(F);
    out["values"] = bivariate_values(F, c);
    return out;
  }
  json values = json::array();
  for (double x : get_grid(c, "x"))
    for (double t : get_grid(c, "t")) {
      const SeriesValue v = solve_laguerre_drift(alpha, beta, x, t, opt.eval);
      values.push_back({{"x", x}, {"t", t}, {"value", io::complex_to_json(v.value)}, {"terms", v.terms}});
    }
  out["values"] = values;
  return out;
}

json solve_schrodinger(const json& c, const SolveOptions& opt) {
  const int N = get_int_order(c, opt);
  BivariateSeries psi;
  double alpha, beta;
  if (c.contains("phi")) {
    const Rational a = as_rational(req(c, "alpha"), "alpha"), b = as_rational(req(c, "beta"), "beta");
    psi = solve_laguerre_schrodinger_general(get_polynomial(c, "phi"), a, b, N);
    alpha = to_double(a);
    beta = to_double(b);
  } else {
    alpha = get_double(c, "alpha");
    beta = get_double(c, "beta");
    psi = laguerre_schrodinger_series(alpha, beta, N);
  }
  const double res = N > 0 ? schrodinger_residual(psi, alpha, beta).max_abs(N - 1) : 0.0;
  return {{"series", io::to_json(psi)}, {"values", bivariate_values(psi, c)}, {"residual", res}};
}

json solve_matrix(const json& c, const SolveOptions& opt) {
  const Matrix2 M = get_matrix2(c, "matrix");
  const EigenKernel k = get_kernel(c);
  const auto [lp, lm] = eigenvalues(M);
  json out{{"kernel", k.name()}, {"eigenvalues", {io::complex_to_json(lp), io::complex_to_json(lm)}}};
  // [[0, -a], [b, 0]] with a b > 0: report the Laguerre (co)sine form.
  const bool rotation = k.kind == EigenKernel::Kind::LaguerreExp && M(0, 0) == 0.0 && M(1, 1) == 0.0 &&
                        M(0, 1).imag() == 0 && M(1, 0).imag() == 0 && -M(0, 1).real() * M(1, 0).real() > 0;
  json values = json::array();
  for (double t : get_grid(c, "t")) {
    json v{{"t", t}, {"matrix", matrix_json(matrix_kernel_exp(M, t, k, opt.eval))}};
    if (rotation) {
      const double a = -M(0, 1).real(), b = M(1, 0).real();
      const double w = std::sqrt(a * b) * t;
      v["pseudo_rotation"] = {{"argument", w}, {"lc", laguerre_cos(w, opt.eval)}, {"ls", laguerre_sin(w, opt.eval)},
                              {"upper_scale", -std::sqrt(a / b)}, {"lower_scale", std::sqrt(b / a)}};
    }
    values.push_back(v);
  }
  out["values"] = values;
  return out;
}

json solve_fractional_matrix(const json& c, const SolveOptions& opt) {
  const Matrix2 M = get_matrix2(c, "matrix");
  const double mu = get_double(c, "mu");
  const Vector2 y0 = get_vector2(c, "y0");
  json out;
  json values = json::array();
  for (double t : get_grid(c, "t")) {
    const Vector2 v = fractional_matrix_evolution(M, mu, t, y0, opt.eval);
    values.push_back({{"t", t}, {"y", {io::complex_to_json(v(0)), io::complex_to_json(v(1))}}});
  }
  out["values"] = values;
  if (c.contains("order") || opt.order) {
    const double order = get_order(c, opt);
    const auto Y = fractional_matrix_series(M, mu, y0, order);
    const auto R = fractional_matrix_residual(Y, M, mu, y0);
    out["series"] = {io::to_json(Y[0]), io::to_json(Y[1])};
    out["residual"] = std::max(series_max_abs(R[0], order - mu), series_max_abs(R[1], order - mu));
  }
  return out;
}

json solve_fractional_schrodinger(const json& c, const SolveOptions& opt) {
  const int N = get_int_order(c, opt);
  const double mu = get_double(c, "mu");
  BivariateSeries F;
  Polynomial f = Polynomial::constant(GaussianRational(1));
  double alpha, beta;
  json out;
  if (c.contains("f")) {
    const Rational a = as_rational(req(c, "alpha"), "alpha"), b = as_rational(req(c, "beta"), "beta");
    f = get_polynomial(c, "f");
    const std::string d = c.value("display", std::string("derived"));
    if (d != "derived" && d != "verbatim") throw ConfigError("\"display\" must be derived or verbatim");
    F = fractional_general_series(f, a, b, mu, N, d == "derived" ? FractionalDisplay::Derived : FractionalDisplay::Verbatim);
    alpha = to_double(a);
    beta = to_double(b);
    out["display"] = d;
  } else {
    alpha = get_double(c, "alpha");
    beta = get_double(c, "beta");
    F = fractional_schrodinger_series(alpha, beta, mu, N);
  }
  out["series"] = io::to_json(F);
  out["values"] = bivariate_values(F, c);
  out["residual"] = N > 0 ? fractional_schrodinger_residual(F, alpha, beta, mu, f).max_abs((N - 1) * mu) : 0.0;
  return out;
}

std::string rational_text(const Rational& q) { return to_string(q); }

json solve_vn(const json& c, const SolveOptions& opt) {
  const auto terms = get_series_terms(c, "f");
  const json y0j = c.contains("y0") ? c.at("y0") : json(1);
  bool exact = is_exact_scalar(y0j) && (!opt.order || *opt.order == std::floor(*opt.order));
  for (const auto& [e, v] : terms) exact = exact && e.is_number_integer() && is_exact_scalar(v);
  if (c.contains("exact")) {
    if (!c.at("exact").is_boolean()) throw ConfigError("\"exact\" must be true or false");
    if (c.at("exact").get<bool>() && !exact)
      throw ConfigError("exact solve needs integer exponents and integer or \"p/q\" coefficients");
    exact = c.at("exact").get<bool>();
  }
  const int n_iter = get_int(c, "n_iter", 1000);
  json out;
  if (exact) {
    const int order = get_int_order(c, opt);
    std::map<int, Rational> fm;
    for (const auto& [e, v] : terms) fm[e.get<int>()] += as_rational(v, "f");
    const ExactSeries f(std::move(fm));
    const Rational y0 = as_rational(y0j, "y0");
    const auto st = laguerre_vn_solve(f, y0, n_iter, order);
    out["exact"] = true;
    out["iterations"] = st.iterates.size() - 1;
    out["series"] = io::to_json(st.partial_sum);
    out["fixed_point_residual_zero"] = laguerre_vn_residual(st, f, y0).empty();
    // f = c t^m: the solution is y0 le(c t^{m+1}/(m+1)^2).
    if (f.terms().size() == 1 && f.valuation() >= 0) {
      const auto& [m, cf] = *f.terms().begin();
      const Rational k = cf / Rational((m + 1) * (m + 1));
      const ExactSeries want = y0 * laguerre_exp_exact(k, m + 1, order);
      out["closed_form"] = {{"formula", rational_text(y0) + " le(" + rational_text(k) + " t^" + std::to_string(m + 1) + ")"},
                            {"equal", want == st.partial_sum}};
    }
  } else {
    const double order = get_order(c, opt);
    std::vector<SeriesTerm> ft;
    for (const auto& [e, v] : terms) ft.push_back({e.get<double>(), as_cplx(v, "f")});
    const FracSeries f(std::move(ft));
    const cplx y0 = as_cplx(y0j, "y0");
    const auto st = laguerre_vn_solve(f, y0, n_iter, order);
    out["exact"] = false;
    out["iterations"] = st.iterates.size() - 1;
    out["series"] = io::to_json(st.partial_sum);
    const FracSeries image = laguerre_antiderivative(f * st.partial_sum).with_truncation(order);
    out["fixed_point_residual"] = series_max_abs(st.partial_sum - image - FracSeries::constant(y0, order));
  }
  json values = json::array();
  const FracSeries s = exact ? io::exact_series_from_json(out["series"]).to_frac() : io::frac_series_from_json(out["series"]);
  for (double t : get_grid(c, "t")) values.push_back({{"t", t}, {"value", io::complex_to_json(series_eval(s, t))}});
  out["values"] = values;
  return out;
}

json solve_fractional_vn(const json& c, const SolveOptions& opt) {
  const auto terms = get_series_terms(c, "f");
  std::vector<SeriesTerm> ft;
  for (const auto& [e, v] : terms) ft.push_back({e.get<double>(), as_cplx(v, "f")});
  const FracSeries f(std::move(ft));
  const double alpha = get_double(c, "alpha");
  const cplx y0 = get_cplx(c, "y0", 1.0);
  const double order = get_order(c, opt);
  const auto st = fractional_vn_solve(f, alpha, y0, get_int(c, "n_iter", 1000), order);
  json out{{"iterations", st.iterates.size() - 1},
           {"series", io::to_json(st.partial_sum)},
           {"fixed_point_residual", series_max_abs(fractional_vn_residual(st, f, alpha, y0))}};
  if (alpha < 1.0)
    out["differential_residual"] = series_max_abs(fractional_vn_differential_residual(st, f, alpha, y0), order - alpha);
  const bool minus_t = f.size() == 1 && f.terms()[0].exponent == 1.0 && f.terms()[0].coeff == cplx(-1.0) && y0 == cplx(1.0);
  json values = json::array();
  double closed_err = 0.0;
  for (double t : get_grid(c, "t")) {
    values.push_back({{"t", t}, {"value", io::complex_to_json(series_eval(st.partial_sum, t))}});
    if (minus_t)
      for (std::size_t n = 0; n < st.iterates.size(); ++n) {
        const double want = fractional_vn_monomial_closed_form(static_cast<int>(n), alpha, t);
        const double got = series_eval(st.iterates[n], t).real();
        closed_err = std::max(closed_err, std::abs(got - want) / std::max(std::abs(want), 1e-300));
      }
  }
  out["values"] = values;
  if (minus_t && !get_grid(c, "t").empty())
    out["closed_form"] = {{"formula", "(-t^(a+1)/Gamma(a))^n prod_k B(k(a+1)+2, a)"}, {"max_rel_error", closed_err}};
  return out;
}

json solve_dyson(const json& c, const SolveOptions& opt) {
  const double alpha = get_double(c, "alpha");
  const json& mats = req(c, "matrices");
  if (!mats.is_array() || mats.empty()) throw ConfigError("\"matrices\" must be a non-empty array of matrices");
  std::vector<Eigen::MatrixXcd> coeffs;
  for (const auto& m : mats) coeffs.push_back(as_matrix(m, "matrices", coeffs.empty() ? -1 : static_cast<int>(coeffs[0].rows())));
  const MatrixSeries M = MatrixSeries::polynomial(coeffs);
  const std::string variant = c.value("variant", std::string("canonical"));
  json out{{"variant", variant}};
  json values = json::array();
  if (variant == "canonical") {
    const double order = get_order(c, opt);
    const auto st = dyson_evolution_operator(M, alpha, get_int(c, "n_iter", 1000), order);
    out["iterations"] = st.iterates.size() - 1;
    out["series"] = io::to_json(st.partial_sum);
    for (double t : get_grid(c, "t")) values.push_back({{"t", t}, {"matrix", matrix_json(st.partial_sum.eval(t))}});
  } else if (variant == "literal") {
    const int n_iter = get_int(c, "n_iter", 40), grid = get_int(c, "grid", 20000);
    for (double t : get_grid(c, "t"))
      values.push_back({{"t", t}, {"matrix", matrix_json(dyson_literal_value(M, alpha, t, n_iter, grid))}});
  } else {
    throw ConfigError("\"variant\" must be canonical or literal");
  }
  out["values"] = values;
  return out;
}

}  // namespace

json solve_config(const json& config, const SolveOptions& opt) {
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  const json& p = req(config, "problem");
  if (!p.is_string()) throw ConfigError("\"problem\" must be a string");
  const std::string kind = p.get<std::string>();
  json out;
  if (kind == "transport") out = solve_transport(config, opt);
  else if (kind == "drift") out = solve_drift(config, opt);
  else if (kind == "schrodinger") out = solve_schrodinger(config, opt);
  else if (kind == "matrix") out = solve_matrix(config, opt);
  else if (kind == "fractional-matrix") out = solve_fractional_matrix(config, opt);
  else if (kind == "fractional-schrodinger") out = solve_fractional_schrodinger(config, opt);
  else if (kind == "vn") out = solve_vn(config, opt);
  else if (kind == "fractional-vn") out = solve_fractional_vn(config, opt);
  else if (kind == "dyson") out = solve_dyson(config, opt);
  else
    throw ConfigError("unknown problem \"" + kind +
                      "\" (transport | drift | schrodinger | matrix | fractional-matrix | "
                      "fractional-schrodinger | vn | fractional-vn | dyson)");
  out["problem"] = kind;
  return out;
}

}  // namespace peo::cli
