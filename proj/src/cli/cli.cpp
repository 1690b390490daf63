#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "peo/cli.hpp"
#include "peo/errors.hpp"
#include "peo/gamma.hpp"
#include "peo/io.hpp"
#include "peo/verify.hpp"

namespace peo::cli {
namespace {

using json = nlohmann::json;

double parse_real(const std::string& s) {
  double v = 0;
  const char* end = s.data() + s.size();
  const char* begin = s.data() + (!s.empty() && s[0] == '+' ? 1 : 0);
  const auto [p, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || p != end || !std::isfinite(v)) throw ConfigError("not a finite real number: '" + s + "'");
  return v;
}

int parse_integer(const std::string& s) {
  const double v = parse_real(s);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw ConfigError("expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

struct EvalResult {
  cplx value;
  int terms;  // -1 when the function is not a truncated series
};

struct EvalFunction {
  std::string usage;
  std::size_t arity;
  std::function<EvalResult(const std::vector<std::string>&, const SeriesEvalConfig&)> run;
};

EvalResult of(SeriesValue v) { return {v.value, v.terms}; }
EvalResult plain(double v) { return {v, -1}; }

const std::map<std::string, EvalFunction>& eval_functions() {
  using A = const std::vector<std::string>&;
  using C = const SeriesEvalConfig&;
  static const std::map<std::string, EvalFunction> f{
      {"le", {"le x          Laguerre exponential sum x^r/(r!)^2", 1,
              [](A a, C c) { return of(laguerre_exp(parse_real(a[0]), c)); }}},
      {"lenm", {"lenm n m x    sum x^r/(r! Gamma(m r + n + 1))", 3,
                [](A a, C c) { return of(laguerre_e_nm(parse_integer(a[0]), parse_integer(a[1]), parse_real(a[2]), c)); }}},
      {"lc", {"lc x          Laguerre cosine", 1, [](A a, C c) { return plain(laguerre_cos(parse_real(a[0]), c)); }}},
      {"ls", {"ls x          Laguerre sine", 1, [](A a, C c) { return plain(laguerre_sin(parse_real(a[0]), c)); }}},
      {"ml", {"ml a b x      Mittag-Leffler E_{a,b}(x)", 3,
              [](A a, C c) { return of(mittag_leffler(parse_real(a[0]), parse_real(a[1]), parse_real(a[2]), c)); }}},
      {"h3", {"h3 n x y      third-order Hermite H_n(x, y)", 3,
              [](A a, C) {
                const int n = parse_integer(a[0]);
                return EvalResult{hermite3(n, parse_real(a[1]), parse_real(a[2])), n / 3 + 1};
              }}},
      {"j0", {"j0 t          Bessel J0 (quadrature oracle)", 1, [](A a, C) { return plain(bessel_j0(parse_real(a[0]))); }}},
      {"ber", {"ber z         Kelvin ber", 1, [](A a, C) { return plain(kelvin_ber(parse_real(a[0]))); }}},
      {"bei", {"bei z         Kelvin bei", 1, [](A a, C) { return plain(kelvin_bei(parse_real(a[0]))); }}},
      {"gamma", {"gamma x       Gamma function", 1, [](A a, C) { return plain(peo::gamma(parse_real(a[0]))); }}},
      {"beta", {"beta a b      Beta function", 2,
                [](A a, C) { return plain(peo::beta(parse_real(a[0]), parse_real(a[1]))); }}},
  };
  return f;
}

std::string eval_usage() {
  std::string s = "functions:\n";
  for (const auto& [name, fn] : eval_functions()) s += "  " + fn.usage + "\n";
  return s;
}

std::string format_value(cplx v) {
  if (v.imag() == 0.0) return io::format_double(v.real());
  return io::format_double(v.real()) + (v.imag() < 0 ? " - " : " + ") + io::format_double(std::abs(v.imag())) + "i";
}

/// Writes to --out when given, otherwise to `fallback`.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  body(f);
  if (!f) throw ConfigError("failed writing output file '" + path + "'");
}

struct Globals {
  std::string out_path;
  double tol = 0;
  double order = 0;
  int max_terms = 0;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* order_opt = nullptr;
  CLI::Option* max_terms_opt = nullptr;

  SeriesEvalConfig eval_config() const {
    SeriesEvalConfig c;
    if (tol_opt->count()) {
      if (!(tol > 0.0 && tol < 1.0)) throw ConfigError("--tol must be in (0, 1)");
      c.rel_tol = tol;
    }
    if (max_terms_opt->count()) {
      if (max_terms < 1) throw ConfigError("--max-terms must be >= 1");
      c.max_terms = max_terms;
    }
    return c;
  }
};

int cmd_eval(const Globals& g, const std::string& name, const std::vector<std::string>& args, std::ostream& out) {
  const auto& fns = eval_functions();
  const auto it = fns.find(name);
  if (it == fns.end()) throw ConfigError("unknown function '" + name + "'\n" + eval_usage());
  if (args.size() != it->second.arity)
    throw ConfigError("'" + name + "' takes " + std::to_string(it->second.arity) + " argument(s)\nusage: eval " + it->second.usage);
  const EvalResult r = it->second.run(args, g.eval_config());
  std::string call = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) call += (i ? ", " : "") + args[i];
  call += ")";
  out << call << " = " << format_value(r.value) << "\n";
  if (r.terms >= 0) out << "terms = " << r.terms << "\n";
  if (!g.out_path.empty()) {
    json j{{"function", name}, {"args", args}, {"value", io::complex_to_json(r.value)}};
    if (r.terms >= 0) j["terms"] = r.terms;
    emit(g.out_path, out, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
  }
  return kExitOk;
}

int cmd_solve(const Globals& g, const std::string& path, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config '" + path + "'");
  json config;
  try {
    config = json::parse(f, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  SolveOptions opt;
  opt.eval = g.eval_config();
  if (g.order_opt->count()) {
    if (!(g.order >= 0.0)) throw ConfigError("--order must be >= 0");
    opt.order = g.order;
  }
  const json result = solve_config(config, opt);
  emit(g.out_path, out, [&](std::ostream& os) { os << result.dump(2) << "\n"; });
  if (!g.out_path.empty()) out << "wrote " << result.at("problem").get<std::string>() << " solution to " << g.out_path << "\n";
  return kExitOk;
}

int cmd_plot_trig(const Globals& g, double x_min, double x_max, double step, std::ostream& out, std::ostream& err) {
  if (!(x_min < x_max)) throw ConfigError("plot-trig needs x_min < x_max");
  if (!(step > 0.0)) throw ConfigError("plot-trig needs step > 0");
  const io::PlotTable table = io::plot_trig(x_min, x_max, step);
  emit(g.out_path, out, [&](std::ostream& os) { io::write_csv(os, table); });
  // With the CSV on stdout the zero report goes to stderr.
  std::ostream& report = g.out_path.empty() ? err : out;
  const io::TrigZeros z = io::ls_zeros(table);
  report << "first negative zero of ls: " << (z.negative ? io::format_double(*z.negative) : "none in range") << "\n";
  report << "first positive zero of ls: " << (z.positive ? io::format_double(*z.positive) : "none in range") << "\n";
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& suite, std::ostream& out) {
  if (!is_verify_suite(suite)) {
    std::string names;
    for (const auto& n : verify_suite_names()) names += (names.empty() ? "" : " | ") + n;
    throw ConfigError("unknown suite '" + suite + "' (" + names + ")");
  }
  const auto results = run_verify(suite);
  std::size_t passed = 0;
  json report = json::array();
  for (const auto& r : results) {
    passed += r.pass;
    char line[64];
    std::snprintf(line, sizeof line, "residual=%.3e tol=%.0e", r.residual, r.tol);
    out << (r.pass ? "PASS " : "FAIL ") << "[" << r.suite << "] " << r.name << "  " << line << "\n";
    report.push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.pass},
                      {"residual", std::isfinite(r.residual) ? json(r.residual) : json(nullptr)}, {"tol", r.tol}});
  }
  out << passed << "/" << results.size() << " checks passed\n";
  if (!g.out_path.empty()) emit(g.out_path, out, [&](std::ostream& os) { os << report.dump(2) << "\n"; });
  return passed == results.size() ? kExitOk : kExitNumeric;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-evolution operators: special functions, solvers and checks", "peo"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--out", g.out_path, "Write the result (JSON, or CSV for plot-trig) to this file");
  g.tol_opt = app.add_option("--tol", g.tol, "Relative tolerance for series truncation");
  g.order_opt = app.add_option("--order", g.order, "Truncation order, overrides the config's \"order\"");
  g.max_terms_opt = app.add_option("--max-terms", g.max_terms, "Term budget for series evaluation");

  auto* eval = app.add_subcommand("eval", "Evaluate a function")->footer(eval_usage());
  std::string fn_name;
  std::vector<std::string> fn_args;
  eval->add_option("function", fn_name, "Function name")->required();
  eval->add_option("args", fn_args, "Real arguments");

  auto* solve = app.add_subcommand("solve", "Solve the problem described by a JSON config");
  std::string config_path;
  solve->add_option("config", config_path, "Path to the JSON config")->required();

  auto* plot = app.add_subcommand("plot-trig", "Tabulate x, lc(x), ls(x) as CSV and locate the zeros of ls");
  double x_min = -10, x_max = 10, step = 0.01;
  plot->add_option("x_min", x_min, "Start of the grid")->capture_default_str();
  plot->add_option("x_max", x_max, "End of the grid")->capture_default_str();
  plot->add_option("step", step, "Grid step")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  std::string suite = "all";
  verify->add_option("suite", suite, "all | umbral | weyl | peo | vn | special")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(g, fn_name, fn_args, out);
    if (*solve) return cmd_solve(g, config_path, out);
    if (*plot) return cmd_plot_trig(g, x_min, x_max, step, out, err);
    if (*verify) return cmd_verify(g, suite, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad config: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace peo::cli
