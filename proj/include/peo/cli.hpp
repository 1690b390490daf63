#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "peo/special_functions.hpp"

namespace peo::cli {

/// Malformed command line or configuration (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct SolveOptions {
  std::optional<double> order;  // overrides the config's "order"
  SeriesEvalConfig eval;
};

/// Dispatches a problem config to its solver and returns the solution
/// document. Throws ConfigError for a malformed config and lets solver
/// errors (DomainError and friends) through.
nlohmann::json solve_config(const nlohmann::json& config, const SolveOptions& opt);

/// Whole command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace peo::cli
