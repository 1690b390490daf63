#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace peo {

/// One identity check: a measured residual and whether it met its tolerance.
/// Exact (rational) checks report residual 0 on success and 1 on failure.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass;
  double residual;
  double tol;
};

/// umbral, weyl, peo, vn, special, and "all" for every one of them.
const std::vector<std::string>& verify_suite_names();
bool is_verify_suite(std::string_view name);

/// Runs a suite. Throws std::invalid_argument on an unknown name. A check
/// that throws is recorded as failed with residual inf.
std::vector<CheckResult> run_verify(std::string_view suite);

}  // namespace peo
