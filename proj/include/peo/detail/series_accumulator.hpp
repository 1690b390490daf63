#pragma once

#include <cmath>
#include <string>

#include "peo/errors.hpp"
#include "peo/special_functions.hpp"

namespace peo::detail {

// Shared termination rule for the entire-function series: stop once
// `consecutive_small` successive terms are each <= rel_tol * |partial sum|.
// Terms flagged as structural zeros (Gamma poles) neither count nor reset.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(const SeriesEvalConfig& cfg) : cfg_(cfg) { cfg_.validate(); }

  // Returns true when the series has converged.
  bool add(cplx term, bool structural_zero = false) {
    sum_ += term;
    ++count_;
    if (structural_zero) return false;
    if (std::abs(term) <= cfg_.rel_tol * std::abs(sum_))
      ++small_;
    else
      small_ = 0;
    return small_ >= cfg_.consecutive_small;
  }

  bool exhausted() const { return count_ >= cfg_.max_terms; }
  SeriesValue result() const { return {sum_, count_}; }

  [[noreturn]] void fail(const char* who) const {
    throw NonConvergenceError(std::string(who) + ": no convergence within " +
                              std::to_string(cfg_.max_terms) + " terms");
  }

 private:
  SeriesEvalConfig cfg_;
  cplx sum_{0.0, 0.0};
  int count_ = 0;
  int small_ = 0;
};

}  // namespace peo::detail
