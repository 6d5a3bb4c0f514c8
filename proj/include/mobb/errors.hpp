// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_ERRORS_HPP
#define MOBB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mobb {

/// LP solve could not be completed reliably even after the anti-cycling
/// fallback; callers never receive a wrong status instead of this.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Outer approximation exceeded its refinement budget.
struct IterationLimitError : std::runtime_error {
  explicit IterationLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Brute-force enumeration would exceed the 2^25 combination budget.
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mobb

#endif  // MOBB_ERRORS_HPP
