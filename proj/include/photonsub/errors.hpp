#pragma once

#include <stdexcept>
#include <string>

namespace photonsub {

/// Invalid or inconsistent run configuration (CLI maps this to exit code 2).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: zero-probability conditioning, eigensolver breakdown, …
/// (CLI maps this to exit code 3).
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-fatal diagnostics (perturbative-regime warnings etc.) go to stderr.
void warn(const std::string& message);

}  // namespace photonsub
