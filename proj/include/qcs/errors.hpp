#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

// Bad run configuration (unknown key, inconsistent values, unusable file).
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure at run time (iteration budget exhausted, non-finite
// result). The CLI maps this to exit code 3.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcs
