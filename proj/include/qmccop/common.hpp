#pragma once

#include <stdexcept>
#include <string>

namespace qmccop {

// Thrown when an iterative routine fails to converge or a quadrature
// cannot certify its target tolerance. Carries diagnostics in what().
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on invalid configuration input (bad keys, bad parameter ranges).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace qmccop
