#pragma once

#include <stdexcept>
#include <string>

namespace wg {

// A request exceeds the supported enumeration scale (CLI exit code 3).
class unsupported_scale_error : public std::runtime_error {
 public:
  explicit unsupported_scale_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Floating-point accumulation or sampling broke down (CLI exit code 4).
class numerical_failure_error : public std::runtime_error {
 public:
  explicit numerical_failure_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace wg
