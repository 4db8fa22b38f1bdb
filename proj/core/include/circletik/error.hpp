#pragma once

#include <stdexcept>
#include <string>

namespace circletik {

// Machine readable failure categories. The command line tool maps each
// category to a distinct exit code.
enum class ErrorCategory {
  invalid_size,
  dimension_mismatch,
  invalid_input,
  undefined_argument,
  unsupported_topology,
  singular_system,
  io,
};

const char* to_string(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(std::string(to_string(category)) + ": " + message),
        category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace circletik
