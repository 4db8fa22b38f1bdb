#include "circletik/error.hpp"

namespace circletik {

const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::invalid_size: return "invalid-size";
    case ErrorCategory::dimension_mismatch: return "dimension-mismatch";
    case ErrorCategory::invalid_input: return "invalid-input";
    case ErrorCategory::undefined_argument: return "undefined-argument";
    case ErrorCategory::unsupported_topology: return "unsupported-topology";
    case ErrorCategory::singular_system: return "singular-system";
    case ErrorCategory::io: return "io";
  }
  return "unknown";
}

}  // namespace circletik
