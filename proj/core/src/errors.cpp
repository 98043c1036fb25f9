#include "hypersum/errors.hpp"

namespace hypersum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::domain: return "domain";
    case ErrorKind::non_invertible: return "non_invertible";
    case ErrorKind::divergent: return "divergent";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::numerical_breakdown: return "numerical_breakdown";
    case ErrorKind::precision_too_low: return "precision_too_low";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace hypersum
