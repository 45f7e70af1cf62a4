#include "schubert/error.hpp"

namespace schubert {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_tuple: return "invalid-tuple";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::degenerate_top_tuple: return "degenerate-top-tuple";
    case ErrorKind::bottom_tuple: return "bottom-tuple";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::mismatched_shape: return "mismatched-shape";
  }
  return "unknown";
}

}  // namespace schubert
