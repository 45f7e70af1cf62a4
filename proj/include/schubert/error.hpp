#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schubert {

enum class ErrorKind {
  invalid_tuple,
  invalid_argument,
  degenerate_top_tuple,
  bottom_tuple,
  degenerate,
  budget_exceeded,
  overflow,
  index_out_of_range,
  mismatched_shape,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this one exception type; the
// kind lets callers (notably the CLI) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schubert
