#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equiloc {

enum class ErrorKind {
  parse,
  invalid_argument,
  ring_mismatch,
  not_divisible,
  not_symmetric,
  no_dominant_variable,
  pure_parameter_denominator,
  window_overflow,
  degree_mismatch,
  repeated_weights,
  weight_dependence,
  missing_q,
  singular_linear_part,
  too_few_columns,
};

std::string_view error_kind_name(ErrorKind kind);

// All domain failures surface as this exception; the kind is stable and is
// what the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace equiloc
