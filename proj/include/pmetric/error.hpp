#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmetric {

enum class ErrorCode {
  invalid_argument,
  unknown_axiom,
  unknown_name,
  point_kind_mismatch,
  non_finite_distance,
  parameter_constraint,
  length_cap_exceeded,
  invalid_symbol,
  malformed_alignment,
  size_bound_exceeded,
  map_domain,
  precondition_failed,
  phi_construction,
  division_by_zero,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pmetric
