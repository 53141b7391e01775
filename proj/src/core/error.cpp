#include "pmetric/error.hpp"

namespace pmetric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::unknown_axiom: return "unknown_axiom";
    case ErrorCode::unknown_name: return "unknown_name";
    case ErrorCode::point_kind_mismatch: return "point_kind_mismatch";
    case ErrorCode::non_finite_distance: return "non_finite_distance";
    case ErrorCode::parameter_constraint: return "parameter_constraint";
    case ErrorCode::length_cap_exceeded: return "length_cap_exceeded";
    case ErrorCode::invalid_symbol: return "invalid_symbol";
    case ErrorCode::malformed_alignment: return "malformed_alignment";
    case ErrorCode::size_bound_exceeded: return "size_bound_exceeded";
    case ErrorCode::map_domain: return "map_domain";
    case ErrorCode::precondition_failed: return "precondition_failed";
    case ErrorCode::phi_construction: return "phi_construction";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace pmetric
