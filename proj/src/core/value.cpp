#include "pmetric/value.hpp"

#include <cmath>
#include <string>

#include "pmetric/error.hpp"
#include "pmetric/point.hpp"

namespace pmetric {

PmValue::PmValue(double v) : v_(v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::non_finite_distance, "distance is not finite: " + format_number(v));
  }
}

}  // namespace pmetric
