#include "pmetric/space.hpp"

#include <string>

#include "pmetric/error.hpp"

namespace pmetric {

std::string_view to_string(SpaceClass c) {
  switch (c) {
    case SpaceClass::metric: return "metric";
    case SpaceClass::strong_pmetric: return "strong_pmetric";
    case SpaceClass::pmetric: return "pmetric";
  }
  return "unknown";
}

bool is_strong(SpaceClass c) { return c == SpaceClass::metric || c == SpaceClass::strong_pmetric; }

bool kind_accepts(PointKind kind, const Point& p) {
  switch (kind) {
    case PointKind::real: return p.is_real();
    case PointKind::real_adjoined: return p.is_real() || p.is_adjoined();
    case PointKind::positive_real: return p.is_positive_real();
    case PointKind::word: return p.is_word();
  }
  return false;
}

PmSpace::PmSpace(std::string name, PointKind kind, SpaceClass declared_class,
                 std::optional<double> lower_bound, DistanceFn distance, PointValidator validator)
    : state_(std::make_shared<const State>(State{std::move(name), kind, declared_class, lower_bound,
                                                 std::move(distance), std::move(validator)})) {
  if (!state_->distance) throw Error(ErrorCode::invalid_argument, "space needs a distance function");
  if (lower_bound) PmValue{*lower_bound};
}

std::optional<PmValue> PmSpace::lower_bound() const {
  if (!state_->lower_bound) return std::nullopt;
  return PmValue{*state_->lower_bound};
}

void PmSpace::require_point(const Point& p) const {
  if (!kind_accepts(state_->kind, p)) {
    throw Error(ErrorCode::point_kind_mismatch, "point '" + format_point(p) + "' is not a " +
                                                    std::string(to_string(state_->kind)) +
                                                    " point of space " + state_->name);
  }
  if (state_->validator) state_->validator(p);
}

bool PmSpace::accepts(const Point& p) const {
  try {
    require_point(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

PmValue PmSpace::distance(const Point& x, const Point& y) const {
  require_point(x);
  require_point(y);
  return PmValue{state_->distance(x, y)};
}

Point PmSpace::parse_point(std::string_view text) const {
  Point p = pmetric::parse_point(state_->kind, text);
  require_point(p);
  return p;
}

}  // namespace pmetric
