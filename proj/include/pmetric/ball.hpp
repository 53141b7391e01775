#pragma once

#include <optional>
#include <utility>

#include "pmetric/space.hpp"

namespace pmetric {

struct Ball {
  Point center;
  double radius;
};

/// p(center, candidate) - p(center, center) < eps. Balls with eps <= 0 are
/// empty and are answered without evaluating p.
bool ball_contains(const PmSpace& space, const Point& center, double eps, const Point& candidate);

/// The separating balls B_{p(x,y)-p(x,x)}(x) and B_{p(y,x)-p(y,y)}(y) when both
/// radii are positive, each verified to hold its center and exclude the other
/// point. Throws Error(invalid_argument) when x == y.
std::optional<std::pair<Ball, Ball>> t1_witness(const PmSpace& space, const Point& x,
                                                const Point& y);

}  // namespace pmetric
