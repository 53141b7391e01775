#include "pmetric/ball.hpp"

#include "pmetric/error.hpp"

namespace pmetric {

bool ball_contains(const PmSpace& space, const Point& center, double eps, const Point& candidate) {
  if (!(eps > 0.0)) return false;
  const double gap = space.distance(center, candidate).value() - space.distance(center, center).value();
  return gap < eps;
}

std::optional<std::pair<Ball, Ball>> t1_witness(const PmSpace& space, const Point& x,
                                                const Point& y) {
  space.require_point(x);
  space.require_point(y);
  if (x == y) throw Error(ErrorCode::invalid_argument, "t1_witness needs distinct points");

  const double rx = space.distance(x, y).value() - space.distance(x, x).value();
  const double ry = space.distance(y, x).value() - space.distance(y, y).value();
  if (!(rx > 0.0) || !(ry > 0.0)) return std::nullopt;

  Ball bx{x, rx};
  Ball by{y, ry};
  const bool separated = ball_contains(space, x, rx, x) && !ball_contains(space, x, rx, y) &&
                         ball_contains(space, y, ry, y) && !ball_contains(space, y, ry, x);
  if (!separated) return std::nullopt;
  return std::pair{std::move(bx), std::move(by)};
}

}  // namespace pmetric
