#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "pmetric/point.hpp"
#include "pmetric/value.hpp"

namespace pmetric {

enum class SpaceClass { metric, strong_pmetric, pmetric };

std::string_view to_string(SpaceClass c);

/// True for metric and strong partial metric spaces.
bool is_strong(SpaceClass c);

/// True when `p` is a legal point for a space of the given kind.
bool kind_accepts(PointKind kind, const Point& p);

/// An immutable partial metric space: point domain, distance, declared class
/// and optional lower bound. Copies share the same underlying callables, so a
/// space may be used from several threads at once.
class PmSpace {
 public:
  using DistanceFn = std::function<double(const Point&, const Point&)>;
  /// Extra per-space point validation (e.g. alphabet membership). Throws on
  /// rejection; the kind check runs before it.
  using PointValidator = std::function<void(const Point&)>;

  PmSpace(std::string name, PointKind kind, SpaceClass declared_class,
          std::optional<double> lower_bound, DistanceFn distance,
          PointValidator validator = {});

  const std::string& name() const { return state_->name; }
  PointKind point_kind() const { return state_->kind; }
  SpaceClass declared_class() const { return state_->declared_class; }
  std::optional<PmValue> lower_bound() const;

  /// Validates both points, evaluates p and rejects non-finite results.
  PmValue distance(const Point& x, const Point& y) const;

  /// Throws Error(point_kind_mismatch) or the validator's error.
  void require_point(const Point& p) const;
  bool accepts(const Point& p) const;

  Point parse_point(std::string_view text) const;

 private:
  struct State {
    std::string name;
    PointKind kind;
    SpaceClass declared_class;
    std::optional<double> lower_bound;
    DistanceFn distance;
    PointValidator validator;
  };
  std::shared_ptr<const State> state_;
};

}  // namespace pmetric
