#pragma once

#include <compare>
#include <optional>

namespace pmetric {

/// A finite real distance. Negative values are legal.
class PmValue {
 public:
  /// Throws Error(non_finite_distance) for NaN or infinities.
  explicit PmValue(double v);

  double value() const noexcept { return v_; }

  friend bool operator==(PmValue, PmValue) = default;
  friend auto operator<=>(PmValue a, PmValue b) { return a.v_ <=> b.v_; }

 private:
  double v_;
};

}  // namespace pmetric
