#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace pmetric::orbit {

/// Continuous non-decreasing phi: [r, inf) -> [0, inf) with phi(r) = 0 and
/// phi(t) > 0 for t > r.
class PhiFunction {
 public:
  /// t -> k (t - r), 0 < k <= 1.
  static PhiFunction linear(double r, double k);
  /// t -> k (t - r)^2 / (1 + (t - r)), 0 < k <= 1.
  static PhiFunction quadratic_saturating(double r, double k);
  /// Validates phi(r) == 0 exactly, positivity and monotonicity on a grid of
  /// sample points in (r, r + 100]. Throws Error(phi_construction).
  static PhiFunction custom(std::string name, double r, std::function<double(double)> fn);

  /// "linear:K" or "quadratic:K".
  static PhiFunction parse(std::string_view spec, double r);

  const std::string& name() const { return name_; }
  double r() const { return r_; }
  double k() const { return k_; }

  /// Requires t >= r; callers guard the domain.
  double operator()(double t) const { return fn_(t); }

  std::string spec() const;

 private:
  PhiFunction(std::string name, double r, double k, std::function<double(double)> fn);

  std::string name_;
  double r_;
  double k_;
  std::function<double(double)> fn_;
};

}  // namespace pmetric::orbit
