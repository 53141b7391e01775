#include "pmetric/phi.hpp"

#include <cmath>
#include <string>

#include "pmetric/error.hpp"
#include "pmetric/point.hpp"

namespace pmetric::orbit {

PhiFunction::PhiFunction(std::string name, double r, double k, std::function<double(double)> fn)
    : name_(std::move(name)), r_(r), k_(k), fn_(std::move(fn)) {}

namespace {

void require_slope(double k) {
  if (!(k > 0.0 && k <= 1.0)) {
    throw Error(ErrorCode::phi_construction, "phi slope must satisfy 0 < k <= 1, got " + format_number(k));
  }
}

}  // namespace

PhiFunction PhiFunction::linear(double r, double k) {
  require_slope(k);
  return PhiFunction("linear", r, k, [r, k](double t) { return k * (t - r); });
}

PhiFunction PhiFunction::quadratic_saturating(double r, double k) {
  require_slope(k);
  return PhiFunction("quadratic", r, k, [r, k](double t) {
    const double u = t - r;
    return k * u * u / (1.0 + u);
  });
}

PhiFunction PhiFunction::custom(std::string name, double r, std::function<double(double)> fn) {
  if (!std::isfinite(r)) throw Error(ErrorCode::phi_construction, "phi base point must be finite");
  const double at_r = fn(r);
  if (at_r != 0.0) {
    throw Error(ErrorCode::phi_construction,
                "phi(r) must be exactly 0, got phi(" + format_number(r) + ") = " + format_number(at_r));
  }
  double previous = at_r;
  for (int i = 1; i <= 400; ++i) {
    const double t = r + 0.25 * i;
    const double v = fn(t);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::phi_construction, "phi must be positive above r; phi(" + format_number(t) +
                                                   ") = " + format_number(v));
    }
    if (v < previous) {
      throw Error(ErrorCode::phi_construction,
                  "phi must be non-decreasing; it drops at t = " + format_number(t));
    }
    previous = v;
  }
  return PhiFunction(std::move(name), r, 0.0, std::move(fn));
}

PhiFunction PhiFunction::parse(std::string_view spec, double r) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const double k = colon == std::string_view::npos ? 0.5 : parse_number(spec.substr(colon + 1));
  if (name == "linear") return linear(r, k);
  if (name == "quadratic") return quadratic_saturating(r, k);
  throw Error(ErrorCode::unknown_name, "unknown phi '" + std::string(name) + "'");
}

std::string PhiFunction::spec() const {
  if (name_ == "linear" || name_ == "quadratic") return name_ + ":" + format_number(k_);
  return name_;
}

}  // namespace pmetric::orbit
