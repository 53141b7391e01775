#include "pmetric/maps.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pmetric/error.hpp"

namespace pmetric::orbit {

namespace {

// Lifts a real function to points: keeps the tag, fixes the adjoined point.
SelfMap numeric_map(std::string name, std::map<std::string, double> params,
                    std::function<double(double)> fn) {
  return SelfMap(std::move(name), std::move(params), [fn = std::move(fn), name](const Point& p) {
    if (p.is_adjoined()) return p;
    if (p.is_real()) {
      const double v = fn(p.number());
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::map_domain, name + " produced a non-finite value at " + format_point(p));
      }
      return Point::real(v);
    }
    if (p.is_positive_real()) {
      const double v = fn(p.number());
      if (!std::isfinite(v) || !(v > 0.0)) {
        throw Error(ErrorCode::map_domain,
                    name + " maps " + format_point(p) + " to " + format_number(v) + ", outside (0, inf)");
      }
      return Point::positive_real(v);
    }
    throw Error(ErrorCode::map_domain, name + " is not defined on word points");
  });
}

}  // namespace

std::string SelfMap::spec() const {
  std::string out = name_;
  if (name_ == "linear") {
    out += ":" + format_number(parameters_.at("a")) + "," + format_number(parameters_.at("b"));
  } else if (name_ == "translate") {
    out += ":" + format_number(parameters_.at("b"));
  }
  return out;
}

SelfMap linear(double a, double b) {
  return numeric_map("linear", {{"a", a}, {"b", b}}, [a, b](double x) { return a * x + b; });
}

SelfMap halving() {
  return numeric_map("halving", {}, [](double x) { return x / 2.0; });
}

SelfMap translate(double b) {
  return numeric_map("translate", {{"b", b}}, [b](double x) { return x + b; });
}

SelfMap exp_sin() {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double scale = std::exp(half_pi);
  return numeric_map("exp_sin", {}, [scale](double x) {
    return std::exp(x) * std::sin(x) / scale + half_pi - 1.0;
  });
}

SelfMap identity() {
  return SelfMap("identity", {}, [](const Point& p) { return p; });
}

std::vector<std::string> builtin_map_names() {
  return {"linear:A,B", "halving", "translate:B", "exp_sin", "identity"};
}

SelfMap parse_map(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      args.push_back(parse_number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  auto arity = [&](std::size_t n) {
    if (args.size() != n) {
      throw Error(ErrorCode::parse_error, "map '" + std::string(name) + "' takes " + std::to_string(n) +
                                              " parameter(s), got " + std::to_string(args.size()));
    }
  };
  if (name == "linear") {
    arity(2);
    return linear(args[0], args[1]);
  }
  if (name == "translate") {
    arity(1);
    return translate(args[0]);
  }
  if (name == "halving") {
    arity(0);
    return halving();
  }
  if (name == "exp_sin") {
    arity(0);
    return exp_sin();
  }
  if (name == "identity") {
    arity(0);
    return identity();
  }
  throw Error(ErrorCode::unknown_name, "unknown map '" + std::string(name) + "'");
}

}  // namespace pmetric::orbit
