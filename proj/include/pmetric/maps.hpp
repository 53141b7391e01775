#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pmetric/point.hpp"

namespace pmetric::orbit {

/// A named self-map. Built-in maps act on the numeric payload of real and
/// positive-real points, keep the point's tag and fix the adjoined point.
class SelfMap {
 public:
  using ApplyFn = std::function<Point(const Point&)>;

  SelfMap(std::string name, std::map<std::string, double> parameters, ApplyFn apply)
      : name_(std::move(name)), parameters_(std::move(parameters)), apply_(std::move(apply)) {}

  const std::string& name() const { return name_; }
  const std::map<std::string, double>& parameters() const { return parameters_; }

  Point operator()(const Point& x) const { return apply_(x); }

  /// "name" or "name:v1,v2" in the CLI map syntax.
  std::string spec() const;

 private:
  std::string name_;
  std::map<std::string, double> parameters_;
  ApplyFn apply_;
};

/// x -> a x + b
SelfMap linear(double a, double b);
/// x -> x / 2
SelfMap halving();
/// x -> x + b
SelfMap translate(double b);
/// x -> e^x sin(x) / e^{pi/2} + pi/2 - 1, fixed point pi/2.
SelfMap exp_sin();
/// Defined on every point kind, words included.
SelfMap identity();

/// Parses "halving", "identity", "exp_sin", "translate:B", "linear:A,B".
/// Throws Error(unknown_name) or Error(parse_error).
SelfMap parse_map(std::string_view spec);

std::vector<std::string> builtin_map_names();

}  // namespace pmetric::orbit
