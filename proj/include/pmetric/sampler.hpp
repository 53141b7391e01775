#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pmetric/point.hpp"

namespace pmetric {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits, so sampled streams
/// do not depend on the standard library's distribution implementations.
double uniform01(Rng& rng);

/// Uniform integer in [0, n). Requires n > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

/// A named, seedable point generator for one point kind.
class PointSampler {
 public:
  using DrawFn = std::function<Point(Rng&)>;

  PointSampler(std::string name, PointKind kind, DrawFn draw)
      : name_(std::move(name)), kind_(kind), draw_(std::move(draw)) {}

  const std::string& name() const { return name_; }
  PointKind kind() const { return kind_; }
  Point draw(Rng& rng) const { return draw_(rng); }

 private:
  std::string name_;
  PointKind kind_;
  DrawFn draw_;
};

/// Uniform reals on [lo, hi]; with probability 0.3 instead returns one of
/// the "witness" values inside the interval (0, ±1, ±1/2, ±1/4, ±1/8 and the
/// endpoints), which is how the interesting degenerate pairs get hit.
PointSampler real_interval_sampler(double lo, double hi);

/// Like real_interval_sampler on [-10, 10], plus the adjoined point with
/// probability 0.1.
PointSampler real_adjoined_sampler();

/// Uniform on (0, hi].
PointSampler positive_real_sampler(double hi = 10.0);

/// Words with uniform length in [0, max_len] and uniform symbols.
PointSampler word_sampler(std::string alphabet, std::size_t max_len = 6);

/// Uniform choice from a fixed finite set of points (all of one kind).
PointSampler finite_sampler(std::string name, PointKind kind, std::vector<Point> points);

}  // namespace pmetric
