#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmetric/alignment.hpp"
#include "pmetric/sampler.hpp"
#include "pmetric/space.hpp"

namespace pmetric::spaces {

/// p(x, y) = |x - y| on the reals.
PmSpace make_metric_line();

/// The reals plus one adjoined point a: p(a, a) = 0, p(a, x) = |x|,
/// p(x, y) = |x - y| - 1. A partial metric that is not strong.
PmSpace make_punctured_line();

/// Positive reals with s(x, x) = x and s(x, y) = x + y for x != y.
PmSpace make_sum_space();

/// Words over `alphabet` with p(x, y) = -optimal_score(x, y).
/// Words longer than `max_len` are rejected.
PmSpace make_alignment_space(const alignment::AlignmentParams& params,
                             const alignment::Alphabet& alphabet,
                             std::size_t max_len = alignment::kDefaultMaxWordLength);

/// Names accepted by make_space.
inline constexpr const char* kMetricLine = "metric-line";
inline constexpr const char* kPuncturedLine = "punctured-line";
inline constexpr const char* kSumSpace = "sum-space";
inline constexpr const char* kAlignment = "alignment";

std::vector<std::string> builtin_names();

struct SpaceDescriptor {
  std::string name;
  /// alignment: alpha, beta, gamma, max_len.
  std::map<std::string, double> parameters;
  /// alignment only.
  std::string alphabet = "ACGT";
  std::optional<SpaceClass> expected_class;
  std::optional<double> expected_lower_bound;
};

/// Throws Error(unknown_name) or the constructor's error.
PmSpace make_space(const SpaceDescriptor& descriptor);

/// The catalog's sampler for a built-in space:
///   metric line    uniform [-10, 10] mixed with witness values
///   punctured line the same plus the adjoined point (p = 0.1)
///   sum space      uniform (0, 10]
///   alignment      uniform lengths 0..6 over the alphabet
PointSampler default_sampler(const SpaceDescriptor& descriptor);

}  // namespace pmetric::spaces
