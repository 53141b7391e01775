#include "pmetric/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmetric/error.hpp"

namespace pmetric::spaces {

PmSpace make_metric_line() {
  return PmSpace(kMetricLine, PointKind::real, SpaceClass::metric, 0.0,
                 [](const Point& x, const Point& y) { return std::abs(x.number() - y.number()); });
}

PmSpace make_punctured_line() {
  return PmSpace(kPuncturedLine, PointKind::real_adjoined, SpaceClass::pmetric, -1.0,
                 [](const Point& x, const Point& y) {
                   if (x.is_adjoined() && y.is_adjoined()) return 0.0;
                   if (x.is_adjoined()) return std::abs(y.number());
                   if (y.is_adjoined()) return std::abs(x.number());
                   return std::abs(x.number() - y.number()) - 1.0;
                 });
}

PmSpace make_sum_space() {
  return PmSpace(kSumSpace, PointKind::positive_real, SpaceClass::strong_pmetric, 0.0,
                 [](const Point& x, const Point& y) {
                   if (x == y) return x.number();
                   return x.number() + y.number();
                 });
}

PmSpace make_alignment_space(const alignment::AlignmentParams& params,
                             const alignment::Alphabet& alphabet, std::size_t max_len) {
  std::string name = std::string(kAlignment) + "(" + format_number(params.alpha()) + "," +
                     format_number(params.beta()) + "," + format_number(params.gamma()) + ")";
  auto validator = [alphabet, max_len](const Point& p) {
    const auto& w = p.symbols();
    if (w.size() > max_len) {
      throw Error(ErrorCode::length_cap_exceeded, "word of length " + std::to_string(w.size()) +
                                                      " exceeds the cap of " + std::to_string(max_len));
    }
    alphabet.validate_word(w);
  };
  auto distance = [params, alphabet, max_len](const Point& x, const Point& y) {
    return -alignment::optimal_score(x.symbols(), y.symbols(), params, alphabet, max_len).score;
  };
  return PmSpace(std::move(name), PointKind::word, SpaceClass::strong_pmetric, std::nullopt,
                 std::move(distance), std::move(validator));
}

std::vector<std::string> builtin_names() { return {kMetricLine, kPuncturedLine, kSumSpace, kAlignment}; }

namespace {

double param(const SpaceDescriptor& d, const std::string& key) {
  auto it = d.parameters.find(key);
  if (it == d.parameters.end()) {
    throw Error(ErrorCode::invalid_argument, "space '" + d.name + "' needs parameter '" + key + "'");
  }
  return it->second;
}

std::size_t word_cap(const SpaceDescriptor& d) {
  auto it = d.parameters.find("max_len");
  if (it == d.parameters.end()) return alignment::kDefaultMaxWordLength;
  if (!(it->second >= 0) || it->second != std::trunc(it->second)) {
    throw Error(ErrorCode::invalid_argument, "max_len must be a non-negative integer");
  }
  return static_cast<std::size_t>(it->second);
}

}  // namespace

namespace {

PmSpace construct(const SpaceDescriptor& descriptor) {
  if (descriptor.name == kMetricLine) return make_metric_line();
  if (descriptor.name == kPuncturedLine) return make_punctured_line();
  if (descriptor.name == kSumSpace) return make_sum_space();
  if (descriptor.name == kAlignment) {
    alignment::AlignmentParams params(param(descriptor, "alpha"), param(descriptor, "beta"),
                                      param(descriptor, "gamma"));
    return make_alignment_space(params, alignment::Alphabet(descriptor.alphabet), word_cap(descriptor));
  }
  throw Error(ErrorCode::unknown_name, "unknown space '" + descriptor.name + "'");
}

}  // namespace

PmSpace make_space(const SpaceDescriptor& descriptor) {
  PmSpace space = construct(descriptor);
  if (descriptor.expected_class && *descriptor.expected_class != space.declared_class()) {
    throw Error(ErrorCode::invalid_argument,
                "space '" + descriptor.name + "' is declared " +
                    std::string(to_string(space.declared_class())) + ", not " +
                    std::string(to_string(*descriptor.expected_class)));
  }
  if (descriptor.expected_lower_bound) {
    const auto lb = space.lower_bound();
    if (!lb || lb->value() != *descriptor.expected_lower_bound) {
      throw Error(ErrorCode::invalid_argument,
                  "space '" + descriptor.name + "' does not declare lower bound " +
                      format_number(*descriptor.expected_lower_bound));
    }
  }
  return space;
}

PointSampler default_sampler(const SpaceDescriptor& descriptor) {
  if (descriptor.name == kMetricLine) return real_interval_sampler(-10.0, 10.0);
  if (descriptor.name == kPuncturedLine) return real_adjoined_sampler();
  if (descriptor.name == kSumSpace) return positive_real_sampler(10.0);
  if (descriptor.name == kAlignment) {
    return word_sampler(alignment::Alphabet(descriptor.alphabet).symbols(),
                        std::min<std::size_t>(6, word_cap(descriptor)));
  }
  throw Error(ErrorCode::unknown_name, "unknown space '" + descriptor.name + "'");
}

}  // namespace pmetric::spaces
