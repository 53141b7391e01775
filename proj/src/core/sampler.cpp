#include "pmetric/sampler.hpp"

#include <algorithm>
#include <array>

#include "pmetric/error.hpp"

namespace pmetric {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "uniform_index needs n > 0");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

namespace {

std::vector<double> witness_values(double lo, double hi) {
  constexpr std::array<double, 9> candidates{0.0, 1.0, -1.0, 0.5, -0.5, 0.25, -0.25, 0.125, -0.125};
  std::vector<double> out;
  for (double v : candidates) {
    if (v >= lo && v <= hi) out.push_back(v);
  }
  out.push_back(lo);
  out.push_back(hi);
  return out;
}

double draw_interval(Rng& rng, double lo, double hi, const std::vector<double>& specials) {
  if (uniform01(rng) < 0.3) return specials[uniform_index(rng, specials.size())];
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace

PointSampler real_interval_sampler(double lo, double hi) {
  if (!(lo <= hi)) throw Error(ErrorCode::invalid_argument, "sampler interval needs lo <= hi");
  auto specials = witness_values(lo, hi);
  return PointSampler("real[" + format_number(lo) + "," + format_number(hi) + "]", PointKind::real,
                      [lo, hi, specials](Rng& rng) {
                        return Point::real(draw_interval(rng, lo, hi, specials));
                      });
}

PointSampler real_adjoined_sampler() {
  auto specials = witness_values(-10.0, 10.0);
  return PointSampler("real[-10,10]+a", PointKind::real_adjoined, [specials](Rng& rng) {
    if (uniform01(rng) < 0.1) return Point::adjoined();
    return Point::real(draw_interval(rng, -10.0, 10.0, specials));
  });
}

PointSampler positive_real_sampler(double hi) {
  if (!(hi > 0.0)) throw Error(ErrorCode::invalid_argument, "positive sampler needs hi > 0");
  return PointSampler("positive(0," + format_number(hi) + "]", PointKind::positive_real,
                      [hi](Rng& rng) {
                        // 1 - u lies in (0, 1]
                        return Point::positive_real(hi * (1.0 - uniform01(rng)));
                      });
}

PointSampler word_sampler(std::string alphabet, std::size_t max_len) {
  if (alphabet.empty()) throw Error(ErrorCode::invalid_argument, "word sampler needs symbols");
  std::string name = "words{" + alphabet + "}^0.." + std::to_string(max_len);
  return PointSampler(std::move(name), PointKind::word,
                      [alphabet = std::move(alphabet), max_len](Rng& rng) {
                        const auto len = uniform_index(rng, max_len + 1);
                        std::string w;
                        w.reserve(len);
                        for (std::uint64_t i = 0; i < len; ++i) {
                          w.push_back(alphabet[uniform_index(rng, alphabet.size())]);
                        }
                        return Point::word(std::move(w));
                      });
}

PointSampler finite_sampler(std::string name, PointKind kind, std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "finite sampler needs points");
  return PointSampler(std::move(name), kind, [points = std::move(points)](Rng& rng) {
    return points[uniform_index(rng, points.size())];
  });
}

}  // namespace pmetric
