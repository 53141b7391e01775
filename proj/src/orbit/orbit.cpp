#include "pmetric/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pmetric/error.hpp"

namespace pmetric::orbit {

std::string_view to_string(CauchyVerdict v) {
  switch (v) {
    case CauchyVerdict::cauchy_within_tolerance: return "cauchy_within_tolerance";
    case CauchyVerdict::not_converged: return "not_converged";
    case CauchyVerdict::diverged: return "diverged";
  }
  return "unknown";
}

std::string_view to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::special_limit: return "special_limit";
    case LimitVerdict::limit_only: return "limit_only";
    case LimitVerdict::neither: return "neither";
  }
  return "unknown";
}

std::string_view to_string(InequalityKind k) {
  return k == InequalityKind::self_distance_bound ? "self_distance_bound" : "step_bound";
}

std::string_view to_string(PhiVerdict v) {
  switch (v) {
    case PhiVerdict::pass: return "pass";
    case PhiVerdict::fail: return "fail";
    case PhiVerdict::phi_domain_violation: return "phi_domain_violation";
  }
  return "unknown";
}

std::string_view to_string(MinVariant v) { return v == MinVariant::min ? "min" : "min_ratio"; }

MinVariant parse_min_variant(std::string_view name) {
  if (name == "min") return MinVariant::min;
  if (name == "min_ratio") return MinVariant::min_ratio;
  throw Error(ErrorCode::unknown_name, "unknown min-condition variant '" + std::string(name) + "'");
}

namespace {

double d(const PmSpace& s, const Point& x, const Point& y) { return s.distance(x, y).value(); }

Point apply_checked(const PmSpace& space, const SelfMap& f, const Point& x) {
  Point y = f(x);
  if (!space.accepts(y)) {
    throw Error(ErrorCode::map_domain, f.name() + " maps " + format_point(x) + " to " + format_point(y) +
                                           ", which is not a point of " + space.name());
  }
  return y;
}

// True iff every p(x_i, x_j), begin <= i <= j < end, lies within `spread` of
// every other. Pairs are visited widest index gap first, so a window that is
// still moving is rejected after a handful of evaluations.
bool window_settled(const PmSpace& space, const std::vector<Point>& pts,
                    const std::vector<double>& self, std::size_t begin, std::size_t end,
                    double spread) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  auto admit = [&](double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    return hi - lo <= spread;
  };
  if (!admit(self[end - 1]) || !admit(self[begin])) return false;
  for (std::size_t gap = end - begin - 1; gap >= 1; --gap) {
    for (std::size_t i = begin; i + gap < end; ++i) {
      if (!admit(d(space, pts[i], pts[i + gap]))) return false;
    }
  }
  for (std::size_t i = begin; i < end; ++i) {
    if (!admit(self[i])) return false;
  }
  return true;
}

void fill_tail_stats(const PmSpace& space, OrbitTrace& trace) {
  const std::size_t end = trace.points.size();
  const std::size_t begin = trace.tail_begin();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t j = i; j < end; ++j) {
      const double v = i == j ? trace.self_distances[i] : d(space, trace.points[i], trace.points[j]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  trace.tail_min = lo;
  trace.tail_max = hi;
  trace.r_estimate = lo + (hi - lo) / 2.0;
}

}  // namespace

std::vector<Point> orbit_points(const PmSpace& space, const SelfMap& f, const Point& x0,
                                std::size_t last_index) {
  space.require_point(x0);
  std::vector<Point> pts{x0};
  pts.reserve(last_index + 1);
  for (std::size_t i = 0; i < last_index; ++i) pts.push_back(apply_checked(space, f, pts.back()));
  return pts;
}

OrbitTrace iterate_orbit(const PmSpace& space, const SelfMap& f, const Point& x0,
                         const OrbitOptions& options) {
  if (options.window < 2) throw Error(ErrorCode::invalid_argument, "window must be >= 2");
  if (options.max_steps < options.window) {
    throw Error(ErrorCode::invalid_argument, "max_steps must be >= window");
  }
  if (!(options.tolerance > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be > 0");
  space.require_point(x0);

  OrbitTrace trace;
  trace.window = options.window;
  trace.tolerance = options.tolerance;
  trace.points.push_back(x0);
  trace.self_distances.push_back(d(space, x0, x0));

  auto blown = [&](double v) { return std::abs(v) > options.blowup; };
  if (blown(trace.self_distances.back())) {
    trace.window = 1;
    trace.verdict = CauchyVerdict::diverged;
    fill_tail_stats(space, trace);
    return trace;
  }

  for (std::size_t step = 1; step <= options.max_steps; ++step) {
    Point next = apply_checked(space, f, trace.points.back());
    const double self = d(space, next, next);
    const double to_prev = d(space, next, trace.points.back());
    const double to_start = d(space, next, x0);
    trace.points.push_back(std::move(next));
    trace.self_distances.push_back(self);

    if (blown(self) || blown(to_prev) || blown(to_start)) {
      trace.window = std::min(options.window, trace.points.size());
      trace.verdict = CauchyVerdict::diverged;
      fill_tail_stats(space, trace);
      return trace;
    }
    const std::size_t end = trace.points.size();
    if (end >= options.window &&
        window_settled(space, trace.points, trace.self_distances, end - options.window, end,
                       2.0 * options.tolerance)) {
      trace.verdict = CauchyVerdict::cauchy_within_tolerance;
      fill_tail_stats(space, trace);
      return trace;
    }
  }
  trace.verdict = CauchyVerdict::not_converged;
  fill_tail_stats(space, trace);
  return trace;
}

LimitReport check_special_limit(const PmSpace& space, const OrbitTrace& trace, const Point& a,
                                double tol) {
  space.require_point(a);
  if (trace.points.empty()) throw Error(ErrorCode::invalid_argument, "empty orbit trace");
  LimitReport report;
  report.self_distance = d(space, a, a);
  report.r_estimate = trace.r_estimate;
  for (std::size_t i = trace.tail_begin(); i < trace.points.size(); ++i) {
    report.max_limit_gap =
        std::max(report.max_limit_gap, std::abs(d(space, a, trace.points[i]) - report.self_distance));
  }
  if (report.max_limit_gap > tol) {
    report.verdict = LimitVerdict::neither;
  } else if (trace.verdict == CauchyVerdict::cauchy_within_tolerance &&
             std::abs(report.self_distance - trace.r_estimate) <= tol) {
    report.verdict = LimitVerdict::special_limit;
  } else {
    report.verdict = LimitVerdict::limit_only;
  }
  return report;
}

NonExpansiveReport check_nonexpansive(const PmSpace& space, const SelfMap& f,
                                      const PointSampler& sampler,
                                      const SampledCheckOptions& options) {
  if (options.samples < 1) throw Error(ErrorCode::invalid_argument, "need at least one sample");
  if (sampler.kind() != space.point_kind()) {
    throw Error(ErrorCode::point_kind_mismatch, "sampler/space point kind mismatch");
  }
  NonExpansiveReport report;
  report.worst_margin = -std::numeric_limits<double>::infinity();
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    Point x = sampler.draw(rng);
    Point y = sampler.draw(rng);
    const double margin =
        d(space, apply_checked(space, f, x), apply_checked(space, f, y)) - d(space, x, y);
    if (margin > report.worst_margin) {
      report.worst_margin = margin;
      report.worst_x = std::move(x);
      report.worst_y = std::move(y);
    }
  }
  report.samples_used = options.samples;
  report.passed = report.worst_margin <= options.tolerance;
  return report;
}

ContinuityReport check_orbital_continuity_at(const PmSpace& space, const SelfMap& f,
                                             const OrbitTrace& trace, const Point& a, double tol) {
  const auto limit = check_special_limit(space, trace, a, tol);
  if (limit.verdict != LimitVerdict::special_limit) {
    throw Error(ErrorCode::precondition_failed,
                "orbital continuity criterion needs a special limit; " + format_point(a) + " is " +
                    std::string(to_string(limit.verdict)));
  }
  const Point fa = apply_checked(space, f, a);
  ContinuityReport report;
  report.p_fa_fa = d(space, fa, fa);
  report.p_a_fa = d(space, a, fa);
  report.passed = std::abs(report.p_fa_fa - report.p_a_fa) <= tol;
  return report;
}

RContractiveReport check_orbitally_r_contractive(const PmSpace& space, const SelfMap& f,
                                                 const Point& x0, double r, double c,
                                                 std::size_t prefix, double tol) {
  if (!(c >= 0.0 && c < 1.0)) throw Error(ErrorCode::invalid_argument, "need 0 <= c < 1");
  if (prefix < 2) throw Error(ErrorCode::invalid_argument, "prefix must be >= 2");
  RContractiveReport report;
  report.orbit = orbit_points(space, f, x0, prefix);
  const auto& x = report.orbit;
  const double base = std::abs(d(space, x[1], x[0]));
  for (std::size_t n = 0; n + 2 <= prefix; ++n) {
    const double self = d(space, x[n], x[n]);
    if (r > self + tol) {
      report.passed = false;
      report.failed_n = n;
      report.failed_condition = InequalityKind::self_distance_bound;
      report.lhs = r;
      report.rhs = self;
      return report;
    }
    const double lhs = d(space, x[n + 2], x[n + 1]);
    const double rhs = r + std::pow(c, static_cast<double>(n + 1)) * base;
    if (lhs > rhs + tol) {
      report.passed = false;
      report.failed_n = n;
      report.failed_condition = InequalityKind::step_bound;
      report.lhs = lhs;
      report.rhs = rhs;
      return report;
    }
  }
  return report;
}

PhiContractiveReport check_orbitally_phi_contractive(const PmSpace& space, const SelfMap& f,
                                                     const Point& x0, const PhiFunction& phi,
                                                     std::size_t prefix, double tol) {
  if (prefix < 2) throw Error(ErrorCode::invalid_argument, "prefix must be >= 2");
  PhiContractiveReport report;
  report.orbit = orbit_points(space, f, x0, prefix);
  const auto& x = report.orbit;
  const double r = phi.r();
  for (std::size_t m = 0; m < prefix; ++m) {
    for (std::size_t n = 0; n < prefix; ++n) {
      const double t = d(space, x[m], x[n]);
      if (t < r - tol) {
        report.verdict = PhiVerdict::phi_domain_violation;
        report.failed_m = m;
        report.failed_n = n;
        report.lhs = t;
        report.rhs = r;
        return report;
      }
      const double lhs = d(space, x[m + 1], x[n + 1]);
      const double rhs = t - phi(std::max(t, r));
      if (lhs > rhs + tol) {
        report.verdict = PhiVerdict::fail;
        report.failed_m = m;
        report.failed_n = n;
        report.lhs = lhs;
        report.rhs = rhs;
        return report;
      }
    }
  }
  return report;
}

TailBoundReport check_r_contractive_tail_bound(const PmSpace& space, std::span<const Point> orbit,
                                               double r, double c, double tol) {
  if (!(c >= 0.0 && c < 1.0)) throw Error(ErrorCode::invalid_argument, "need 0 <= c < 1");
  if (orbit.size() < 2) throw Error(ErrorCode::invalid_argument, "orbit needs at least two points");
  TailBoundReport report;
  const double base = std::abs(d(space, orbit[1], orbit[0]));
  for (std::size_t n = 0; n < orbit.size(); ++n) {
    const double bound = r + std::pow(c, static_cast<double>(n)) * base / (1.0 - c) + tol;
    for (std::size_t m = n + 1; m < orbit.size(); ++m) {
      ++report.pairs_checked;
      const double lhs = d(space, orbit[m], orbit[n]);
      if (lhs > bound) {
        report.passed = false;
        report.failed_m = m;
        report.failed_n = n;
        report.lhs = lhs;
        report.rhs = bound;
        return report;
      }
    }
  }
  return report;
}

ProbeReport check_probe_convergence(const PmSpace& space, const OrbitTrace& trace, const Point& a,
                                    std::span<const Point> probes, double eps) {
  ProbeReport report;
  for (const Point& y : probes) {
    const double target = d(space, a, y);
    for (std::size_t i = trace.tail_begin(); i < trace.points.size(); ++i) {
      const double gap = std::abs(d(space, trace.points[i], y) - target);
      if (gap > report.max_gap) {
        report.max_gap = gap;
        report.worst_probe = y;
      }
    }
  }
  report.passed = report.max_gap <= eps;
  return report;
}

MinConditionReport check_min_condition(const PmSpace& space, const SelfMap& f,
                                       const PointSampler& sampler, double c, MinVariant variant,
                                       const SampledCheckOptions& options,
                                       std::span<const Point> orbit) {
  if (!(c > 0.0 && c < 1.0)) throw Error(ErrorCode::invalid_argument, "need 0 < c < 1");
  if (options.samples < 1) throw Error(ErrorCode::invalid_argument, "need at least one sample");
  if (sampler.kind() != space.point_kind()) {
    throw Error(ErrorCode::point_kind_mismatch, "sampler/space point kind mismatch");
  }
  MinConditionReport report;
  report.worst_excess = -std::numeric_limits<double>::infinity();
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    Point x = sampler.draw(rng);
    Point y = sampler.draw(rng);
    const Point fx = apply_checked(space, f, x);
    const Point fy = apply_checked(space, f, y);
    const double pxy = d(space, x, y);
    const double pfxfy = d(space, fx, fy);
    const double pxfx = d(space, x, fx);
    const double pyfy = d(space, y, fy);
    double lhs = 0.0;
    if (variant == MinVariant::min) {
      lhs = std::min({pfxfy, pxfx, pyfy});
    } else {
      if (pxfx == 0.0 || pyfy == 0.0) {
        ++report.skipped;
        continue;
      }
      const double den = std::min(pxfx, pyfy);
      if (den == 0.0) throw Error(ErrorCode::division_by_zero, "min_ratio denominator vanished");
      lhs = std::min(pfxfy * pxy, pxfx * pyfy) / den;
    }
    ++report.samples_used;
    const double rhs = c * pxy;
    if (lhs - rhs > report.worst_excess) {
      report.worst_excess = lhs - rhs;
      report.worst_lhs = lhs;
      report.worst_rhs = rhs;
      report.worst_x = std::move(x);
      report.worst_y = std::move(y);
    }
  }
  report.passed = report.samples_used == 0 || report.worst_excess <= options.tolerance;

  for (std::size_t n = 0; n + 2 < orbit.size(); ++n) {
    ++report.orbit_checked;
    const double lhs = d(space, orbit[n + 1], orbit[n + 2]);
    const double rhs = c * d(space, orbit[n], orbit[n + 1]);
    if (lhs > rhs + options.tolerance) {
      report.orbit_passed = false;
      report.orbit_failed_n = n;
      break;
    }
  }
  return report;
}

}  // namespace pmetric::orbit
