#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmetric/maps.hpp"
#include "pmetric/phi.hpp"
#include "pmetric/sampler.hpp"
#include "pmetric/space.hpp"

namespace pmetric::orbit {

enum class CauchyVerdict { cauchy_within_tolerance, not_converged, diverged };

std::string_view to_string(CauchyVerdict v);

struct OrbitOptions {
  std::size_t max_steps = 100000;
  std::size_t window = 32;
  double tolerance = 1e-9;
  /// |p| above this marks the orbit as diverged.
  double blowup = 1e12;
};

/// Finite prefix of the orbit x0, f x0, ... together with the window
/// statistics used by the Cauchy stopping rule.
struct OrbitTrace {
  std::vector<Point> points;
  std::vector<double> self_distances;
  /// Extremes of p(x_m, x_n) over the last `window` iterates, diagonal
  /// included.
  double tail_max = 0.0;
  double tail_min = 0.0;
  double r_estimate = 0.0;
  CauchyVerdict verdict = CauchyVerdict::not_converged;
  std::size_t window = 0;
  double tolerance = 0.0;

  std::size_t steps() const { return points.empty() ? 0 : points.size() - 1; }
  const Point& last() const { return points.back(); }
  /// Index of the first iterate in the final window.
  std::size_t tail_begin() const { return points.size() - window; }
};

/// Picard iteration with the finite-window surrogate for the double limit:
/// stop once every p(x_m, x_n) over the last `window` iterates lies within
/// 2 tol of every other. r_estimate is the midpoint of that window's range.
/// Throws Error(invalid_argument) for bad options, Error(map_domain) when f
/// leaves the point kind, Error(non_finite_distance) on NaN/inf.
OrbitTrace iterate_orbit(const PmSpace& space, const SelfMap& f, const Point& x0,
                         const OrbitOptions& options);

/// x0, f x0, ..., f^last_index x0 with no stopping rule.
std::vector<Point> orbit_points(const PmSpace& space, const SelfMap& f, const Point& x0,
                                std::size_t last_index);

enum class LimitVerdict { special_limit, limit_only, neither };

std::string_view to_string(LimitVerdict v);

struct LimitReport {
  LimitVerdict verdict = LimitVerdict::neither;
  /// max over the tail of |p(a, x_n) - p(a, a)|
  double max_limit_gap = 0.0;
  double self_distance = 0.0;
  double r_estimate = 0.0;
};

/// limit_only when p(a, x_n) stays within tol of p(a, a) over the tail;
/// special_limit when additionally p(a, a) is within tol of r_estimate and
/// the trace is Cauchy.
LimitReport check_special_limit(const PmSpace& space, const OrbitTrace& trace, const Point& a,
                                double tol);

struct SampledCheckOptions {
  std::size_t samples = 1000;
  double tolerance = 1e-12;
  std::uint64_t seed = 0;
};

struct NonExpansiveReport {
  bool passed = true;
  Point worst_x = Point::real(0);
  Point worst_y = Point::real(0);
  /// max of p(fx, fy) - p(x, y) over the sample
  double worst_margin = 0.0;
  std::size_t samples_used = 0;
};

NonExpansiveReport check_nonexpansive(const PmSpace& space, const SelfMap& f,
                                      const PointSampler& sampler,
                                      const SampledCheckOptions& options);

struct ContinuityReport {
  bool passed = false;
  double p_fa_fa = 0.0;
  double p_a_fa = 0.0;
};

/// Orbital continuity at a special limit a via p(fa, fa) = p(a, fa).
/// Throws Error(precondition_failed) unless a is a special limit of the trace
/// at `tol`.
ContinuityReport check_orbital_continuity_at(const PmSpace& space, const SelfMap& f,
                                             const OrbitTrace& trace, const Point& a, double tol);

enum class InequalityKind { self_distance_bound, step_bound };

std::string_view to_string(InequalityKind k);

struct RContractiveReport {
  bool passed = true;
  /// First n whose condition fails, with the condition and both sides.
  std::optional<std::size_t> failed_n;
  InequalityKind failed_condition = InequalityKind::step_bound;
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<Point> orbit;
};

/// r <= p(f^n x0, f^n x0) and
/// p(f^{n+2} x0, f^{n+1} x0) <= r + c^{n+1} |p(f x0, x0)| for n = 0..prefix-2.
RContractiveReport check_orbitally_r_contractive(const PmSpace& space, const SelfMap& f,
                                                 const Point& x0, double r, double c,
                                                 std::size_t prefix, double tol);

enum class PhiVerdict { pass, fail, phi_domain_violation };

std::string_view to_string(PhiVerdict v);

struct PhiContractiveReport {
  PhiVerdict verdict = PhiVerdict::pass;
  std::optional<std::size_t> failed_m;
  std::optional<std::size_t> failed_n;
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<Point> orbit;
};

/// r <= p(f^n x0, f^n x0) and
/// p(f^{m+1} x0, f^{n+1} x0) <= p(f^m x0, f^n x0) - phi(p(f^m x0, f^n x0))
/// for 0 <= m, n <= prefix-1.
PhiContractiveReport check_orbitally_phi_contractive(const PmSpace& space, const SelfMap& f,
                                                     const Point& x0, const PhiFunction& phi,
                                                     std::size_t prefix, double tol);

struct TailBoundReport {
  bool passed = true;
  std::optional<std::size_t> failed_m;
  std::optional<std::size_t> failed_n;
  double lhs = 0.0;
  double rhs = 0.0;
  std::size_t pairs_checked = 0;
};

/// p(x_m, x_n) <= r + c^n |p(x_1, x_0)| / (1 - c) + tol for all recorded m > n.
TailBoundReport check_r_contractive_tail_bound(const PmSpace& space, std::span<const Point> orbit,
                                               double r, double c, double tol);

struct ProbeReport {
  bool passed = true;
  double max_gap = 0.0;
  std::optional<Point> worst_probe;
};

/// |p(x_n, y) - p(a, y)| <= eps for every probe y and every tail iterate.
ProbeReport check_probe_convergence(const PmSpace& space, const OrbitTrace& trace,
                                    const Point& a, std::span<const Point> probes, double eps);

enum class MinVariant { min, min_ratio };

std::string_view to_string(MinVariant v);
MinVariant parse_min_variant(std::string_view name);

struct MinConditionReport {
  bool passed = true;
  Point worst_x = Point::real(0);
  Point worst_y = Point::real(0);
  /// largest lhs - c p(x, y) seen
  double worst_excess = 0.0;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  std::size_t samples_used = 0;
  std::size_t skipped = 0;
  bool orbit_passed = true;
  std::optional<std::size_t> orbit_failed_n;
  std::size_t orbit_checked = 0;
};

/// min{p(fx,fy), p(x,fx), p(y,fy)} <= c p(x,y), or the ratio form
/// min{p(fx,fy) p(x,y), p(x,fx) p(y,fy)} / min{p(x,fx), p(y,fy)} <= c p(x,y)
/// with pairs where p(x,fx) or p(y,fy) vanishes skipped. Along `orbit` the
/// reduction p(x_{n+1}, x_{n+2}) <= c p(x_n, x_{n+1}) is checked as well.
MinConditionReport check_min_condition(const PmSpace& space, const SelfMap& f,
                                       const PointSampler& sampler, double c, MinVariant variant,
                                       const SampledCheckOptions& options,
                                       std::span<const Point> orbit = {});

}  // namespace pmetric::orbit
