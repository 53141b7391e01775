#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmetric/orbit.hpp"

namespace pmetric::orbit {

enum class TheoremVariant { t1_9_1, t1_9_2, t1_9_3, t1_10_1, t1_10_2, t6_4, t7_3 };

std::string_view to_string(TheoremVariant v);
/// Accepts "T1.9-1" ... "T7.3". Throws Error(unknown_name).
TheoremVariant parse_variant(std::string_view name);

struct SolverOptions {
  double tolerance = 1e-9;
  std::size_t window = 32;
  std::size_t max_steps = 1000000;
  double blowup = 1e12;
  /// T6.4 / T7.3
  double r = 0.0;
  /// T6.4
  double c = 0.5;
  /// T7.3; defaults to linear with k = 1/2 at r.
  std::optional<PhiFunction> phi;
  std::size_t prefix = 32;
  /// Sampler for the non-expansive and lower-bound hypotheses.
  std::optional<PointSampler> sampler;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  /// Extra starting points for the multi-start uniqueness witness.
  std::vector<Point> extra_starts;
};

enum class SolveStatus {
  success,
  orbit_not_cauchy,
  hypothesis_failed,
  residual_exceeded,
  /// another start from extra_starts reached a different candidate
  uniqueness_violated,
};

std::string_view to_string(SolveStatus s);

struct ConditionCheck {
  std::string name;
  bool passed;
  std::string evidence;
};

struct FixedPointCertificate {
  TheoremVariant variant;
  SolveStatus status = SolveStatus::orbit_not_cauchy;
  Point candidate = Point::real(0);
  Point image = Point::real(0);
  double self_distance = 0.0;
  double p_a_fa = 0.0;
  double p_fa_fa = 0.0;
  /// |p(a, fa) - p(a, a)| + |p(fa, fa) - p(a, a)|
  double residual = 0.0;
  double tolerance = 0.0;
  std::optional<double> r;
  std::size_t steps = 0;
  CauchyVerdict orbit_verdict = CauchyVerdict::not_converged;
  double r_estimate = 0.0;
  std::vector<ConditionCheck> conditions;
  /// Candidates reached from SolverOptions::extra_starts.
  std::vector<Point> other_candidates;

  bool succeeded() const { return status == SolveStatus::success; }
};

/// Runs the orbit from x0, takes the last iterate as the candidate a, checks
/// the chosen theorem's hypotheses at a and then the conclusion fa = a via
/// the residuals. The orbit runs at tolerance tol/2 so that the window
/// guarantee |p(a, x_n) - p(a, a)| <= tol holds for the special-limit check.
/// Failures are reported in the certificate's status, never thrown.
FixedPointCertificate solve_fixed_point(const PmSpace& space, const SelfMap& f, const Point& x0,
                                        TheoremVariant variant, const SolverOptions& options);

/// Recomputes residuals from the recorded candidate. True iff they stay
/// within the certificate's tolerance (and, for T6.4/T7.3, p(a,a) within tol
/// of r).
bool replay_certificate(const PmSpace& space, const SelfMap& f,
                        const FixedPointCertificate& certificate);

}  // namespace pmetric::orbit
