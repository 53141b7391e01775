#include "pmetric/solver.hpp"

#include <cmath>
#include <string>

#include "pmetric/axioms.hpp"
#include "pmetric/error.hpp"

namespace pmetric::orbit {

std::string_view to_string(TheoremVariant v) {
  switch (v) {
    case TheoremVariant::t1_9_1: return "T1.9-1";
    case TheoremVariant::t1_9_2: return "T1.9-2";
    case TheoremVariant::t1_9_3: return "T1.9-3";
    case TheoremVariant::t1_10_1: return "T1.10-1";
    case TheoremVariant::t1_10_2: return "T1.10-2";
    case TheoremVariant::t6_4: return "T6.4";
    case TheoremVariant::t7_3: return "T7.3";
  }
  return "unknown";
}

TheoremVariant parse_variant(std::string_view name) {
  for (auto v : {TheoremVariant::t1_9_1, TheoremVariant::t1_9_2, TheoremVariant::t1_9_3,
                 TheoremVariant::t1_10_1, TheoremVariant::t1_10_2, TheoremVariant::t6_4,
                 TheoremVariant::t7_3}) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorCode::unknown_name, "unknown theorem variant '" + std::string(name) + "'");
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::success: return "success";
    case SolveStatus::orbit_not_cauchy: return "orbit_not_cauchy";
    case SolveStatus::hypothesis_failed: return "hypothesis_failed";
    case SolveStatus::residual_exceeded: return "residual_exceeded";
    case SolveStatus::uniqueness_violated: return "uniqueness_violated";
  }
  return "unknown";
}

namespace {

std::string num(double v) { return format_number(v); }

double d(const PmSpace& s, const Point& x, const Point& y) { return s.distance(x, y).value(); }

// Lazily evaluated hypothesis checks, each recorded once in the certificate.
class HypothesisBook {
 public:
  HypothesisBook(const PmSpace& space, const SelfMap& f, const Point& x0, const OrbitTrace& trace,
                 const Point& a, const Point& fa, const SolverOptions& options,
                 FixedPointCertificate& cert)
      : space_(space), f_(f), x0_(x0), trace_(trace), a_(a), fa_(fa), options_(options), cert_(cert) {}

  bool nonexpansive() {
    if (!nonexpansive_) {
      const PointSampler sampler = options_.sampler.value_or(fallback_sampler());
      const auto rep = check_nonexpansive(space_, f_, sampler,
                                          {options_.samples, options_.tolerance, options_.seed});
      nonexpansive_ = rep.passed;
      record("non_expansive", rep.passed,
             "sampler " + sampler.name() + ", " + std::to_string(rep.samples_used) +
                 " pairs, worst p(fx,fy)-p(x,y) = " + num(rep.worst_margin) + " at (" +
                 format_point(rep.worst_x) + ", " + format_point(rep.worst_y) + ")");
    }
    return *nonexpansive_;
  }

  bool orbitally_continuous() {
    if (!continuous_) {
      try {
        const auto rep = check_orbital_continuity_at(space_, f_, trace_, a_, options_.tolerance);
        continuous_ = rep.passed;
        record("orbital_continuity", rep.passed,
               "p(fa,fa) = " + num(rep.p_fa_fa) + ", p(a,fa) = " + num(rep.p_a_fa));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::precondition_failed) throw;
        continuous_ = false;
        record("orbital_continuity", false, e.what());
      }
    }
    return *continuous_;
  }

  bool bounded_below(const std::string& label, double r0) {
    const PointSampler sampler = options_.sampler.value_or(fallback_sampler());
    AxiomCheckOptions opts{options_.samples, options_.tolerance, options_.seed, r0};
    const auto rep = check_axiom(space_, Axiom::lbd, sampler, opts);
    const bool ok = rep.verdict == Verdict::pass_on_sample;
    std::string evidence = "r0 = " + num(r0) + ", " + std::to_string(rep.samples_used) + " pairs";
    if (rep.witness) {
      evidence += ", p(" + format_point(rep.witness->points[0]) + ", " +
                  format_point(rep.witness->points[1]) + ") = " + num(rep.witness->values[0]);
    }
    record("lower_bound_" + label, ok, evidence);
    return ok;
  }

  bool strong() {
    const bool ok = is_strong(space_.declared_class());
    record("strong_class", ok, "declared class " + std::string(to_string(space_.declared_class())));
    return ok;
  }

  bool r_contractive() {
    const auto rep = check_orbitally_r_contractive(space_, f_, x0_, options_.r, options_.c,
                                                   options_.prefix, options_.tolerance);
    std::string evidence = "r = " + num(options_.r) + ", c = " + num(options_.c) + ", prefix " +
                           std::to_string(options_.prefix);
    if (!rep.passed) {
      evidence += ", first failure n = " + std::to_string(*rep.failed_n) + " (" +
                  std::string(to_string(rep.failed_condition)) + ": " + num(rep.lhs) + " vs " +
                  num(rep.rhs) + ")";
    }
    record("orbitally_r_contractive", rep.passed, evidence);
    return rep.passed;
  }

  bool phi_contractive(const PhiFunction& phi) {
    const auto rep = check_orbitally_phi_contractive(space_, f_, x0_, phi, options_.prefix,
                                                     options_.tolerance);
    const bool ok = rep.verdict == PhiVerdict::pass;
    std::string evidence = "phi = " + phi.spec() + ", r = " + num(phi.r()) + ", prefix " +
                           std::to_string(options_.prefix);
    if (!ok) {
      evidence += ", " + std::string(to_string(rep.verdict)) + " at (m, n) = (" +
                  std::to_string(*rep.failed_m) + ", " + std::to_string(*rep.failed_n) + ")";
    }
    record("orbitally_phi_contractive", ok, evidence);
    return ok;
  }

  void record(std::string name, bool passed, std::string evidence) {
    cert_.conditions.push_back({std::move(name), passed, std::move(evidence)});
  }

 private:
  PointSampler fallback_sampler() const {
    // Without an explicit sampler, sample the recorded orbit and its image.
    std::vector<Point> pts(trace_.points.begin(), trace_.points.end());
    pts.push_back(fa_);
    return finite_sampler("orbit-points", space_.point_kind(), std::move(pts));
  }

  const PmSpace& space_;
  const SelfMap& f_;
  const Point& x0_;
  const OrbitTrace& trace_;
  const Point& a_;
  const Point& fa_;
  const SolverOptions& options_;
  FixedPointCertificate& cert_;
  std::optional<bool> nonexpansive_;
  std::optional<bool> continuous_;
};

bool candidates_agree(const PmSpace& space, const Point& a, const Point& b, double tol) {
  const double ab = d(space, a, b);
  return std::abs(ab - d(space, a, a)) <= tol && std::abs(ab - d(space, b, b)) <= tol;
}

bool uses_r(TheoremVariant v) { return v == TheoremVariant::t6_4 || v == TheoremVariant::t7_3; }

}  // namespace

FixedPointCertificate solve_fixed_point(const PmSpace& space, const SelfMap& f, const Point& x0,
                                        TheoremVariant variant, const SolverOptions& options) {
  if (!(options.tolerance > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be > 0");
  const double tol = options.tolerance;
  const OrbitOptions orbit_options{options.max_steps, options.window, tol / 2.0, options.blowup};

  FixedPointCertificate cert;
  cert.variant = variant;
  cert.tolerance = tol;
  if (uses_r(variant)) cert.r = options.r;

  const OrbitTrace trace = iterate_orbit(space, f, x0, orbit_options);
  cert.steps = trace.steps();
  cert.orbit_verdict = trace.verdict;
  cert.r_estimate = trace.r_estimate;
  cert.candidate = trace.last();
  cert.image = f(cert.candidate);
  const Point& a = cert.candidate;
  const Point& fa = cert.image;
  if (!space.accepts(fa)) {
    throw Error(ErrorCode::map_domain, f.name() + " leaves the space at " + format_point(a));
  }
  cert.self_distance = d(space, a, a);
  cert.p_a_fa = d(space, a, fa);
  cert.p_fa_fa = d(space, fa, fa);
  cert.residual =
      std::abs(cert.p_a_fa - cert.self_distance) + std::abs(cert.p_fa_fa - cert.self_distance);

  if (trace.verdict != CauchyVerdict::cauchy_within_tolerance) {
    cert.conditions.push_back(
        {"cauchy_orbit", false,
         std::string(to_string(trace.verdict)) + " after " + std::to_string(trace.steps()) +
             " steps; window range [" + num(trace.tail_min) + ", " + num(trace.tail_max) + "]"});
    cert.status = SolveStatus::orbit_not_cauchy;
    return cert;
  }
  cert.conditions.push_back({"cauchy_orbit", true,
                             "window of " + std::to_string(trace.window) + " settled after " +
                                 std::to_string(trace.steps()) + " steps at tolerance " +
                                 num(tol / 2.0) + ", r_estimate = " + num(trace.r_estimate)});

  HypothesisBook book(space, f, x0, trace, a, fa, options, cert);

  const auto limit = check_special_limit(space, trace, a, tol);
  const bool special = limit.verdict == LimitVerdict::special_limit;
  book.record("special_limit", special,
              std::string(to_string(limit.verdict)) + ", max |p(a,x_n)-p(a,a)| = " +
                  num(limit.max_limit_gap) + ", p(a,a) = " + num(limit.self_distance));

  // Hypotheses; each alternative short-circuits like the theorem's "one of".
  bool hypotheses = special;
  auto one_of_nonexpansive_cases = [&](double r) {
    if (!book.nonexpansive()) return false;
    return book.orbitally_continuous() || book.bounded_below("r", r);
  };
  switch (variant) {
    case TheoremVariant::t1_9_1:
      hypotheses = hypotheses && book.nonexpansive() && book.orbitally_continuous();
      break;
    case TheoremVariant::t1_9_2:
      hypotheses = hypotheses && book.orbitally_continuous() && book.bounded_below("p(fa,fa)", cert.p_fa_fa);
      break;
    case TheoremVariant::t1_9_3:
      hypotheses = hypotheses && book.nonexpansive() && book.bounded_below("p(a,a)", cert.self_distance);
      break;
    case TheoremVariant::t1_10_1:
      hypotheses = hypotheses && book.strong() && book.nonexpansive();
      break;
    case TheoremVariant::t1_10_2:
      hypotheses = hypotheses && book.strong() && book.orbitally_continuous();
      break;
    case TheoremVariant::t6_4:
      hypotheses = hypotheses && book.r_contractive() && one_of_nonexpansive_cases(options.r);
      break;
    case TheoremVariant::t7_3: {
      const PhiFunction phi = options.phi.value_or(PhiFunction::linear(options.r, 0.5));
      if (phi.r() != options.r) {
        throw Error(ErrorCode::invalid_argument, "phi base point differs from r");
      }
      hypotheses = hypotheses && book.phi_contractive(phi) && one_of_nonexpansive_cases(options.r);
      break;
    }
  }
  if (!hypotheses) {
    cert.status = SolveStatus::hypothesis_failed;
    return cert;
  }

  bool conclusion = cert.residual <= tol;
  book.record("residual", cert.residual <= tol,
              "|p(a,fa)-p(a,a)| + |p(fa,fa)-p(a,a)| = " + num(cert.residual));
  if (space.declared_class() == SpaceClass::metric) {
    const bool ok = cert.p_a_fa <= tol;
    book.record("metric_point_residual", ok, "p(a,fa) = " + num(cert.p_a_fa));
    conclusion = conclusion && ok;
  }
  if (uses_r(variant)) {
    const double gap = std::abs(cert.self_distance - options.r);
    book.record("self_distance_equals_r", gap <= tol, "|p(a,a) - r| = " + num(gap));
    conclusion = conclusion && gap <= tol;
  }
  if (!conclusion) {
    cert.status = SolveStatus::residual_exceeded;
    return cert;
  }

  bool unique = true;
  for (const Point& start : options.extra_starts) {
    const OrbitTrace other = iterate_orbit(space, f, start, orbit_options);
    cert.other_candidates.push_back(other.last());
    const bool agree = other.verdict == CauchyVerdict::cauchy_within_tolerance &&
                       candidates_agree(space, a, other.last(), tol);
    book.record("multi_start_agreement", agree,
                "from " + format_point(start) + ": " + std::string(to_string(other.verdict)) +
                    ", candidate " + format_point(other.last()));
    unique = unique && agree;
  }
  cert.status = unique ? SolveStatus::success : SolveStatus::uniqueness_violated;
  return cert;
}

bool replay_certificate(const PmSpace& space, const SelfMap& f,
                        const FixedPointCertificate& certificate) {
  const Point& a = certificate.candidate;
  const Point fa = f(a);
  const double aa = d(space, a, a);
  const double afa = d(space, a, fa);
  const double fafa = d(space, fa, fa);
  const double residual = std::abs(afa - aa) + std::abs(fafa - aa);
  const double tol = certificate.tolerance;
  bool ok = residual <= tol;
  if (space.declared_class() == SpaceClass::metric) ok = ok && afa <= tol;
  if (certificate.r) ok = ok && std::abs(aa - *certificate.r) <= tol;
  return ok;
}

}  // namespace pmetric::orbit
