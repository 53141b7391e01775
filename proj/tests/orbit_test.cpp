#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pmetric/error.hpp"
#include "pmetric/orbit.hpp"
#include "pmetric/spaces.hpp"

using namespace pmetric;
using namespace pmetric::orbit;

namespace {

const PmSpace kLine = spaces::make_metric_line();
const PmSpace kPunctured = spaces::make_punctured_line();

double p(const PmSpace& s, const Point& x, const Point& y) { return s.distance(x, y).value(); }

template <typename Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pmetric::Error thrown";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Maps, Builtins) {
  EXPECT_EQ(halving()(Point::real(3)), Point::real(1.5));
  EXPECT_EQ(linear(0.5, 1)(Point::real(2)), Point::real(2));
  EXPECT_EQ(translate(-2)(Point::real(1)), Point::real(-1));
  EXPECT_EQ(identity()(Point::word("AC")), Point::word("AC"));
  EXPECT_NEAR(exp_sin()(Point::real(std::numbers::pi / 2)).number(), std::numbers::pi / 2, 1e-15);
  EXPECT_EQ(halving()(Point::adjoined()), Point::adjoined());
  EXPECT_TRUE(halving()(Point::positive_real(1)).is_positive_real());
  EXPECT_EQ(code_of([] { halving()(Point::word("A")); }), ErrorCode::map_domain);
  EXPECT_EQ(code_of([] { translate(-5)(Point::positive_real(1)); }), ErrorCode::map_domain);
}

TEST(Maps, ParseRoundTrip) {
  for (const auto& spec : {"halving", "identity", "exp_sin", "translate:1", "linear:0.5,1", "linear:-1/2,3"}) {
    const auto f = parse_map(spec);
    EXPECT_EQ(parse_map(f.spec()).spec(), f.spec());
  }
  EXPECT_EQ(parse_map("linear:-1/2,3")(Point::real(2)), Point::real(2));
  EXPECT_EQ(code_of([] { parse_map("rotate"); }), ErrorCode::unknown_name);
  EXPECT_EQ(code_of([] { parse_map("linear:1"); }), ErrorCode::parse_error);
}

TEST(Phi, Construction) {
  const auto lin = PhiFunction::linear(-1, 0.5);
  EXPECT_EQ(lin(-1), 0.0);
  EXPECT_EQ(lin(1), 1.0);
  const auto quad = PhiFunction::quadratic_saturating(0, 1);
  EXPECT_EQ(quad(1), 0.5);
  EXPECT_EQ(PhiFunction::parse("quadratic:1", 0)(1), 0.5);
  EXPECT_EQ(code_of([] { PhiFunction::linear(0, 1.5); }), ErrorCode::phi_construction);
  EXPECT_EQ(code_of([] { PhiFunction::custom("shifted", 0, [](double t) { return t + 1; }); }),
            ErrorCode::phi_construction);
  EXPECT_EQ(code_of([] { PhiFunction::custom("dip", 0, [](double t) { return std::abs(std::sin(t)); }); }),
            ErrorCode::phi_construction);
  EXPECT_NO_THROW(PhiFunction::custom("sqrt", 0, [](double t) { return std::sqrt(t); }));
}

TEST(Orbit, HalvingOnPuncturedLine) {
  const auto trace = iterate_orbit(kPunctured, halving(), Point::real(1), {});
  EXPECT_EQ(trace.verdict, CauchyVerdict::cauchy_within_tolerance);
  EXPECT_NEAR(trace.r_estimate, -1.0, 1e-9);
  // closed form: x_n = 2^-n, exact in binary floating point
  for (std::size_t n = 0; n < trace.points.size(); ++n) {
    EXPECT_EQ(trace.points[n].number(), std::ldexp(1.0, -static_cast<int>(n)));
  }
}

TEST(Orbit, HalvingOnMetricLine) {
  const auto trace = iterate_orbit(kLine, halving(), Point::real(1), {});
  EXPECT_EQ(trace.verdict, CauchyVerdict::cauchy_within_tolerance);
  EXPECT_NEAR(trace.r_estimate, 0.0, 1e-9);
}

TEST(Orbit, TranslationDiverges) {
  OrbitOptions opts;
  opts.blowup = 1e3;
  const auto trace = iterate_orbit(kLine, translate(1), Point::real(0), opts);
  EXPECT_EQ(trace.verdict, CauchyVerdict::diverged);
  EXPECT_LE(trace.steps(), 1001u);
}

TEST(Orbit, BudgetExhaustion) {
  OrbitOptions opts;
  opts.max_steps = 50;
  const auto trace = iterate_orbit(kLine, linear(-1, 0), Point::real(1), opts);
  EXPECT_EQ(trace.verdict, CauchyVerdict::not_converged);
  EXPECT_EQ(trace.steps(), 50u);
}

TEST(Orbit, BadOptions) {
  OrbitOptions opts;
  opts.window = 0;
  EXPECT_EQ(code_of([&] { iterate_orbit(kLine, halving(), Point::real(1), opts); }), ErrorCode::invalid_argument);
}

TEST(Orbit, PrefixPoints) {
  const auto pts = orbit_points(kLine, linear(0.5, 1), Point::real(0), 3);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[3], Point::real(1.75));
}

TEST(SpecialLimit, PuncturedLineHasTwoLimits) {
  const auto trace = iterate_orbit(kPunctured, halving(), Point::real(1), {});
  const auto zero = check_special_limit(kPunctured, trace, Point::real(0), 1e-6);
  EXPECT_EQ(zero.verdict, LimitVerdict::special_limit);
  EXPECT_EQ(zero.self_distance, -1.0);
  const auto a = check_special_limit(kPunctured, trace, Point::adjoined(), 1e-6);
  EXPECT_EQ(a.verdict, LimitVerdict::limit_only);
  EXPECT_EQ(a.self_distance, 0.0);
  EXPECT_EQ(check_special_limit(kPunctured, trace, Point::real(3), 1e-6).verdict, LimitVerdict::neither);
}

TEST(SpecialLimit, MetricLine) {
  const auto trace = iterate_orbit(kLine, halving(), Point::real(1), {});
  EXPECT_EQ(check_special_limit(kLine, trace, Point::real(0), 1e-6).verdict, LimitVerdict::special_limit);
}

TEST(NonExpansive, Examples) {
  const auto sampler = real_interval_sampler(-10, 10);
  const auto half = check_nonexpansive(kLine, halving(), sampler, {});
  EXPECT_TRUE(half.passed);
  EXPECT_LE(half.worst_margin, 0.0);
  EXPECT_EQ(half.worst_margin, -std::abs(half.worst_x.number() - half.worst_y.number()) / 2);
  const auto dbl = check_nonexpansive(kLine, linear(2, 0), sampler, {});
  EXPECT_FALSE(dbl.passed);
  EXPECT_GT(dbl.worst_margin, 0.0);
  EXPECT_TRUE(check_nonexpansive(kLine, exp_sin(), real_interval_sampler(0, 3 * std::numbers::pi / 4), {}).passed);
}

TEST(Continuity, Examples) {
  const auto trace = iterate_orbit(kLine, halving(), Point::real(1), {});
  const auto c = check_orbital_continuity_at(kLine, halving(), trace, Point::real(0), 1e-6);
  EXPECT_TRUE(c.passed);

  const auto pt = iterate_orbit(kPunctured, halving(), Point::real(1), {});
  const auto pc = check_orbital_continuity_at(kPunctured, halving(), pt, Point::real(0), 1e-6);
  EXPECT_TRUE(pc.passed);
  EXPECT_EQ(pc.p_fa_fa, -1.0);
  EXPECT_EQ(pc.p_a_fa, -1.0);

  EXPECT_EQ(code_of([&] { check_orbital_continuity_at(kPunctured, halving(), pt, Point::adjoined(), 1e-6); }),
            ErrorCode::precondition_failed);

  const Point half_pi = Point::real(std::numbers::pi / 2);
  const auto es = iterate_orbit(kLine, exp_sin(), half_pi, {});
  const auto at = check_orbital_continuity_at(kLine, exp_sin(), es, half_pi, 1e-6);
  EXPECT_TRUE(at.passed);
  EXPECT_NEAR(at.p_a_fa, 0.0, 1e-15);
}

TEST(RContractive, Examples) {
  const auto half = check_orbitally_r_contractive(kLine, halving(), Point::real(1), 0, 0.5, 32, 1e-12);
  EXPECT_TRUE(half.passed);
  // closed form: x_n = 2^-n, so p(x_{n+2}, x_{n+1}) = 2^-(n+2) and the bound is 2^-(n+1)
  for (std::size_t n = 0; n + 2 < half.orbit.size(); ++n) {
    EXPECT_EQ(p(kLine, half.orbit[n + 2], half.orbit[n + 1]), std::ldexp(1.0, -static_cast<int>(n + 2)));
  }
  const auto tr = check_orbitally_r_contractive(kLine, translate(1), Point::real(0), 0, 0.9, 32, 1e-12);
  EXPECT_FALSE(tr.passed);
  ASSERT_TRUE(tr.failed_n);
  EXPECT_EQ(*tr.failed_n, 0u);
  EXPECT_EQ(tr.failed_condition, InequalityKind::step_bound);

  const auto pun = check_orbitally_r_contractive(kPunctured, halving(), Point::real(1), -1, 0.5, 32, 1e-12);
  EXPECT_TRUE(pun.passed);
  const auto low = check_orbitally_r_contractive(kPunctured, halving(), Point::real(1), -0.5, 0.5, 32, 1e-12);
  EXPECT_FALSE(low.passed);
  EXPECT_EQ(low.failed_condition, InequalityKind::self_distance_bound);
}

TEST(PhiContractive, Examples) {
  const auto phi = PhiFunction::linear(0, 0.5);
  const auto half = check_orbitally_phi_contractive(kLine, halving(), Point::real(1), phi, 32, 1e-12);
  EXPECT_EQ(half.verdict, PhiVerdict::pass);
  const auto tr = check_orbitally_phi_contractive(kLine, translate(1), Point::real(0), phi, 32, 1e-12);
  EXPECT_EQ(tr.verdict, PhiVerdict::fail);
  ASSERT_TRUE(tr.failed_m && tr.failed_n);
  EXPECT_NE(*tr.failed_m, *tr.failed_n);
  // phi anchored above the orbit's self-distances: the check cannot evaluate phi there
  const auto dom = check_orbitally_phi_contractive(kPunctured, halving(), Point::real(1),
                                                   PhiFunction::linear(0, 0.5), 8, 1e-12);
  EXPECT_EQ(dom.verdict, PhiVerdict::phi_domain_violation);
}

TEST(TailBound, HalvingOrbit) {
  const auto pts = orbit_points(kLine, halving(), Point::real(1), 60);
  const auto rep = check_r_contractive_tail_bound(kLine, pts, 0, 0.5, 1e-12);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.pairs_checked, 61u * 60u / 2u);
  const auto tr = orbit_points(kLine, translate(1), Point::real(0), 10);
  EXPECT_FALSE(check_r_contractive_tail_bound(kLine, tr, 0, 0.5, 1e-12).passed);
}

TEST(MinCondition, Examples) {
  const auto sampler = real_interval_sampler(0, 10);
  const auto orbit = orbit_points(kLine, halving(), Point::real(1), 32);
  const auto rep = check_min_condition(kLine, halving(), sampler, 0.6, MinVariant::min, {}, orbit);
  EXPECT_TRUE(rep.passed);
  EXPECT_TRUE(rep.orbit_passed);
  EXPECT_EQ(rep.orbit_checked, 31u);
  const auto tr = check_min_condition(kLine, translate(1), sampler, 0.9, MinVariant::min, {});
  EXPECT_FALSE(tr.passed);
  EXPECT_GT(tr.worst_lhs, 0.9 * std::abs(tr.worst_x.number() - tr.worst_y.number()));
  EXPECT_EQ(parse_min_variant("min_ratio"), MinVariant::min_ratio);
}

// With a special limit a, p(x_n, y) tends to p(a, y) for every probe y.
TEST(Properties, ProbesConverge) {
  Rng rng(3);
  const auto sampler = real_adjoined_sampler();
  for (int trial = 0; trial < 40; ++trial) {
    const double slope = 2 * uniform01(rng) - 1;
    const double shift = 10 * uniform01(rng) - 5;
    if (std::abs(slope) > 0.9) continue;
    const auto f = linear(slope, shift);
    const Point x0 = Point::real(20 * uniform01(rng) - 10);
    const OrbitOptions opts;
    const auto trace = iterate_orbit(kPunctured, f, x0, opts);
    ASSERT_EQ(trace.verdict, CauchyVerdict::cauchy_within_tolerance);
    const Point a = Point::real(shift / (1 - slope));
    const double limit_tol = 1e-6;
    if (check_special_limit(kPunctured, trace, a, limit_tol).verdict != LimitVerdict::special_limit) continue;
    std::vector<Point> probes;
    for (int i = 0; i < 20; ++i) probes.push_back(sampler.draw(rng));
    const auto rep = check_probe_convergence(kPunctured, trace, a, probes, limit_tol + 2 * opts.tolerance);
    EXPECT_TRUE(rep.passed) << rep.max_gap;
  }
}

// A trace has at most one special limit. Numerically, two candidates
// that both pass agree on p up to 3 tol, which on the punctured line pins
// them within 3 tol of each other.
TEST(Properties, SpecialLimitIsUnique) {
  const auto trace = iterate_orbit(kPunctured, halving(), Point::real(1), {});
  std::vector<Point> candidates{Point::adjoined(), Point::real(0), trace.last(), Point::real(1e-3),
                                Point::real(-1e-12), Point::real(0.5), Point::real(-2e-6)};
  std::vector<Point> special;
  const double tol = 1e-6;
  for (const auto& c : candidates) {
    if (check_special_limit(kPunctured, trace, c, tol).verdict == LimitVerdict::special_limit) special.push_back(c);
  }
  ASSERT_GE(special.size(), 2u);
  EXPECT_FALSE(std::find(special.begin(), special.end(), Point::adjoined()) != special.end());
  for (const auto& a : special) {
    for (const auto& b : special) {
      EXPECT_NEAR(p(kPunctured, a, b), p(kPunctured, a, a), 3 * tol);
      EXPECT_NEAR(p(kPunctured, a, b), p(kPunctured, b, b), 3 * tol);
      ASSERT_TRUE(a.is_real() && b.is_real());
      EXPECT_LE(std::abs(a.number() - b.number()), 3 * tol);
    }
  }
}

TEST(Properties, TailBoundAlongContractiveOrbits) {
  Rng rng(41);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const double slope = 1.6 * uniform01(rng) - 0.8;
    const double shift = 4 * uniform01(rng) - 2;
    const double c = std::max(std::abs(slope), 0.05);
    const auto f = linear(slope, shift);
    const Point x0 = Point::real(20 * uniform01(rng) - 10);
    const auto rc = check_orbitally_r_contractive(kLine, f, x0, 0, c, 40, 1e-12);
    if (!rc.passed) continue;
    ++checked;
    const auto rep = check_r_contractive_tail_bound(kLine, rc.orbit, 0, c, 1e-9);
    EXPECT_TRUE(rep.passed) << slope << " " << shift;
  }
  EXPECT_GT(checked, 100);
}

TEST(Properties, Deterministic) {
  const auto t1 = iterate_orbit(kPunctured, exp_sin(), Point::real(0), {});
  const auto t2 = iterate_orbit(kPunctured, exp_sin(), Point::real(0), {});
  EXPECT_EQ(t1.points, t2.points);
  EXPECT_EQ(t1.self_distances, t2.self_distances);
  EXPECT_EQ(t1.r_estimate, t2.r_estimate);
  EXPECT_EQ(t1.verdict, t2.verdict);
}
