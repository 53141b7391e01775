#include "pmetric/axioms.hpp"

#include <cmath>
#include <string>

#include "pmetric/error.hpp"

namespace pmetric {

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::sep: return "sep";
    case Axiom::ssd: return "ssd";
    case Axiom::sym: return "sym";
    case Axiom::ptri: return "ptri";
    case Axiom::sssd: return "sssd";
    case Axiom::lbd: return "lbd";
  }
  return "unknown";
}

Axiom parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::sep, Axiom::ssd, Axiom::sym, Axiom::ptri, Axiom::sssd, Axiom::lbd}) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorCode::unknown_axiom, "unknown axiom '" + std::string(name) + "'");
}

std::string_view to_string(Verdict v) {
  return v == Verdict::pass_on_sample ? "pass_on_sample" : "fail";
}

std::vector<Axiom> axioms_for(const PmSpace& space) {
  std::vector<Axiom> out{Axiom::sep, Axiom::ssd, Axiom::sym, Axiom::ptri};
  if (is_strong(space.declared_class())) out.push_back(Axiom::sssd);
  if (space.lower_bound()) out.push_back(Axiom::lbd);
  return out;
}

namespace {

double d(const PmSpace& s, const Point& x, const Point& y) { return s.distance(x, y).value(); }

// Evaluates the axiom on one ordered tuple; returns the witness on violation.
std::optional<AxiomWitness> violation(const PmSpace& s, Axiom axiom, const std::vector<Point>& pts,
                                      double tol, double r0) {
  const Point& x = pts[0];
  const Point& y = pts[1];
  switch (axiom) {
    case Axiom::sep: {
      const double xx = d(s, x, x), xy = d(s, x, y), yy = d(s, y, y);
      const bool all_equal = std::abs(xx - xy) <= tol && std::abs(yy - xy) <= tol;
      if ((x == y) != all_equal) return AxiomWitness{pts, {xx, xy, yy}};
      return std::nullopt;
    }
    case Axiom::ssd: {
      const double xx = d(s, x, x), xy = d(s, x, y);
      if (xx > xy + tol) return AxiomWitness{pts, {xx, xy}};
      return std::nullopt;
    }
    case Axiom::sym: {
      const double xy = d(s, x, y), yx = d(s, y, x);
      if (std::abs(xy - yx) > tol) return AxiomWitness{pts, {xy, yx}};
      return std::nullopt;
    }
    case Axiom::ptri: {
      const Point& z = pts[2];
      const double xy = d(s, x, y), xz = d(s, x, z), zy = d(s, z, y), zz = d(s, z, z);
      if (xy > xz + zy - zz + tol) return AxiomWitness{pts, {xy, xz, zy, zz}};
      return std::nullopt;
    }
    case Axiom::sssd: {
      if (x == y) return std::nullopt;
      const double xx = d(s, x, x), xy = d(s, x, y);
      if (!(xx < xy - tol)) return AxiomWitness{pts, {xx, xy}};
      return std::nullopt;
    }
    case Axiom::lbd: {
      const double xy = d(s, x, y);
      if (xy < r0 - tol) return AxiomWitness{pts, {xy, r0}};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

double resolve_lower_bound(const PmSpace& space, Axiom axiom, std::optional<double> override_r0) {
  if (axiom != Axiom::lbd) return 0.0;
  if (override_r0) return *override_r0;
  if (auto lb = space.lower_bound()) return lb->value();
  throw Error(ErrorCode::invalid_argument,
              "lbd check on space " + space.name() + " without a declared or supplied lower bound");
}

bool orientation_sensitive(Axiom a) {
  return a == Axiom::ssd || a == Axiom::sssd;
}

}  // namespace

AxiomReport check_axiom(const PmSpace& space, Axiom axiom, const PointSampler& sampler,
                        const AxiomCheckOptions& options) {
  if (options.samples < 1) throw Error(ErrorCode::invalid_argument, "need at least one sample");
  if (!(options.tolerance >= 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be >= 0");
  if (sampler.kind() != space.point_kind()) {
    throw Error(ErrorCode::point_kind_mismatch,
                "sampler '" + sampler.name() + "' draws " + std::string(to_string(sampler.kind())) +
                    " points but space " + space.name() + " has " +
                    std::string(to_string(space.point_kind())) + " points");
  }
  const double r0 = resolve_lower_bound(space, axiom, options.lower_bound);

  AxiomReport report{axiom, Verdict::pass_on_sample, std::nullopt, 0, options.tolerance,
                     options.seed, sampler.name(), std::nullopt};
  if (axiom == Axiom::lbd) report.lower_bound = r0;

  Rng rng(options.seed);
  const std::size_t arity = axiom == Axiom::ptri ? 3 : 2;
  std::vector<Point> tuple;
  for (std::size_t i = 0; i < options.samples; ++i) {
    tuple.clear();
    for (std::size_t k = 0; k < arity; ++k) tuple.push_back(sampler.draw(rng));
    report.samples_used = i + 1;

    auto w = violation(space, axiom, tuple, options.tolerance, r0);
    if (!w && orientation_sensitive(axiom)) {
      std::vector<Point> flipped{tuple[1], tuple[0]};
      w = violation(space, axiom, flipped, options.tolerance, r0);
    }
    if (w) {
      report.verdict = Verdict::fail;
      report.witness = std::move(w);
      return report;
    }
  }
  return report;
}

bool replay_witness(const PmSpace& space, const AxiomReport& report) {
  if (report.verdict != Verdict::fail || !report.witness) return false;
  const double r0 = report.lower_bound.value_or(0.0);
  auto again = violation(space, report.axiom, report.witness->points, report.tolerance, r0);
  return again && again->values == report.witness->values;
}

SelfDistanceReport check_zero_self_distance(const PmSpace& space, const PointSampler& sampler,
                                            const AxiomCheckOptions& options) {
  if (sampler.kind() != space.point_kind()) {
    throw Error(ErrorCode::point_kind_mismatch, "sampler/space point kind mismatch");
  }
  SelfDistanceReport report;
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    Point x = sampler.draw(rng);
    report.samples_used = i + 1;
    const double xx = d(space, x, x);
    if (std::abs(xx) > options.tolerance) {
      report.passed = false;
      report.witness = std::move(x);
      report.self_distance = xx;
      return report;
    }
  }
  return report;
}

}  // namespace pmetric
