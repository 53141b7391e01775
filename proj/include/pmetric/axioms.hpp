#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmetric/sampler.hpp"
#include "pmetric/space.hpp"

namespace pmetric {

enum class Axiom { sep, ssd, sym, ptri, sssd, lbd };

std::string_view to_string(Axiom a);
/// Throws Error(unknown_axiom).
Axiom parse_axiom(std::string_view name);

/// Axioms implied by a declared class: sep/ssd/sym/ptri for pmetric, plus
/// sssd for strong and metric spaces, plus lbd when a lower bound is declared.
std::vector<Axiom> axioms_for(const PmSpace& space);

enum class Verdict { pass_on_sample, fail };

std::string_view to_string(Verdict v);

constexpr double kDefaultTolerance = 1e-12;

struct AxiomCheckOptions {
  std::size_t samples = 1000;
  /// Non-strict relations (<=, =) absorb violations up to tol; strict
  /// relations must hold with margin tol.
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  /// Overrides the space's declared lower bound for lbd.
  std::optional<double> lower_bound;
};

struct AxiomWitness {
  std::vector<Point> points;
  /// Distances in the order they appear in the axiom, e.g. for ptri:
  /// p(x,y), p(x,z), p(z,y), p(z,z).
  std::vector<double> values;
};

struct AxiomReport {
  Axiom axiom;
  Verdict verdict;
  std::optional<AxiomWitness> witness;
  std::size_t samples_used = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::string sampler;
  std::optional<double> lower_bound;
};

/// Checks one axiom on `options.samples` seeded pairs (triples for ptri).
/// Stops at the first violation and returns it as the witness.
AxiomReport check_axiom(const PmSpace& space, Axiom axiom, const PointSampler& sampler,
                        const AxiomCheckOptions& options);

/// Re-evaluates a failing report's witness. True iff the violation reproduces.
bool replay_witness(const PmSpace& space, const AxiomReport& report);

/// Result of checking the zero self-distance requirement of a metric.
struct SelfDistanceReport {
  bool passed = true;
  std::optional<Point> witness;
  double self_distance = 0.0;
  std::size_t samples_used = 0;
};

SelfDistanceReport check_zero_self_distance(const PmSpace& space, const PointSampler& sampler,
                                            const AxiomCheckOptions& options);

}  // namespace pmetric
