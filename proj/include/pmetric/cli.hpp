#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmetric/report.hpp"
#include "pmetric/spaces.hpp"

namespace pmetric::cli {

enum class Command { check_axioms, align, orbit, fixpoint, min_check, replay };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);

/// Everything one invocation needs. Defaults:
///   space metric-line; alignment scheme (1, -1, -2) over ACGT
///   tolerance: 1e-12 for check-axioms (0 for integer alignment schemes),
///              1e-9 for orbit / fixpoint / min-check
///   window 32, max_steps 100000 (orbit) / 1000000 (fixpoint), blowup 1e12
///   samples 1000, seed 0, x0 1 (0 for fixpoint), variant T1.10-2
///   r 0, c 0.5 (fixpoint) / 0.6 (min-check), phi linear:0.5, prefix 32
///   limit tolerance 1e-6, min variant "min"
struct RunConfig {
  Command command = Command::check_axioms;
  spaces::SpaceDescriptor space{spaces::kMetricLine, {}, "ACGT", std::nullopt, std::nullopt};
  std::optional<std::string> map;
  /// Words for align; a single x0 for orbit/fixpoint/min-check.
  std::vector<std::string> inputs;
  std::optional<std::string> fasta_path;
  std::vector<std::string> axioms;
  std::optional<double> tolerance;
  std::size_t window = 32;
  std::optional<std::size_t> max_steps;
  double blowup = 1e12;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::optional<std::pair<double, double>> interval;
  std::string variant = "T1.10-2";
  double r = 0.0;
  std::optional<double> c;
  std::optional<std::string> phi;
  std::size_t prefix = 32;
  std::vector<std::string> starts;
  std::vector<std::string> limit_candidates;
  double limit_tolerance = 1e-6;
  std::string min_variant = "min";
  std::optional<std::string> report_path;
};

struct RunResult {
  int exit_code = 0;
  Report report;
};

/// Dispatches one command. Exit codes: 0 pass/success, 1 fail/falsified,
/// 2 usage or configuration error (the report then carries the message).
RunResult run(const RunConfig& config);

/// Reads FASTA-like records: '>' header lines, sequence lines concatenated,
/// lowercase folded to uppercase. Throws Error(invalid_symbol) with the line
/// and column of the first symbol outside the alphabet.
std::vector<std::pair<std::string, std::string>> read_fasta(std::string_view text,
                                                            std::string_view alphabet);

struct ReplayResult {
  bool ok = false;
  std::string message;
};

/// Re-parses a report and recomputes what it claims: fixpoint residuals from
/// the recorded candidate, axiom witnesses, alignment witness scores, orbit
/// limit verdicts need no replay beyond structural checks.
ReplayResult replay_report(std::string_view text);

}  // namespace pmetric::cli
