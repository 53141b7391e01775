// pmetric: command-line front end for the partial metric library.
//
//   pmetric align --alpha 1 --beta -1 --gamma -2 CGATC CAGA
//   pmetric fixpoint --space metric-line --map exp_sin --x0 0 --variant T1.10-2
//   pmetric check-axioms --space punctured-line --axiom sssd --seed 7
//
// PMETRIC_SEED overrides the default seed (an explicit --seed still wins).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmetric/cli.hpp"
#include "pmetric/error.hpp"
#include "pmetric/point.hpp"

namespace {

using pmetric::cli::Command;
using pmetric::cli::RunConfig;

struct RawFlags {
  std::string space = "metric-line";
  std::optional<std::string> alpha, beta, gamma, max_word_len;
  std::string alphabet = "ACGT";
  std::optional<std::string> map, x0, fasta, tolerance, max_steps, seed, interval, c, phi, r;
  std::optional<std::string> blowup, limit_tolerance, out, report;
  std::vector<std::string> axioms, starts, limits, inputs;
  std::size_t window = 32, samples = 1000, prefix = 32;
  std::string variant = "T1.10-2";
  std::string min_variant = "min";
};

double number(const std::string& flag, const std::string& text) {
  try {
    return pmetric::parse_number(text);
  } catch (const pmetric::Error&) {
    throw pmetric::Error(pmetric::ErrorCode::parse_error,
                         "--" + flag + ": '" + text + "' is not a decimal or p/q number");
  }
}

std::uint64_t seed_value(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw pmetric::Error(pmetric::ErrorCode::parse_error, "seed '" + text + "' is not an unsigned integer");
}

RunConfig to_config(Command command, const RawFlags& raw) {
  RunConfig config;
  config.command = command;
  config.space.name = raw.space;
  config.space.alphabet = raw.alphabet;
  if (raw.alpha) config.space.parameters["alpha"] = number("alpha", *raw.alpha);
  if (raw.beta) config.space.parameters["beta"] = number("beta", *raw.beta);
  if (raw.gamma) config.space.parameters["gamma"] = number("gamma", *raw.gamma);
  if (raw.max_word_len) config.space.parameters["max_len"] = number("max-word-len", *raw.max_word_len);
  config.map = raw.map;
  config.inputs = raw.inputs;
  if (raw.x0) config.inputs.insert(config.inputs.begin(), *raw.x0);
  config.fasta_path = raw.fasta;
  config.axioms = raw.axioms;
  if (raw.tolerance) config.tolerance = number("tol", *raw.tolerance);
  config.window = raw.window;
  if (raw.max_steps) config.max_steps = static_cast<std::size_t>(number("max-steps", *raw.max_steps));
  if (raw.blowup) config.blowup = number("blowup", *raw.blowup);
  config.samples = raw.samples;
  if (raw.seed) {
    config.seed = seed_value(*raw.seed);
  } else if (const char* env = std::getenv("PMETRIC_SEED"); env && *env) {
    config.seed = seed_value(env);
  }
  if (raw.interval) {
    const auto comma = raw.interval->find(',');
    if (comma == std::string::npos) {
      throw pmetric::Error(pmetric::ErrorCode::parse_error, "--interval expects lo,hi");
    }
    config.interval = std::make_pair(number("interval", raw.interval->substr(0, comma)),
                                     number("interval", raw.interval->substr(comma + 1)));
  }
  config.variant = raw.variant;
  if (raw.r) config.r = number("r", *raw.r);
  if (raw.c) config.c = number("c", *raw.c);
  config.phi = raw.phi;
  config.prefix = raw.prefix;
  config.starts = raw.starts;
  config.limit_candidates = raw.limits;
  if (raw.limit_tolerance) config.limit_tolerance = number("limit-tol", *raw.limit_tolerance);
  config.min_variant = raw.min_variant;
  config.report_path = raw.report;
  return config;
}

void add_common(CLI::App* sub, RawFlags& raw) {
  sub->add_option("--space", raw.space, "metric-line, punctured-line, sum-space or alignment");
  sub->add_option("--alpha", raw.alpha, "alignment match score");
  sub->add_option("--beta", raw.beta, "alignment mismatch score");
  sub->add_option("--gamma", raw.gamma, "alignment letter-vs-gap score");
  sub->add_option("--alphabet", raw.alphabet, "alignment symbols");
  sub->add_option("--max-word-len", raw.max_word_len, "alignment word length cap");
  sub->add_option("--tol", raw.tolerance, "tolerance");
  sub->add_option("--seed", raw.seed, "RNG seed");
  sub->add_option("--samples", raw.samples, "sample count");
  sub->add_option("--interval", raw.interval, "sample interval lo,hi");
  sub->add_option("--out", raw.out, "write the report here instead of stdout");
}

void add_orbit_flags(CLI::App* sub, RawFlags& raw) {
  sub->add_option("--map", raw.map, "linear:A,B, halving, translate:B, exp_sin, identity")->required();
  sub->add_option("--x0", raw.x0, "starting point");
  sub->add_option("--window", raw.window, "Cauchy window length");
  sub->add_option("--max-steps", raw.max_steps, "iteration budget");
  sub->add_option("--blowup", raw.blowup, "divergence threshold");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial metric spaces: axiom checks, alignment, orbits and fixed points"};
  app.require_subcommand(1);
  RawFlags raw;

  auto* check = app.add_subcommand("check-axioms", "sample-check the axioms of a space");
  add_common(check, raw);
  check->add_option("--axiom", raw.axioms, "sep, ssd, sym, ptri, sssd, lbd (repeatable)");

  auto* align = app.add_subcommand("align", "optimal global alignment score of word pairs");
  add_common(align, raw);
  align->add_option("words", raw.inputs, "words to align pairwise");
  align->add_option("--fasta", raw.fasta, "read words from a FASTA-like file");

  auto* orbit = app.add_subcommand("orbit", "iterate a map and classify the orbit");
  add_common(orbit, raw);
  add_orbit_flags(orbit, raw);
  orbit->add_option("--limit", raw.limits, "candidate limit point to classify (repeatable)");
  orbit->add_option("--limit-tol", raw.limit_tolerance, "tolerance for limit classification");

  auto* fix = app.add_subcommand("fixpoint", "find and certify a fixed point");
  add_common(fix, raw);
  add_orbit_flags(fix, raw);
  fix->add_option("--variant", raw.variant, "T1.9-1, T1.9-2, T1.9-3, T1.10-1, T1.10-2, T6.4, T7.3");
  fix->add_option("-r,--r", raw.r, "self-distance level r");
  fix->add_option("-c,--c", raw.c, "contraction constant");
  fix->add_option("--phi", raw.phi, "linear:K or quadratic:K");
  fix->add_option("--prefix", raw.prefix, "orbit prefix length for contraction checks");
  fix->add_option("--start", raw.starts, "extra start for the uniqueness check (repeatable)");

  auto* min = app.add_subcommand("min-check", "sample-check the min contraction condition");
  add_common(min, raw);
  add_orbit_flags(min, raw);
  min->add_option("-c,--c", raw.c, "contraction constant");
  min->add_option("--variant", raw.min_variant, "min or min_ratio");
  min->add_option("--prefix", raw.prefix, "orbit prefix length");

  auto* replay = app.add_subcommand("replay", "re-validate a saved report");
  replay->add_option("report", raw.report, "report file")->required();
  replay->add_option("--out", raw.out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Command command = Command::check_axioms;
  for (const auto* sub : app.get_subcommands()) command = pmetric::cli::parse_command(sub->get_name());

  pmetric::cli::RunResult result;
  try {
    result = pmetric::cli::run(to_config(command, raw));
  } catch (const pmetric::Error& e) {
    std::cerr << "pmetric: " << e.what() << "\n";
    return 2;
  }

  const std::string text = pmetric::cli::render(result.report, pmetric::cli::utc_timestamp());
  if (raw.out) {
    std::ofstream out(*raw.out, std::ios::binary);
    if (!out) {
      std::cerr << "pmetric: cannot write '" << *raw.out << "'\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return result.exit_code;
}
