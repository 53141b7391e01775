#include "pmetric/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pmetric/alignment.hpp"
#include "pmetric/axioms.hpp"
#include "pmetric/error.hpp"
#include "pmetric/orbit.hpp"
#include "pmetric/solver.hpp"

namespace pmetric::cli {

using nlohmann::ordered_json;

std::string_view to_string(Command c) {
  switch (c) {
    case Command::check_axioms: return "check-axioms";
    case Command::align: return "align";
    case Command::orbit: return "orbit";
    case Command::fixpoint: return "fixpoint";
    case Command::min_check: return "min-check";
    case Command::replay: return "replay";
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::check_axioms, Command::align, Command::orbit, Command::fixpoint,
                 Command::min_check, Command::replay}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::unknown_name, "unknown command '" + std::string(name) + "'");
}

namespace {

std::string num(double v) { return format_number(v); }

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr double kAlignDefaults[3] = {1.0, -1.0, -2.0};

// Fills the alignment scheme defaults so every echo is complete.
spaces::SpaceDescriptor effective_descriptor(const RunConfig& config) {
  spaces::SpaceDescriptor d = config.space;
  if (config.command == Command::align) d.name = spaces::kAlignment;
  if (d.name == spaces::kAlignment) {
    d.parameters.try_emplace("alpha", kAlignDefaults[0]);
    d.parameters.try_emplace("beta", kAlignDefaults[1]);
    d.parameters.try_emplace("gamma", kAlignDefaults[2]);
  }
  return d;
}

bool integral_scheme(const spaces::SpaceDescriptor& d) {
  if (d.name != spaces::kAlignment) return false;
  return alignment::AlignmentParams(d.parameters.at("alpha"), d.parameters.at("beta"),
                                    d.parameters.at("gamma"))
      .integral();
}

double default_tolerance(const RunConfig& config, const spaces::SpaceDescriptor& d) {
  if (config.tolerance) return *config.tolerance;
  if (config.command == Command::check_axioms) return integral_scheme(d) ? 0.0 : kDefaultTolerance;
  return 1e-9;
}

std::size_t default_max_steps(const RunConfig& config) {
  if (config.max_steps) return *config.max_steps;
  return config.command == Command::fixpoint ? 1000000 : 100000;
}

double default_c(const RunConfig& config) {
  if (config.c) return *config.c;
  return config.command == Command::min_check ? 0.6 : 0.5;
}

std::string default_x0(const RunConfig& config) {
  if (!config.inputs.empty()) return config.inputs.front();
  return config.command == Command::fixpoint ? "0" : "1";
}

PointSampler make_sampler(const RunConfig& config, const spaces::SpaceDescriptor& d,
                          const PmSpace& space) {
  if (!config.interval) return spaces::default_sampler(d);
  if (space.point_kind() != PointKind::real) {
    throw Error(ErrorCode::invalid_argument, "--interval applies to real-valued spaces only");
  }
  return real_interval_sampler(config.interval->first, config.interval->second);
}

ordered_json descriptor_json(const spaces::SpaceDescriptor& d) {
  ordered_json j;
  j["name"] = d.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : d.parameters) params[k] = v;
  j["parameters"] = params;
  j["alphabet"] = d.alphabet;
  return j;
}

ordered_json config_json(const RunConfig& config, const spaces::SpaceDescriptor& d) {
  ordered_json j;
  j["space"] = descriptor_json(d);
  if (config.map) j["map"] = *config.map;
  j["inputs"] = config.inputs;
  if (config.fasta_path) j["fasta"] = *config.fasta_path;
  j["axioms"] = config.axioms;
  j["tolerance"] = default_tolerance(config, d);
  j["window"] = config.window;
  j["max_steps"] = default_max_steps(config);
  j["blowup"] = config.blowup;
  j["samples"] = config.samples;
  j["seed"] = config.seed;
  if (config.interval) j["interval"] = {config.interval->first, config.interval->second};
  j["variant"] = config.variant;
  j["r"] = config.r;
  j["c"] = default_c(config);
  if (config.phi) j["phi"] = *config.phi;
  j["prefix"] = config.prefix;
  j["starts"] = config.starts;
  j["limit_candidates"] = config.limit_candidates;
  j["limit_tolerance"] = config.limit_tolerance;
  j["min_variant"] = config.min_variant;
  return j;
}

std::string tuple_text(const std::vector<Point>& pts) {
  std::string s = "(";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += format_point(pts[i]);
  }
  return s + ")";
}

std::string values_text(const std::vector<double>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ", ";
    s += num(vs[i]);
  }
  return s + "]";
}

std::vector<std::string> point_strings(std::span<const Point> pts) {
  std::vector<std::string> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(format_point(p));
  return out;
}

int run_check_axioms(const RunConfig& config, const spaces::SpaceDescriptor& d, Report& report) {
  const PmSpace space = spaces::make_space(d);
  const PointSampler sampler = make_sampler(config, d, space);
  const double tol = default_tolerance(config, d);

  std::vector<Axiom> axioms;
  for (const auto& name : config.axioms) axioms.push_back(parse_axiom(name));
  const bool default_set = axioms.empty();
  if (default_set) axioms = axioms_for(space);

  const AxiomCheckOptions options{config.samples, tol, config.seed, std::nullopt};
  bool all_pass = true;
  ordered_json results = ordered_json::array();
  report.add("space", space.name());
  report.add("declared_class", std::string(to_string(space.declared_class())));
  report.add("sampler", sampler.name());
  for (Axiom axiom : axioms) {
    const AxiomReport rep = check_axiom(space, axiom, sampler, options);
    const bool pass = rep.verdict == Verdict::pass_on_sample;
    all_pass = all_pass && pass;
    ordered_json j;
    j["axiom"] = to_string(axiom);
    j["verdict"] = to_string(rep.verdict);
    j["samples_used"] = rep.samples_used;
    j["tolerance"] = rep.tolerance;
    j["seed"] = rep.seed;
    j["sampler"] = rep.sampler;
    if (rep.lower_bound) j["lower_bound"] = *rep.lower_bound;
    std::string line = std::string(to_string(rep.verdict)) + " samples=" + std::to_string(rep.samples_used);
    if (rep.witness) {
      j["witness"] = {{"points", point_strings(rep.witness->points)}, {"values", rep.witness->values}};
      line += " witness=" + tuple_text(rep.witness->points) + " values=" + values_text(rep.witness->values);
    }
    results.push_back(j);
    report.add("axiom." + std::string(to_string(axiom)), line);
  }
  ordered_json result;
  result["axioms"] = results;
  if (default_set && space.declared_class() == SpaceClass::metric) {
    const auto rep = check_zero_self_distance(space, sampler, options);
    all_pass = all_pass && rep.passed;
    ordered_json j{{"passed", rep.passed}, {"samples_used", rep.samples_used}};
    std::string line = std::string(rep.passed ? "pass_on_sample" : "fail") +
                       " samples=" + std::to_string(rep.samples_used);
    if (rep.witness) {
      j["witness"] = format_point(*rep.witness);
      j["self_distance"] = rep.self_distance;
      line += " witness=" + format_point(*rep.witness) + " p(x,x)=" + num(rep.self_distance);
    }
    result["zero_self_distance"] = j;
    report.add("zero_self_distance", line);
  }
  report.verdict = all_pass ? "pass" : "fail";
  report.structured["result"] = result;
  return all_pass ? 0 : 1;
}

int run_align(const RunConfig& config, const spaces::SpaceDescriptor& d, Report& report) {
  const alignment::AlignmentParams params(d.parameters.at("alpha"), d.parameters.at("beta"),
                                          d.parameters.at("gamma"));
  const alignment::Alphabet alphabet(d.alphabet);
  const auto cap_it = d.parameters.find("max_len");
  const std::size_t cap = cap_it == d.parameters.end() ? alignment::kDefaultMaxWordLength
                                                       : static_cast<std::size_t>(cap_it->second);

  std::vector<std::pair<std::string, std::string>> words;
  for (std::size_t i = 0; i < config.inputs.size(); ++i) {
    std::string w = upper(config.inputs[i]);
    alphabet.validate_word(w);
    words.emplace_back("arg" + std::to_string(i + 1), std::move(w));
  }
  if (config.fasta_path) {
    for (auto& rec : read_fasta(read_file(*config.fasta_path), alphabet.symbols())) {
      words.push_back(std::move(rec));
    }
  }
  if (words.size() < 2) throw Error(ErrorCode::invalid_argument, "align needs at least two words");

  report.add("scheme", "alpha=" + num(params.alpha()) + " beta=" + num(params.beta()) +
                           " gamma=" + num(params.gamma()));
  ordered_json pairs = ordered_json::array();
  bool oracle_ok = true;
  std::size_t index = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const auto& [xn, x] = words[i];
      const auto& [yn, y] = words[j];
      const auto res = alignment::optimal_score(x, y, params, alphabet, cap);
      ordered_json pj;
      pj["x"] = x;
      pj["y"] = y;
      pj["x_name"] = xn;
      pj["y_name"] = yn;
      pj["score"] = res.score;
      pj["pmetric"] = -res.score;
      pj["witness"] = {res.witness.top, res.witness.bottom};
      std::string line = x + " " + y + " score=" + num(res.score) + " pmetric=" + num(-res.score) +
                         " witness=" + res.witness.top + "/" + res.witness.bottom;
      if (x.size() + y.size() <= alignment::kDefaultBruteForceBound) {
        const double oracle = alignment::brute_force_score(x, y, params,
                                                           alignment::kDefaultBruteForceBound, alphabet);
        pj["oracle_score"] = oracle;
        line += " oracle=" + num(oracle);
        oracle_ok = oracle_ok && oracle == res.score;
      }
      pairs.push_back(pj);
      report.add("pair." + std::to_string(++index), line);
    }
  }
  report.structured["result"] = {{"pairs", pairs}};
  report.verdict = oracle_ok ? "pass" : "fail";
  return oracle_ok ? 0 : 1;
}

int run_orbit(const RunConfig& config, const spaces::SpaceDescriptor& d, Report& report) {
  if (!config.map) throw Error(ErrorCode::invalid_argument, "orbit needs --map");
  const PmSpace space = spaces::make_space(d);
  const orbit::SelfMap f = orbit::parse_map(*config.map);
  const Point x0 = space.parse_point(default_x0(config));
  const orbit::OrbitOptions options{default_max_steps(config), config.window,
                                    default_tolerance(config, d), config.blowup};
  const auto trace = orbit::iterate_orbit(space, f, x0, options);
  const bool cauchy = trace.verdict == orbit::CauchyVerdict::cauchy_within_tolerance;

  report.add("space", space.name());
  report.add("map", f.spec());
  report.add("x0", format_point(x0));
  report.add("steps", std::to_string(trace.steps()));
  report.add("cauchy_verdict", std::string(to_string(trace.verdict)));
  report.add("r_estimate", num(trace.r_estimate));
  report.add("tail_range", "[" + num(trace.tail_min) + ", " + num(trace.tail_max) + "]");
  report.add("last_point", format_point(trace.last()));

  ordered_json result;
  result["steps"] = trace.steps();
  result["cauchy_verdict"] = to_string(trace.verdict);
  result["r_estimate"] = trace.r_estimate;
  result["tail_min"] = trace.tail_min;
  result["tail_max"] = trace.tail_max;
  result["tail"] = point_strings(std::span(trace.points).subspan(trace.tail_begin()));
  ordered_json limits = ordered_json::array();
  for (const auto& text : config.limit_candidates) {
    const Point a = space.parse_point(text);
    const auto lr = orbit::check_special_limit(space, trace, a, config.limit_tolerance);
    limits.push_back({{"candidate", format_point(a)},
                      {"verdict", to_string(lr.verdict)},
                      {"max_limit_gap", lr.max_limit_gap},
                      {"self_distance", lr.self_distance}});
    report.add("limit." + format_point(a), std::string(to_string(lr.verdict)) +
                                               " p(a,a)=" + num(lr.self_distance) +
                                               " max_gap=" + num(lr.max_limit_gap));
  }
  result["limits"] = limits;
  report.structured["result"] = result;
  report.verdict = cauchy ? "pass" : "fail";
  return cauchy ? 0 : 1;
}

int run_fixpoint(const RunConfig& config, const spaces::SpaceDescriptor& d, Report& report) {
  if (!config.map) throw Error(ErrorCode::invalid_argument, "fixpoint needs --map");
  const PmSpace space = spaces::make_space(d);
  const orbit::SelfMap f = orbit::parse_map(*config.map);
  const Point x0 = space.parse_point(default_x0(config));
  const auto variant = orbit::parse_variant(config.variant);

  orbit::SolverOptions options;
  options.tolerance = default_tolerance(config, d);
  options.window = config.window;
  options.max_steps = default_max_steps(config);
  options.blowup = config.blowup;
  options.r = config.r;
  options.c = default_c(config);
  options.phi = orbit::PhiFunction::parse(config.phi.value_or("linear:0.5"), config.r);
  options.prefix = config.prefix;
  options.sampler = make_sampler(config, d, space);
  options.samples = config.samples;
  options.seed = config.seed;
  for (const auto& s : config.starts) options.extra_starts.push_back(space.parse_point(s));

  const auto cert = orbit::solve_fixed_point(space, f, x0, variant, options);
  report.add("space", space.name());
  report.add("map", f.spec());
  report.add("x0", format_point(x0));
  report.add("variant", std::string(to_string(variant)));
  report.add("status", std::string(to_string(cert.status)));
  report.add("fixed_point", format_point(cert.candidate));
  report.add("self_distance", num(cert.self_distance));
  report.add("residual", num(cert.residual));
  report.add("p_a_fa", num(cert.p_a_fa));
  report.add("steps", std::to_string(cert.steps));
  report.add("orbit_verdict", std::string(to_string(cert.orbit_verdict)));

  ordered_json conditions = ordered_json::array();
  for (std::size_t i = 0; i < cert.conditions.size(); ++i) {
    const auto& c = cert.conditions[i];
    conditions.push_back({{"name", c.name}, {"passed", c.passed}, {"evidence", c.evidence}});
    report.add("condition." + std::to_string(i + 1) + "." + c.name,
               std::string(c.passed ? "pass" : "fail") + " " + c.evidence);
  }
  ordered_json result;
  result["variant"] = to_string(cert.variant);
  result["status"] = to_string(cert.status);
  result["candidate"] = format_point(cert.candidate);
  result["image"] = format_point(cert.image);
  result["self_distance"] = cert.self_distance;
  result["p_a_fa"] = cert.p_a_fa;
  result["p_fa_fa"] = cert.p_fa_fa;
  result["residual"] = cert.residual;
  result["tolerance"] = cert.tolerance;
  if (cert.r) result["r"] = *cert.r;
  result["steps"] = cert.steps;
  result["orbit_verdict"] = to_string(cert.orbit_verdict);
  result["r_estimate"] = cert.r_estimate;
  result["conditions"] = conditions;
  result["other_candidates"] = point_strings(cert.other_candidates);
  report.structured["result"] = result;
  report.verdict = cert.succeeded() ? "pass" : "fail";
  return cert.succeeded() ? 0 : 1;
}

int run_min_check(const RunConfig& config, const spaces::SpaceDescriptor& d, Report& report) {
  if (!config.map) throw Error(ErrorCode::invalid_argument, "min-check needs --map");
  const PmSpace space = spaces::make_space(d);
  const orbit::SelfMap f = orbit::parse_map(*config.map);
  const PointSampler sampler = make_sampler(config, d, space);
  const auto variant = orbit::parse_min_variant(config.min_variant);
  const double c = default_c(config);
  const Point x0 = space.parse_point(default_x0(config));
  const auto orbit_pts = orbit::orbit_points(space, f, x0, config.prefix);
  const auto rep = orbit::check_min_condition(
      space, f, sampler, c, variant, {config.samples, default_tolerance(config, d), config.seed},
      orbit_pts);

  const bool pass = rep.passed && rep.orbit_passed;
  report.add("space", space.name());
  report.add("map", f.spec());
  report.add("variant", std::string(to_string(variant)));
  report.add("c", num(c));
  report.add("sampler", sampler.name());
  report.add("pairs", std::string(rep.passed ? "pass" : "fail") + " used=" +
                          std::to_string(rep.samples_used) + " skipped=" + std::to_string(rep.skipped) +
                          " worst=(" + format_point(rep.worst_x) + ", " + format_point(rep.worst_y) +
                          ") lhs=" + num(rep.worst_lhs) + " rhs=" + num(rep.worst_rhs));
  std::string orbit_line = std::string(rep.orbit_passed ? "pass" : "fail") +
                           " checked=" + std::to_string(rep.orbit_checked);
  if (rep.orbit_failed_n) orbit_line += " first_failure_n=" + std::to_string(*rep.orbit_failed_n);
  report.add("orbit_inequality", orbit_line);

  ordered_json result;
  result["passed"] = rep.passed;
  result["samples_used"] = rep.samples_used;
  result["skipped"] = rep.skipped;
  result["worst"] = {{"x", format_point(rep.worst_x)},
                     {"y", format_point(rep.worst_y)},
                     {"lhs", rep.worst_lhs},
                     {"rhs", rep.worst_rhs},
                     {"excess", rep.samples_used ? rep.worst_excess : 0.0}};
  result["orbit_passed"] = rep.orbit_passed;
  result["orbit_checked"] = rep.orbit_checked;
  if (rep.orbit_failed_n) result["orbit_failed_n"] = *rep.orbit_failed_n;
  report.structured["result"] = result;
  report.verdict = pass ? "pass" : "fail";
  return pass ? 0 : 1;
}

int run_replay(const RunConfig& config, Report& report) {
  if (!config.report_path) throw Error(ErrorCode::invalid_argument, "replay needs --report");
  const auto outcome = replay_report(read_file(*config.report_path));
  report.add("replayed", *config.report_path);
  report.add("message", outcome.message);
  report.structured["result"] = {{"ok", outcome.ok}, {"message", outcome.message}};
  report.verdict = outcome.ok ? "pass" : "fail";
  return outcome.ok ? 0 : 1;
}

spaces::SpaceDescriptor descriptor_from_json(const ordered_json& j) {
  spaces::SpaceDescriptor d;
  d.name = j.at("name").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) d.parameters[k] = v.get<double>();
  d.alphabet = j.at("alphabet").get<std::string>();
  return d;
}

ReplayResult replay_fixpoint(const ordered_json& s) {
  const auto& result = s.at("result");
  if (result.at("status") != "success") return {true, "non-success certificate; nothing to replay"};
  const auto d = descriptor_from_json(s.at("config").at("space"));
  const PmSpace space = spaces::make_space(d);
  const auto f = orbit::parse_map(s.at("config").at("map").get<std::string>());
  orbit::FixedPointCertificate cert;
  cert.variant = orbit::parse_variant(result.at("variant").get<std::string>());
  cert.candidate = space.parse_point(result.at("candidate").get<std::string>());
  cert.tolerance = result.at("tolerance").get<double>();
  if (result.contains("r")) cert.r = result.at("r").get<double>();
  if (!orbit::replay_certificate(space, f, cert)) {
    return {false, "recomputed residuals exceed the recorded tolerance"};
  }
  return {true, "certificate residuals reproduce within tolerance " + num(cert.tolerance)};
}

ReplayResult replay_axioms(const ordered_json& s) {
  const auto d = descriptor_from_json(s.at("config").at("space"));
  const PmSpace space = spaces::make_space(d);
  std::size_t replayed = 0;
  for (const auto& j : s.at("result").at("axioms")) {
    const bool fail = j.at("verdict") == "fail";
    if (fail != j.contains("witness")) return {false, "verdict and witness disagree"};
    if (!fail) continue;
    AxiomReport rep;
    rep.axiom = parse_axiom(j.at("axiom").get<std::string>());
    rep.verdict = Verdict::fail;
    rep.tolerance = j.at("tolerance").get<double>();
    if (j.contains("lower_bound")) rep.lower_bound = j.at("lower_bound").get<double>();
    AxiomWitness w;
    for (const auto& p : j.at("witness").at("points")) w.points.push_back(space.parse_point(p.get<std::string>()));
    w.values = j.at("witness").at("values").get<std::vector<double>>();
    rep.witness = std::move(w);
    if (!replay_witness(space, rep)) {
      return {false, "witness for " + j.at("axiom").get<std::string>() + " does not reproduce"};
    }
    ++replayed;
  }
  return {true, std::to_string(replayed) + " witness(es) reproduced"};
}

ReplayResult replay_align(const ordered_json& s) {
  const auto d = descriptor_from_json(s.at("config").at("space"));
  const alignment::AlignmentParams params(d.parameters.at("alpha"), d.parameters.at("beta"),
                                          d.parameters.at("gamma"));
  const alignment::Alphabet alphabet(d.alphabet);
  std::size_t n = 0;
  for (const auto& p : s.at("result").at("pairs")) {
    const alignment::Alignment w{p.at("witness")[0].get<std::string>(), p.at("witness")[1].get<std::string>()};
    if (alignment::Alignment::strip(w.top) != p.at("x") || alignment::Alignment::strip(w.bottom) != p.at("y")) {
      return {false, "witness rows do not strip to the input words"};
    }
    if (alignment::score_alignment(w, params, alphabet) != p.at("score").get<double>()) {
      return {false, "witness does not rescore to the reported optimum"};
    }
    ++n;
  }
  return {true, std::to_string(n) + " witness alignment(s) rescored"};
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_fasta(std::string_view text,
                                                            std::string_view alphabet_symbols) {
  const alignment::Alphabet alphabet(alphabet_symbols);
  std::vector<std::pair<std::string, std::string>> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '>') {
      records.emplace_back(std::string(line.substr(1)), std::string());
      continue;
    }
    if (records.empty()) {
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(line_no) + ": sequence data before the first '>' header");
    }
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(line[col])));
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!alphabet.contains(c)) {
        throw Error(ErrorCode::invalid_symbol, "line " + std::to_string(line_no) + ", column " +
                                                   std::to_string(col + 1) + ": symbol '" +
                                                   std::string(1, line[col]) + "' is not in {" +
                                                   alphabet.symbols() + "}");
      }
      records.back().second.push_back(c);
    }
  }
  return records;
}

RunResult run(const RunConfig& config) {
  RunResult out;
  Report& report = out.report;
  report.command = std::string(to_string(config.command));
  report.seed = config.seed;
  report.structured["command"] = report.command;
  report.structured["verdict"] = "";
  report.structured["seed"] = config.seed;
  try {
    const auto d = effective_descriptor(config);
    report.structured["config"] = config_json(config, d);
    switch (config.command) {
      case Command::check_axioms: out.exit_code = run_check_axioms(config, d, report); break;
      case Command::align: out.exit_code = run_align(config, d, report); break;
      case Command::orbit: out.exit_code = run_orbit(config, d, report); break;
      case Command::fixpoint: out.exit_code = run_fixpoint(config, d, report); break;
      case Command::min_check: out.exit_code = run_min_check(config, d, report); break;
      case Command::replay: out.exit_code = run_replay(config, report); break;
    }
  } catch (const Error& e) {
    report.verdict = "error";
    report.lines.clear();
    report.add("error_code", std::string(to_string(e.code())));
    report.add("error", e.what());
    report.structured["result"] = {{"error_code", to_string(e.code())}, {"error", e.what()}};
    out.exit_code = 2;
  }
  report.structured["verdict"] = report.verdict;
  return out;
}

ReplayResult replay_report(std::string_view text) {
  ParsedReport parsed;
  try {
    parsed = parse_report(text);
  } catch (const Error& e) {
    return {false, e.what()};
  }
  const auto& s = parsed.structured;
  try {
    const std::string command = s.at("command").get<std::string>();
    if (s.at("verdict") == "error") return {true, "error report; nothing to replay"};
    if (command == "fixpoint") return replay_fixpoint(s);
    if (command == "check-axioms") return replay_axioms(s);
    if (command == "align") return replay_align(s);
    if (command == "orbit" || command == "min-check" || command == "replay") {
      return {s.contains("result"), "structure verified"};
    }
    return {false, "unknown command '" + command + "'"};
  } catch (const nlohmann::json::exception& e) {
    return {false, std::string("structured block: ") + e.what()};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

}  // namespace pmetric::cli
