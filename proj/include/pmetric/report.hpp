#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace pmetric::cli {

/// A run report: greppable "key: value" lines followed by one JSON tree
/// between marker lines. The timestamp line is the only nondeterministic
/// content.
///
///   pmetric-report: 1
///   command: align
///   timestamp: 2026-10-16T12:00:00Z
///   seed: 0
///   verdict: pass
///   ...
///   --- structured ---
///   { ... }
///   --- end ---
struct Report {
  std::string command;
  std::string verdict;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> lines;
  nlohmann::ordered_json structured = nlohmann::ordered_json::object();

  void add(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }
};

inline constexpr std::string_view kReportMagic = "pmetric-report: 1";
inline constexpr std::string_view kStructuredBegin = "--- structured ---";
inline constexpr std::string_view kStructuredEnd = "--- end ---";

std::string render(const Report& report, std::string_view timestamp);

struct ParsedReport {
  std::vector<std::pair<std::string, std::string>> fields;
  nlohmann::ordered_json structured;

  /// First value for key; throws Error(parse_error) if missing.
  const std::string& field(std::string_view key) const;
};

/// Throws Error(parse_error) on malformed text.
ParsedReport parse_report(std::string_view text);

/// Drops the timestamp line so two runs can be compared byte for byte.
std::string strip_timestamp(std::string_view text);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace pmetric::cli
