#include "pmetric/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "pmetric/error.hpp"

namespace pmetric::cli {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    out.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

}  // namespace

std::string render(const Report& report, std::string_view timestamp) {
  std::ostringstream out;
  out << kReportMagic << '\n';
  out << "command: " << report.command << '\n';
  out << "timestamp: " << timestamp << '\n';
  out << "seed: " << report.seed << '\n';
  out << "verdict: " << report.verdict << '\n';
  for (const auto& [key, value] : report.lines) out << key << ": " << value << '\n';
  out << kStructuredBegin << '\n';
  out << report.structured.dump(2) << '\n';
  out << kStructuredEnd << '\n';
  return out.str();
}

const std::string& ParsedReport::field(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  throw Error(ErrorCode::parse_error, "report has no '" + std::string(key) + "' line");
}

ParsedReport parse_report(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.front() != kReportMagic) {
    throw Error(ErrorCode::parse_error, "not a pmetric report (missing header line)");
  }
  ParsedReport parsed;
  std::size_t i = 1;
  for (; i < lines.size() && lines[i] != kStructuredBegin; ++i) {
    const auto sep = lines[i].find(": ");
    if (sep == std::string_view::npos) {
      throw Error(ErrorCode::parse_error, "malformed report line " + std::to_string(i + 1));
    }
    parsed.fields.emplace_back(std::string(lines[i].substr(0, sep)), std::string(lines[i].substr(sep + 2)));
  }
  if (i == lines.size()) throw Error(ErrorCode::parse_error, "report has no structured block");
  std::string body;
  for (++i; i < lines.size() && lines[i] != kStructuredEnd; ++i) {
    body.append(lines[i]);
    body.push_back('\n');
  }
  if (i == lines.size()) throw Error(ErrorCode::parse_error, "structured block is not terminated");
  try {
    parsed.structured = nlohmann::ordered_json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("structured block: ") + e.what());
  }
  if (parsed.structured.value("command", "") != parsed.field("command") ||
      parsed.structured.value("verdict", "") != parsed.field("verdict")) {
    throw Error(ErrorCode::parse_error, "text header and structured block disagree");
  }
  return parsed;
}

std::string strip_timestamp(std::string_view text) {
  std::string out;
  for (auto line : split_lines(text)) {
    if (line.starts_with("timestamp: ")) continue;
    out.append(line);
    out.push_back('\n');
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace pmetric::cli
