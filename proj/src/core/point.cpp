#include "pmetric/point.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <system_error>

#include "pmetric/error.hpp"

namespace pmetric {

namespace {

// Folds -0.0 into +0.0 so bitwise equality agrees with numeric equality at 0.
double canonical(double v) { return v == 0.0 ? 0.0 : v; }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::parse_error, "not a number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(PointKind kind) {
  switch (kind) {
    case PointKind::real: return "real";
    case PointKind::real_adjoined: return "real-adjoined-point";
    case PointKind::positive_real: return "positive-real";
    case PointKind::word: return "word-over-alphabet";
  }
  return "unknown";
}

Point Point::real(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::invalid_argument, "real point must be finite");
  return Point(RealPoint{canonical(v)});
}

Point Point::adjoined() { return Point(AdjoinedPoint{}); }

Point Point::positive_real(double v) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "positive-real point must be finite and > 0, got " + format_number(v));
  }
  return Point(PositiveRealPoint{v});
}

Point Point::word(std::string symbols) { return Point(WordPoint{std::move(symbols)}); }

double Point::number() const {
  if (const auto* r = std::get_if<RealPoint>(&storage_)) return r->value;
  if (const auto* r = std::get_if<PositiveRealPoint>(&storage_)) return r->value;
  throw Error(ErrorCode::point_kind_mismatch, "point '" + format_point(*this) + "' is not numeric");
}

const std::string& Point::symbols() const {
  if (const auto* w = std::get_if<WordPoint>(&storage_)) return w->symbols;
  throw Error(ErrorCode::point_kind_mismatch, "point '" + format_point(*this) + "' is not a word");
}

bool operator==(const Point& a, const Point& b) {
  if (a.storage_.index() != b.storage_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const RealPoint& x) {
            return std::bit_cast<std::uint64_t>(x.value) ==
                   std::bit_cast<std::uint64_t>(std::get<RealPoint>(b.storage_).value);
          },
          [&](const AdjoinedPoint&) { return true; },
          [&](const PositiveRealPoint& x) {
            return std::bit_cast<std::uint64_t>(x.value) ==
                   std::bit_cast<std::uint64_t>(std::get<PositiveRealPoint>(b.storage_).value);
          },
          [&](const WordPoint& x) { return x.symbols == std::get<WordPoint>(b.storage_).symbols; },
      },
      a.storage_);
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string format_point(const Point& p) {
  return std::visit(Overloaded{
                        [](const RealPoint& x) { return format_number(x.value); },
                        [](const AdjoinedPoint&) { return std::string("a"); },
                        [](const PositiveRealPoint& x) { return format_number(x.value); },
                        [](const WordPoint& x) { return x.symbols; },
                    },
                    p.storage());
}

double parse_number(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, whole);
  const double num = parse_decimal(trim(text.substr(0, slash)), whole);
  const double den = parse_decimal(trim(text.substr(slash + 1)), whole);
  if (den == 0.0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(whole) + "'");
  return num / den;
}

Point parse_point(PointKind kind, std::string_view text) {
  const auto t = trim(text);
  switch (kind) {
    case PointKind::real: return Point::real(parse_number(t));
    case PointKind::real_adjoined:
      if (t == "a") return Point::adjoined();
      return Point::real(parse_number(t));
    case PointKind::positive_real: return Point::positive_real(parse_number(t));
    case PointKind::word: return Point::word(std::string(t));
  }
  throw Error(ErrorCode::parse_error, "unknown point kind");
}

}  // namespace pmetric
