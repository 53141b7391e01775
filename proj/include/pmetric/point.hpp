#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace pmetric {

enum class PointKind { real, real_adjoined, positive_real, word };

std::string_view to_string(PointKind kind);

struct RealPoint {
  double value;
};

/// The distinguished extra point adjoined to the real line.
struct AdjoinedPoint {};

struct PositiveRealPoint {
  double value;
};

struct WordPoint {
  std::string symbols;
};

/// Tagged point value. Equality follows the domain rules: reals compare by
/// bit pattern (construction folds -0.0 into +0.0), the adjoined point equals
/// only itself, words compare symbol by symbol.
class Point {
 public:
  using Storage = std::variant<RealPoint, AdjoinedPoint, PositiveRealPoint, WordPoint>;

  static Point real(double v);
  static Point adjoined();
  /// Throws Error(invalid_argument) unless v > 0 and finite.
  static Point positive_real(double v);
  static Point word(std::string symbols);

  bool is_real() const { return std::holds_alternative<RealPoint>(storage_); }
  bool is_adjoined() const { return std::holds_alternative<AdjoinedPoint>(storage_); }
  bool is_positive_real() const { return std::holds_alternative<PositiveRealPoint>(storage_); }
  bool is_word() const { return std::holds_alternative<WordPoint>(storage_); }

  /// Numeric payload of a real or positive-real point.
  double number() const;
  const std::string& symbols() const;

  const Storage& storage() const { return storage_; }

  friend bool operator==(const Point& a, const Point& b);

 private:
  explicit Point(Storage s) : storage_(std::move(s)) {}
  Storage storage_;
};

/// Human/report form: shortest round-trip decimal for numbers, "a" for the
/// adjoined point, the raw symbols for words ("" for the empty word).
std::string format_point(const Point& p);

/// Parses a point of the given kind. Reals accept decimal and simple
/// rational forms such as "-1/2". The adjoined point is spelled "a".
Point parse_point(PointKind kind, std::string_view text);

/// Decimal or "p/q" rational. Throws Error(parse_error).
double parse_number(std::string_view text);

/// Shortest decimal string that round-trips the double.
std::string format_number(double v);

}  // namespace pmetric
