#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace pmetric::alignment {

inline constexpr char kGap = '-';
inline constexpr std::size_t kDefaultMaxWordLength = 64;
inline constexpr std::size_t kDefaultBruteForceBound = 10;

/// A finite set of symbols, never containing the gap.
class Alphabet {
 public:
  /// Throws Error(invalid_argument) when empty, when it contains the gap or
  /// a non-printable character. Duplicates are dropped.
  explicit Alphabet(std::string_view symbols);

  static Alphabet uppercase();
  static Alphabet dna();

  bool contains(char c) const;
  const std::string& symbols() const { return symbols_; }

  /// Throws Error(invalid_symbol) naming the first offending position.
  void validate_word(std::string_view word) const;

 private:
  std::string symbols_;
};

/// Match / mismatch / letter-vs-gap scores. A gap-vs-gap column scores 0.
class AlignmentParams {
 public:
  /// Throws Error(parameter_constraint) naming the first violated
  /// inequality among alpha > beta, alpha > gamma, beta >= 2 gamma, gamma < 0.
  AlignmentParams(double alpha, double beta, double gamma);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  /// All three scores are integers of moderate size, so scoring can run in
  /// exact integer arithmetic.
  bool integral() const { return integral_; }

 private:
  double alpha_;
  double beta_;
  double gamma_;
  bool integral_;
};

/// Two equal-length rows over alphabet ∪ {gap}.
struct Alignment {
  std::string top;
  std::string bottom;

  std::size_t columns() const { return top.size(); }
  /// Row with gaps removed.
  static std::string strip(std::string_view row);
};

struct AlignmentResult {
  double score = 0.0;
  Alignment witness;
};

/// Sums the per-column scores. Throws Error(malformed_alignment) on a length
/// mismatch or a symbol outside alphabet ∪ {gap}.
double score_alignment(const Alignment& aligned, const AlignmentParams& params,
                       const Alphabet& alphabet = Alphabet::uppercase());

/// Global alignment by dynamic programming; traceback prefers diagonal, then
/// up (letter of x against gap), then left.
AlignmentResult optimal_score(std::string_view x, std::string_view y, const AlignmentParams& params,
                              const Alphabet& alphabet = Alphabet::uppercase(),
                              std::size_t max_len = kDefaultMaxWordLength);

/// Exhaustive maximum over every alignment without gap-gap columns.
/// Throws Error(size_bound_exceeded) when len(x) + len(y) > max_total.
double brute_force_score(std::string_view x, std::string_view y, const AlignmentParams& params,
                         std::size_t max_total = kDefaultBruteForceBound,
                         const Alphabet& alphabet = Alphabet::uppercase());

}  // namespace pmetric::alignment
