#include "pmetric/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pmetric/error.hpp"
#include "pmetric/point.hpp"

namespace pmetric::alignment {

Alphabet::Alphabet(std::string_view symbols) {
  for (char c : symbols) {
    if (c == kGap) throw Error(ErrorCode::invalid_argument, "alphabet must not contain the gap '-'");
    if (!std::isgraph(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::invalid_argument, "alphabet symbols must be printable");
    }
    if (symbols_.find(c) == std::string::npos) symbols_.push_back(c);
  }
  if (symbols_.empty()) throw Error(ErrorCode::invalid_argument, "alphabet must be nonempty");
}

Alphabet Alphabet::uppercase() { return Alphabet("ABCDEFGHIJKLMNOPQRSTUVWXYZ"); }
Alphabet Alphabet::dna() { return Alphabet("ACGT"); }

bool Alphabet::contains(char c) const { return symbols_.find(c) != std::string::npos; }

void Alphabet::validate_word(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!contains(word[i])) {
      throw Error(ErrorCode::invalid_symbol, "symbol '" + std::string(1, word[i]) + "' at position " +
                                                 std::to_string(i) + " of '" + std::string(word) +
                                                 "' is not in alphabet {" + symbols_ + "}");
    }
  }
}

namespace {

bool small_integer(double v) { return std::isfinite(v) && v == std::trunc(v) && std::abs(v) <= 1e9; }

}  // namespace

AlignmentParams::AlignmentParams(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  auto fail = [&](const std::string& inequality) {
    throw Error(ErrorCode::parameter_constraint,
                "scoring scheme (alpha=" + format_number(alpha) + ", beta=" + format_number(beta) +
                    ", gamma=" + format_number(gamma) + ") violates " + inequality);
  };
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) fail("finiteness");
  if (!(alpha > beta)) fail("alpha > beta");
  if (!(alpha > gamma)) fail("alpha > gamma");
  if (!(beta >= 2 * gamma)) fail("beta >= 2*gamma");
  if (!(gamma < 0)) fail("gamma < 0");
  integral_ = small_integer(alpha) && small_integer(beta) && small_integer(gamma);
}

std::string Alignment::strip(std::string_view row) {
  std::string out;
  for (char c : row) {
    if (c != kGap) out.push_back(c);
  }
  return out;
}

namespace {

template <class T>
struct Scores {
  T match, mismatch, gap;

  explicit Scores(const AlignmentParams& p)
      : match(static_cast<T>(p.alpha())),
        mismatch(static_cast<T>(p.beta())),
        gap(static_cast<T>(p.gamma())) {}

  T column(char a, char b) const {
    if (a == kGap && b == kGap) return T{0};
    if (a == kGap || b == kGap) return gap;
    return a == b ? match : mismatch;
  }
};

template <class T>
T sum_columns(const Alignment& al, const AlignmentParams& params) {
  const Scores<T> s(params);
  T total{0};
  for (std::size_t i = 0; i < al.columns(); ++i) total += s.column(al.top[i], al.bottom[i]);
  return total;
}

template <class T>
AlignmentResult global_align(std::string_view x, std::string_view y, const AlignmentParams& params) {
  const Scores<T> s(params);
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  const std::size_t stride = m + 1;
  std::vector<T> table((n + 1) * stride);
  auto at = [&](std::size_t i, std::size_t j) -> T& { return table[i * stride + j]; };

  at(0, 0) = T{0};
  for (std::size_t i = 1; i <= n; ++i) at(i, 0) = at(i - 1, 0) + s.gap;
  for (std::size_t j = 1; j <= m; ++j) at(0, j) = at(0, j - 1) + s.gap;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const T diag = at(i - 1, j - 1) + s.column(x[i - 1], y[j - 1]);
      const T up = at(i - 1, j) + s.gap;
      const T left = at(i, j - 1) + s.gap;
      at(i, j) = std::max({diag, up, left});
    }
  }

  AlignmentResult result;
  result.score = static_cast<double>(at(n, m));
  std::string top, bottom;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const T here = at(i, j);
    if (i > 0 && j > 0 && here == at(i - 1, j - 1) + s.column(x[i - 1], y[j - 1])) {
      top.push_back(x[--i]);
      bottom.push_back(y[--j]);
    } else if (i > 0 && here == at(i - 1, j) + s.gap) {
      top.push_back(x[--i]);
      bottom.push_back(kGap);
    } else {
      top.push_back(kGap);
      bottom.push_back(y[--j]);
    }
  }
  std::reverse(top.begin(), top.end());
  std::reverse(bottom.begin(), bottom.end());
  result.witness = Alignment{std::move(top), std::move(bottom)};
  return result;
}

void check_input(std::string_view word, const Alphabet& alphabet, std::size_t max_len) {
  if (word.size() > max_len) {
    throw Error(ErrorCode::length_cap_exceeded, "word of length " + std::to_string(word.size()) +
                                                    " exceeds the cap of " + std::to_string(max_len));
  }
  alphabet.validate_word(word);
}

// Appends every column sequence without gap-gap columns and keeps the best
// rescored total.
void enumerate(std::string_view x, std::string_view y, std::size_t i, std::size_t j, Alignment& partial,
               const AlignmentParams& params, const Alphabet& alphabet, double& best) {
  if (i == x.size() && j == y.size()) {
    best = std::max(best, score_alignment(partial, params, alphabet));
    return;
  }
  auto step = [&](char a, char b, std::size_t ni, std::size_t nj) {
    partial.top.push_back(a);
    partial.bottom.push_back(b);
    enumerate(x, y, ni, nj, partial, params, alphabet, best);
    partial.top.pop_back();
    partial.bottom.pop_back();
  };
  if (i < x.size() && j < y.size()) step(x[i], y[j], i + 1, j + 1);
  if (i < x.size()) step(x[i], kGap, i + 1, j);
  if (j < y.size()) step(kGap, y[j], i, j + 1);
}

}  // namespace

double score_alignment(const Alignment& aligned, const AlignmentParams& params,
                       const Alphabet& alphabet) {
  if (aligned.top.size() != aligned.bottom.size()) {
    throw Error(ErrorCode::malformed_alignment,
                "alignment rows differ in length: " + std::to_string(aligned.top.size()) + " vs " +
                    std::to_string(aligned.bottom.size()));
  }
  for (const std::string* row : {&aligned.top, &aligned.bottom}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      const char c = (*row)[i];
      if (c != kGap && !alphabet.contains(c)) {
        throw Error(ErrorCode::malformed_alignment,
                    "alignment symbol '" + std::string(1, c) + "' at column " + std::to_string(i) +
                        " is neither a gap nor in the alphabet");
      }
    }
  }
  if (params.integral()) return static_cast<double>(sum_columns<std::int64_t>(aligned, params));
  return sum_columns<double>(aligned, params);
}

AlignmentResult optimal_score(std::string_view x, std::string_view y, const AlignmentParams& params,
                              const Alphabet& alphabet, std::size_t max_len) {
  check_input(x, alphabet, max_len);
  check_input(y, alphabet, max_len);
  if (params.integral()) return global_align<std::int64_t>(x, y, params);
  return global_align<double>(x, y, params);
}

double brute_force_score(std::string_view x, std::string_view y, const AlignmentParams& params,
                         std::size_t max_total, const Alphabet& alphabet) {
  if (x.size() + y.size() > max_total) {
    throw Error(ErrorCode::size_bound_exceeded,
                "brute force limited to total length " + std::to_string(max_total) + ", got " +
                    std::to_string(x.size() + y.size()));
  }
  alphabet.validate_word(x);
  alphabet.validate_word(y);
  Alignment partial;
  double best = -std::numeric_limits<double>::infinity();
  enumerate(x, y, 0, 0, partial, params, alphabet, best);
  return best;
}

}  // namespace pmetric::alignment
