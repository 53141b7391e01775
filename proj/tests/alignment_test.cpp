#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "pmetric/alignment.hpp"
#include "pmetric/error.hpp"
#include "pmetric/sampler.hpp"

using namespace pmetric;
using namespace pmetric::alignment;

namespace {

const AlignmentParams kScheme(1, -1, -2);

// Every word over `symbols` with length <= max_len, shortest first.
std::vector<std::string> all_words(const std::string& symbols, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (out[start].size() == max_len) continue;
    for (char c : symbols) out.push_back(out[start] + c);
  }
  return out;
}

std::string random_word(Rng& rng, const std::string& symbols, std::size_t max_len) {
  std::string w(uniform_index(rng, max_len + 1), ' ');
  for (char& c : w) c = symbols[uniform_index(rng, symbols.size())];
  return w;
}

// Independent oracle: plain recursion over the three column choices, no
// memoisation and no shared code with the library.
double recursive_best(const std::string& x, const std::string& y, double a, double b, double g) {
  std::function<double(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> double {
    if (i == x.size() && j == y.size()) return 0.0;
    double best = -1e300;
    if (i < x.size() && j < y.size()) best = std::max(best, (x[i] == y[j] ? a : b) + go(i + 1, j + 1));
    if (i < x.size()) best = std::max(best, g + go(i + 1, j));
    if (j < y.size()) best = std::max(best, g + go(i, j + 1));
    return best;
  };
  return go(0, 0);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pmetric::Error thrown";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Params, Constraints) {
  EXPECT_TRUE(kScheme.integral());
  EXPECT_FALSE(AlignmentParams(1.5, -1, -2).integral());
  for (auto [a, b, g] : {std::tuple{1.0, -3.0, -1.0}, std::tuple{-1.0, -1.0, -2.0},
                         std::tuple{0.0, -1.0, 0.0}, std::tuple{-3.0, -1.0, -2.0}}) {
    EXPECT_EQ(code_of([=] { AlignmentParams(a, b, g); }), ErrorCode::parameter_constraint);
  }
  try {
    AlignmentParams(1, -3, -1);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(">="), std::string::npos) << e.what();
  }
}

TEST(Score, PaddedExample) {
  EXPECT_EQ(score_alignment({"CGA-TC", "C-AGA-"}, kScheme), -5.0);
}

TEST(Score, SimpleColumns) {
  EXPECT_EQ(score_alignment({"ACGT", "ACGT"}, AlignmentParams(3, 0, -1)), 12.0);
  EXPECT_EQ(score_alignment({"---", "---"}, kScheme), 0.0);
  EXPECT_EQ(code_of([] { score_alignment({"AC", "A"}, kScheme); }), ErrorCode::malformed_alignment);
  EXPECT_EQ(code_of([] { score_alignment({"A?", "AC"}, kScheme); }), ErrorCode::malformed_alignment);
}

TEST(Optimal, WorkedPair) {
  const auto r = optimal_score("CGATC", "CAGA", kScheme);
  EXPECT_EQ(r.score, -2.0);
  EXPECT_EQ(Alignment::strip(r.witness.top), "CGATC");
  EXPECT_EQ(Alignment::strip(r.witness.bottom), "CAGA");
  EXPECT_EQ(score_alignment(r.witness, kScheme), -2.0);
}

TEST(Optimal, SmallCases) {
  const auto empty = optimal_score("", "", kScheme);
  EXPECT_EQ(empty.score, 0.0);
  EXPECT_EQ(empty.witness.columns(), 0u);
  EXPECT_EQ(optimal_score("A", "", kScheme).score, -2.0);
  EXPECT_EQ(optimal_score("A", "A", kScheme).score, 1.0);
  // A/C mismatch (-1) beats A-/-C (2 gamma = -4)
  EXPECT_EQ(optimal_score("A", "C", kScheme).score, -1.0);
}

TEST(Optimal, TracebackPrefersDiagonal) {
  // both A-/AA style alignments tie; the diagonal-first traceback puts the
  // gap at the front when reading back from the end
  const auto r = optimal_score("AA", "A", kScheme);
  EXPECT_EQ(r.score, -1.0);
  EXPECT_EQ(r.witness.top, "AA");
  EXPECT_EQ(r.witness.bottom, "-A");
}

TEST(Optimal, LengthCapAndSymbols) {
  const std::string long_word(65, 'A');
  EXPECT_EQ(code_of([&] { optimal_score(long_word, "A", kScheme); }), ErrorCode::length_cap_exceeded);
  EXPECT_NO_THROW(optimal_score(long_word, "A", kScheme, Alphabet::uppercase(), 65));
  EXPECT_EQ(code_of([] { optimal_score("ACGU", "A", kScheme, Alphabet::dna()); }),
            ErrorCode::invalid_symbol);
  try {
    Alphabet::dna().validate_word("ACXT");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos) << e.what();
  }
}

TEST(BruteForce, BoundIsEnforced) {
  EXPECT_EQ(brute_force_score("CGATC", "CAGA", kScheme), -2.0);
  EXPECT_EQ(code_of([] { brute_force_score("ABCDEF", "ABCDE", kScheme); }), ErrorCode::size_bound_exceeded);
}

TEST(BruteForce, MatchesRecursiveOracle) {
  for (const auto& x : all_words("AB", 3)) {
    for (const auto& y : all_words("AB", 3)) {
      EXPECT_EQ(brute_force_score(x, y, kScheme), recursive_best(x, y, 1, -1, -2)) << x << "/" << y;
    }
  }
}

TEST(Properties, DpEqualsBruteForceExhaustive) {
  for (const auto& params : {AlignmentParams(1, -1, -2), AlignmentParams(2, -1, -1),
                             AlignmentParams(1.5, -0.5, -0.75)}) {
    for (const auto& x : all_words("AB", 3)) {
      for (const auto& y : all_words("AB", 3)) {
        const auto r = optimal_score(x, y, params);
        EXPECT_EQ(r.score, brute_force_score(x, y, params)) << x << "/" << y;
        EXPECT_EQ(score_alignment(r.witness, params), r.score);
      }
    }
  }
}

TEST(Properties, DpEqualsBruteForceSeeded) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_word(rng, "ACGT", 5);
    const auto y = random_word(rng, "ACGT", 5);
    EXPECT_EQ(optimal_score(x, y, kScheme).score, brute_force_score(x, y, kScheme)) << x << "/" << y;
  }
}

TEST(Properties, ScoreLevelInvariants) {
  Rng rng(23);
  for (const auto& params : {AlignmentParams(1, -1, -2), AlignmentParams(3, 0, -1)}) {
    for (int i = 0; i < 500; ++i) {
      const auto x = random_word(rng, "ACGT", 6);
      const auto y = random_word(rng, "ACGT", 6);
      const auto z = random_word(rng, "ACGT", 6);
      const double sxy = optimal_score(x, y, params).score;
      const double sxx = optimal_score(x, x, params).score;
      EXPECT_EQ(sxy, optimal_score(y, x, params).score);
      EXPECT_EQ(sxx, params.alpha() * static_cast<double>(x.size()));
      if (x != y) {
        EXPECT_LT(sxy, sxx);
      }
      EXPECT_LE(sxy, sxx);
      // h(x, y) >= s(x, z) + s(z, y) - s(z, z)
      const double bound = optimal_score(x, z, params).score + optimal_score(z, y, params).score -
                           optimal_score(z, z, params).score;
      EXPECT_GE(sxy, bound) << x << " " << y << " " << z;
    }
  }
}

TEST(Properties, WitnessRescoresAndStrips) {
  Rng rng(31);
  const AlignmentParams p(2, -1, -1);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_word(rng, "ACGT", 12);
    const auto y = random_word(rng, "ACGT", 12);
    const auto r = optimal_score(x, y, p);
    EXPECT_EQ(Alignment::strip(r.witness.top), x);
    EXPECT_EQ(Alignment::strip(r.witness.bottom), y);
    EXPECT_EQ(score_alignment(r.witness, p), r.score);
    for (std::size_t c = 0; c < r.witness.columns(); ++c) {
      EXPECT_FALSE(r.witness.top[c] == kGap && r.witness.bottom[c] == kGap);
    }
  }
}
