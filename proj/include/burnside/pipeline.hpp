#pragma once

// Canonical almost overlap-free representatives in the free Burnside
// semigroup on {a, b} satisfying x^2 = x^3.
//
// ancestor() repeatedly shrinks a word (r1, tail reduction, complete
// reduction, then phi^{-1} of the maximal phi-image factor) while recording
// the letters it strips at each level. normalize() rebuilds a word from a
// representative of the final ancestor's class using those letters, and
// eqaof() glues both together: it returns the unique almost overlap-free word
// equivalent to the input, or nothing if the class has none.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/reductions.hpp"
#include "burnside/word.hpp"

namespace burnside {

  enum class StopReason {
    short_word,          // |U| <= 2
    special_class,       // U in [aabaabbaabaa] or its negation
    not_ab_whole,        // after tail reduction
    non_reducible_tail,  // after tail reduction
  };

  [[nodiscard]] std::string_view to_string(StopReason reason) noexcept;

  // One pass of the ancestor loop, kept when tracing.
  struct AncestorStep {
    std::size_t k;
    Word        u;  // U_k, r1-reduced
    TailReport  tails;
    MaybeLetter left;
    MaybeLetter right;
    MaybeLetter head;
    MaybeLetter tail;
    // phi^{-1}(eta(r(r_T(U_k)))), or empty when the loop stops here.
    std::optional<Word>       next;
    std::optional<StopReason> stop;
  };

  struct PrimarySeries {
    std::size_t ell = 0;
    Word        anc;
    // Index i holds the entry for level k = i + 1.
    std::vector<MaybeLetter> left;
    std::vector<MaybeLetter> right;
    std::vector<MaybeLetter> head;
    std::vector<MaybeLetter> tail;
    StopReason               stop = StopReason::short_word;
    // U_1, ..., U_ell and per-level details; filled only when tracing.
    std::vector<Word>         series;
    std::vector<AncestorStep> steps;
  };

  // Throws Error(empty_input).
  [[nodiscard]] PrimarySeries ancestor(Word const& u, bool trace = false);

  // Rebuilds a word from w, a cube-free word equivalent to the ancestor of
  // the word `series` was computed from.
  [[nodiscard]] Word normalize(Word w, PrimarySeries const& series);

  // Either the almost overlap-free word equivalent to the input, or nothing.
  using EqaofResult = std::optional<Word>;

  [[nodiscard]] EqaofResult eqaof(Word const& u);

  enum class Verdict { equivalent, not_equivalent, unknown };

  [[nodiscard]] std::string_view to_string(Verdict v) noexcept;

  // Partial decision of u ~ v. Unknown only when neither word is equivalent
  // to an almost overlap-free word.
  [[nodiscard]] Verdict decide_equiv(Word const& u, Word const& v);

}  // namespace burnside
