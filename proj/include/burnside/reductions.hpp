#pragma once

// The reduction calculus on words over {a, b}:
//
//   r1                 c^n -> c^2 for n >= 3
//   complete reduction r1 together with a(ab)^k aa -> aa and b(ba)^k bb -> bb
//   tail reduction     shortening of the non-uniform tails to 7 letters
//
// plus detection of the two tail families (non-uniform and non-reducible) and
// the AB-whole predicate. B-side patterns are always handled by negating the
// input, running the A-side code and negating back.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burnside/word.hpp"

namespace burnside {

  enum class Side { left, right };
  enum class LetterClass { A, B };
  enum class TailFamily { non_uniform, non_reducible };

  struct TailKind {
    Side        side;
    LetterClass letter_class;
    TailFamily  family;

    friend bool operator==(TailKind const&, TailKind const&) = default;
  };

  // A maximal anchored prefix (left) or suffix (right) matching one of the
  // tail patterns. Positions are 1-based and inclusive.
  struct Tail {
    TailKind    kind;
    std::size_t first;
    std::size_t last;

    [[nodiscard]] std::size_t length() const noexcept {
      return last + 1 - first;
    }

    friend bool operator==(Tail const&, Tail const&) = default;
  };

  struct TailReport {
    std::vector<Tail> tails;

    [[nodiscard]] bool empty() const noexcept {
      return tails.empty();
    }
    [[nodiscard]] std::optional<Tail> find(Side side, TailFamily family) const;
    // Sorted (side, class, family) triples, for comparing reports.
    [[nodiscard]] std::vector<TailKind> kinds() const;
  };

  // `side=left class=A family=nonuniform span=1..8`
  [[nodiscard]] std::string format_tail(Tail const& t);
  std::ostream& operator<<(std::ostream& os, TailReport const& report);

  // An occurrence of a(ab)^k aa or b(ba)^k bb (k >= 1) that does not sit
  // inside abXba (resp. baXab).
  struct WholeViolation {
    std::size_t first;
    std::size_t last;
    LetterClass letter_class;

    friend bool operator==(WholeViolation const&,
                           WholeViolation const&) = default;
  };

  [[nodiscard]] Word r1(Word const& w);

  // Requires an r1-reduced word; throws Error(not_r1_reduced) otherwise.
  [[nodiscard]] std::vector<WholeViolation>
  find_whole_violations(Word const& w);
  [[nodiscard]] bool is_ab_whole(Word const& w);

  // Normal form of the rewriting system
  //   c^n -> c^2, a(ab)^k aa -> aa, b(ba)^k bb -> bb   (n >= 3, k >= 1)
  // on arbitrary words. Linear time; the result is uniform.
  [[nodiscard]] Word complete_reduction(Word const& w);

  [[nodiscard]] TailReport detect_non_reducible_tails(Word const& w);
  [[nodiscard]] TailReport detect_non_uniform_tails(Word const& w);

  // Shorten a left (right) non-uniform tail to its last (first) 7 letters.
  // Require an r1-reduced word.
  [[nodiscard]] Word tail_reduce_left(Word const& w);
  [[nodiscard]] Word tail_reduce_right(Word const& w);
  [[nodiscard]] Word tail_reduce(Word const& w);

  // Every reduced non-uniform tail has this length.
  inline constexpr std::size_t reduced_tail_length = 7;

}  // namespace burnside
