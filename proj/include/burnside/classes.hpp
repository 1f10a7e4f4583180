#pragma once

// The finitely many equivalence classes that seed normalization.
//
// Each class is given by a short representative and a star expression for
// the class restricted to r1-reduced words:
//
//   * nine non-uniform almost overlap-free words and their negations,
//   * the six words XcXcX with |X| = 2 (the cube-contraction classes),
//   * the singletons a, b, aa, bb, ab, ba.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burnside/automaton.hpp"
#include "burnside/word.hpp"

namespace burnside {

  enum class PatternFamily {
    non_uniform_aof,
    cube_contraction,
    short_word,
    letter_alternating,
  };

  class ClassPattern {
   public:
    ClassPattern(Word representative, std::string expression,
                 PatternFamily family);

    [[nodiscard]] Word const& representative() const noexcept {
      return _representative;
    }
    [[nodiscard]] std::string const& expression() const noexcept {
      return _recognizer.expression();
    }
    [[nodiscard]] PatternFamily family() const noexcept {
      return _family;
    }
    [[nodiscard]] bool accepts(Word const& w) const {
      return _recognizer.accepts(w);
    }

   private:
    Word          _representative;
    Recognizer    _recognizer;
    PatternFamily _family;
  };

  inline constexpr std::size_t pattern_count = 30;

  // Fixed order: the nine non-uniform words, their negations, the six
  // cube-contraction words, then a, b, aa, bb, ab, ba.
  [[nodiscard]] std::span<ClassPattern const> pattern_table();

  // Every class that contains a letter-alternating word: a, ab, aba,
  // (ab)^2(ab)*, (ab)^2(ab)*a and their negations. Not consulted by match_S;
  // the pipeline reaches these classes through the ancestor series.
  inline constexpr std::size_t letter_alternating_count = 10;

  [[nodiscard]] std::span<ClassPattern const> letter_alternating_patterns();

  // The representative whose class contains x. Requires x r1-reduced.
  [[nodiscard]] std::optional<Word> match_S(Word const& x);

  // x in [aabaabbaabaa] or [bbabbaabbabb]. Requires x r1-reduced.
  [[nodiscard]] bool in_special_class(Word const& x);

}  // namespace burnside
