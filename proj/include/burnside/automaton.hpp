#pragma once

// Deterministic acceptors for the star expressions that describe equivalence
// classes and tails, e.g. "(aab)^2(aab)*(b(aab)*aab)*(baa)*(baa)^2".
//
// Accepted syntax: letters a and b, parentheses, postfix `*` and postfix `^n`
// (n-fold concatenation). There is no alternation; none of the languages
// needed here require it. Each expression is compiled once into a forward DFA
// and a DFA for the reversed language, so both anchored prefix and anchored
// suffix matches run in a single scan that stops at the first dead state.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/word.hpp"

namespace burnside {

  class Dfa {
   public:
    using State = std::uint32_t;

    Dfa() = default;
    Dfa(std::vector<std::array<State, 2>> delta,
        std::vector<bool>                 accepting,
        State                             start);

    [[nodiscard]] State start() const noexcept {
      return _start;
    }
    [[nodiscard]] State next(State s, Letter x) const noexcept {
      return _delta[s][static_cast<std::size_t>(x)];
    }
    [[nodiscard]] bool accepting(State s) const noexcept {
      return _accepting[s];
    }
    // A state from which no accepting state is reachable.
    [[nodiscard]] bool dead(State s) const noexcept {
      return !_live[s];
    }
    [[nodiscard]] std::size_t num_states() const noexcept {
      return _delta.size();
    }

   private:
    std::vector<std::array<State, 2>> _delta;
    std::vector<bool>                 _accepting;
    std::vector<bool>                 _live;
    State                             _start = 0;
  };

  class Recognizer {
   public:
    // Throws Error(bad_expression) on a syntax error.
    explicit Recognizer(std::string_view expression);

    [[nodiscard]] std::string const& expression() const noexcept {
      return _expression;
    }

    [[nodiscard]] bool accepts(std::span<Letter const> w) const;
    [[nodiscard]] bool accepts(Word const& w) const {
      return accepts(w.letters());
    }

    // Length of the longest prefix (suffix) of w in the language.
    [[nodiscard]] std::optional<std::size_t>
    longest_prefix(std::span<Letter const> w) const;
    [[nodiscard]] std::optional<std::size_t>
    longest_suffix(std::span<Letter const> w) const;

    [[nodiscard]] Dfa const& forward() const noexcept {
      return _forward;
    }

   private:
    std::string _expression;
    Dfa         _forward;
    Dfa         _backward;
  };

  // The expression for the letterwise negation of the language.
  [[nodiscard]] std::string negate_expression(std::string_view expression);

}  // namespace burnside
