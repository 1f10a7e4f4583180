#pragma once

// Words over the two-letter alphabet {a, b}, the Thue-Morse morphism and the
// word predicates used throughout the normalization pipeline.
//
// Positions exposed through the public API (Word::letter, Word::factor, spans
// in reports) are 1-based. Iteration and operator[] are 0-based, as for any
// standard container.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace burnside {

  enum class Letter : std::uint8_t { a = 0, b = 1 };

  [[nodiscard]] constexpr Letter negate(Letter x) noexcept {
    return x == Letter::a ? Letter::b : Letter::a;
  }

  [[nodiscard]] constexpr char to_char(Letter x) noexcept {
    return x == Letter::a ? 'a' : 'b';
  }

  // A letter or the empty word. Used for the boundary letters of frames and
  // for the L, R, h, t arrays of a primary series.
  using MaybeLetter = std::optional<Letter>;

  // `-` stands for the empty word.
  [[nodiscard]] char to_char(MaybeLetter x) noexcept;

  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::span<Letter const> letters)
        : _letters(letters.begin(), letters.end()) {}

    // Parses an ASCII string over {a, b}; the empty string is the empty word.
    // Throws Error(invalid_word) on any other character.
    [[nodiscard]] static Word parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }

    // 1-based access, W[i] for 1 <= i <= |W|.
    [[nodiscard]] Letter letter(std::size_t pos) const;

    [[nodiscard]] Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    [[nodiscard]] Letter front() const {
      return _letters.front();
    }
    [[nodiscard]] Letter back() const {
      return _letters.back();
    }

    // W[first..last], 1-based and inclusive; first = last + 1 gives the empty
    // word.
    [[nodiscard]] Word factor(std::size_t first, std::size_t last) const;
    [[nodiscard]] Word prefix(std::size_t len) const;
    [[nodiscard]] Word suffix(std::size_t len) const;

    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }
    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    void push_back(Letter x) {
      _letters.push_back(x);
    }
    void push_back(MaybeLetter x) {
      if (x) {
        _letters.push_back(*x);
      }
    }
    void append(Word const& other) {
      _letters.insert(_letters.end(), other.begin(), other.end());
    }
    void reserve(std::size_t n) {
      _letters.reserve(n);
    }

    [[nodiscard]] std::string str() const;

    // Shortlex: shorter words first, then lexicographic with a < b.
    [[nodiscard]] bool shortlex_less(Word const& other) const noexcept;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  [[nodiscard]] Word operator+(Word lhs, Word const& rhs);
  [[nodiscard]] Word operator+(MaybeLetter lhs, Word const& rhs);
  [[nodiscard]] Word operator+(Word lhs, MaybeLetter rhs);

  std::ostream& operator<<(std::ostream& os, Word const& w);

  inline namespace literals {
    // "abba"_w; throws on characters other than a and b.
    [[nodiscard]] inline Word operator""_w(char const* s, std::size_t n) {
      return Word::parse(std::string_view(s, n));
    }
  }  // namespace literals

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] Word negate(Word const& w);
  [[nodiscard]] Word reverse(Word const& w);

  // Thue-Morse morphism a -> ab, b -> ba.
  [[nodiscard]] Word phi(Word const& w);

  // The unique v with phi(v) = w. Throws Error(not_phi_image).
  [[nodiscard]] Word phi_inverse(Word const& w);

  // w = v^3 for v the prefix of length |w|/3.
  [[nodiscard]] std::optional<Word> cube_root(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] bool is_phi_image(Word const& w);
  [[nodiscard]] bool is_cube_free(Word const& w);
  [[nodiscard]] bool is_overlap_free(Word const& w);
  // Every proper factor is overlap-free.
  [[nodiscard]] bool is_almost_overlap_free(Word const& w);
  [[nodiscard]] bool is_letter_alternating(Word const& w);
  // All occurrences of aa and bb start at positions of one parity.
  [[nodiscard]] bool is_uniform(Word const& w);
  [[nodiscard]] bool is_r1_reduced(Word const& w);

  // 1-based start of the first factor aa or bb, if any.
  [[nodiscard]] std::optional<std::size_t> first_letter_square(Word const& w);

  // Prefix of length n of the Thue-Morse word.
  [[nodiscard]] Word thue_morse_prefix(std::size_t n);

}  // namespace burnside

template <>
struct std::hash<burnside::Word> {
  std::size_t operator()(burnside::Word const& w) const noexcept;
};
