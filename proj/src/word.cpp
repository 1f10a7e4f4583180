#include "burnside/word.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "burnside/detail/repetitions.hpp"
#include "burnside/error.hpp"

namespace burnside {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::invalid_word:
        return "InvalidWord";
      case ErrorCode::empty_input:
        return "EmptyInput";
      case ErrorCode::not_phi_image:
        return "NotPhiImage";
      case ErrorCode::not_r1_reduced:
        return "NotR1Reduced";
      case ErrorCode::not_uniform:
        return "NotUniform";
      case ErrorCode::bound_too_large:
        return "BoundTooLarge";
      case ErrorCode::bad_expression:
        return "BadExpression";
    }
    return "Unknown";
  }

  char to_char(MaybeLetter x) noexcept {
    return x ? to_char(*x) : '-';
  }

  Word Word::parse(std::string_view text) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char const c = text[i];
      if (c == 'a') {
        out.push_back(Letter::a);
      } else if (c == 'b') {
        out.push_back(Letter::b);
      } else {
        throw Error(ErrorCode::invalid_word,
                    "unexpected character at offset " + std::to_string(i));
      }
    }
    return Word(std::move(out));
  }

  Letter Word::letter(std::size_t pos) const {
    if (pos == 0 || pos > _letters.size()) {
      throw std::out_of_range("position " + std::to_string(pos)
                              + " outside 1.." + std::to_string(size()));
    }
    return _letters[pos - 1];
  }

  Word Word::factor(std::size_t first, std::size_t last) const {
    if (first == 0 || last > size() || first > last + 1) {
      throw std::out_of_range("bad factor " + std::to_string(first) + ".."
                              + std::to_string(last));
    }
    return Word(std::span<Letter const>(_letters).subspan(first - 1,
                                                          last + 1 - first));
  }

  Word Word::prefix(std::size_t len) const {
    return factor(1, std::min(len, size()));
  }

  Word Word::suffix(std::size_t len) const {
    len = std::min(len, size());
    return factor(size() - len + 1, size());
  }

  std::string Word::str() const {
    std::string out(size(), 'a');
    std::transform(begin(), end(), out.begin(),
                   [](Letter x) { return to_char(x); });
    return out;
  }

  bool Word::shortlex_less(Word const& other) const noexcept {
    if (size() != other.size()) {
      return size() < other.size();
    }
    return _letters < other._letters;
  }

  Word operator+(Word lhs, Word const& rhs) {
    lhs.append(rhs);
    return lhs;
  }

  Word operator+(MaybeLetter lhs, Word const& rhs) {
    Word out;
    out.reserve(rhs.size() + 1);
    out.push_back(lhs);
    out.append(rhs);
    return out;
  }

  Word operator+(Word lhs, MaybeLetter rhs) {
    lhs.push_back(rhs);
    return lhs;
  }

  std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << w.str();
  }

  Word negate(Word const& w) {
    std::vector<Letter> out(w.size());
    std::transform(w.begin(), w.end(), out.begin(),
                   [](Letter x) { return negate(x); });
    return Word(std::move(out));
  }

  Word reverse(Word const& w) {
    return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
  }

  Word phi(Word const& w) {
    std::vector<Letter> out;
    out.reserve(2 * w.size());
    for (Letter x : w) {
      out.push_back(x);
      out.push_back(negate(x));
    }
    return Word(std::move(out));
  }

  Word phi_inverse(Word const& w) {
    if (w.size() % 2 != 0) {
      throw Error(ErrorCode::not_phi_image, "odd length");
    }
    std::vector<Letter> out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) {
      if (w[i] == w[i + 1]) {
        throw Error(ErrorCode::not_phi_image,
                    "block at position " + std::to_string(i + 1));
      }
      out.push_back(w[i]);
    }
    return Word(std::move(out));
  }

  std::optional<Word> cube_root(Word const& w) {
    std::size_t const n = w.size();
    if (n == 0 || n % 3 != 0) {
      return std::nullopt;
    }
    std::size_t const p = n / 3;
    for (std::size_t i = p; i < n; ++i) {
      if (w[i] != w[i - p]) {
        return std::nullopt;
      }
    }
    return w.prefix(p);
  }

  bool is_phi_image(Word const& w) {
    if (w.size() % 2 != 0) {
      return false;
    }
    for (std::size_t i = 0; i < w.size(); i += 2) {
      if (w[i] == w[i + 1]) {
        return false;
      }
    }
    return true;
  }

  bool is_cube_free(Word const& w) {
    return !detail::find_repetition(
        w.letters(), [](detail::PeriodicRegion const& r) {
          return r.length >= 3 * r.period;
        });
  }

  bool is_overlap_free(Word const& w) {
    return !detail::find_repetition(
        w.letters(), [](detail::PeriodicRegion const& r) {
          return r.length >= 2 * r.period + 1;
        });
  }

  bool is_almost_overlap_free(Word const& w) {
    std::size_t const n = w.size();
    // The only overlap allowed is the whole word itself, which shows up as a
    // maximal region covering everything with length exactly 2p + 1.
    return !detail::find_repetition(
        w.letters(), [n](detail::PeriodicRegion const& r) {
          if (r.length < 2 * r.period + 1) {
            return false;
          }
          return !(r.start == 0 && r.length == n
                   && r.length == 2 * r.period + 1);
        });
  }

  bool is_letter_alternating(Word const& w) {
    return !first_letter_square(w).has_value();
  }

  std::optional<std::size_t> first_letter_square(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1]) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool is_uniform(Word const& w) {
    int parity = -1;
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1]) {
        int const p = static_cast<int>(i % 2);
        if (parity == -1) {
          parity = p;
        } else if (parity != p) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_r1_reduced(Word const& w) {
    for (std::size_t i = 2; i < w.size(); ++i) {
      if (w[i] == w[i - 1] && w[i] == w[i - 2]) {
        return false;
      }
    }
    return true;
  }

  Word thue_morse_prefix(std::size_t n) {
    std::vector<Letter> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = (std::popcount(i) % 2 == 0) ? Letter::a : Letter::b;
    }
    return Word(std::move(out));
  }

}  // namespace burnside

std::size_t std::hash<burnside::Word>::operator()(
    burnside::Word const& w) const noexcept {
  // FNV-1a over the letters, with the length folded in.
  std::size_t h = 1469598103934665603ULL ^ w.size();
  for (burnside::Letter x : w) {
    h ^= static_cast<std::size_t>(x) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}
