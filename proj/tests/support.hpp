#pragma once

// Slow, obviously-correct reference implementations used as test oracles.
// Nothing here shares code with the library beyond the Word container.

#include <cstddef>
#include <optional>
#include <ostream>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burnside/word.hpp"

namespace burnside {

  // Readable words in test failure messages.
  inline void PrintTo(Word const& w, std::ostream* os) {
    *os << '"' << w.str() << '"';
  }

}  // namespace burnside

namespace burnside::testing {

  // All 2^n words of length n in lexicographic order.
  inline std::vector<Word> words_of_length(std::size_t n) {
    std::vector<Word> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::vector<Letter> letters(n);
      for (std::size_t i = 0; i < n; ++i) {
        letters[i] = ((bits >> (n - 1 - i)) & 1) ? Letter::b : Letter::a;
      }
      out.emplace_back(std::move(letters));
    }
    return out;
  }

  // Words of length 0..n (including the empty word).
  inline std::vector<Word> words_up_to(std::size_t n) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= n; ++len) {
      auto more = words_of_length(len);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }

  inline Word random_word(std::mt19937_64& rng, std::size_t n) {
    std::vector<Letter> letters(n);
    for (auto& x : letters) {
      x = (rng() & 1) ? Letter::b : Letter::a;
    }
    return Word(std::move(letters));
  }

  // True if w[i..i+len) has period p.
  inline bool has_period(Word const& w, std::size_t i, std::size_t len,
                         std::size_t p) {
    for (std::size_t k = i + p; k < i + len; ++k) {
      if (w[k] != w[k - p]) {
        return false;
      }
    }
    return true;
  }

  inline bool brute_overlap_free(Word const& w) {
    std::size_t const n = w.size();
    for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
      for (std::size_t i = 0; i + 2 * p + 1 <= n; ++i) {
        if (has_period(w, i, 2 * p + 1, p)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool brute_cube_free(Word const& w) {
    std::size_t const n = w.size();
    for (std::size_t p = 1; 3 * p <= n; ++p) {
      for (std::size_t i = 0; i + 3 * p <= n; ++i) {
        if (has_period(w, i, 3 * p, p)) {
          return false;
        }
      }
    }
    return true;
  }

  // Straight from the definition: every factor shorter than w is
  // overlap-free.
  inline bool brute_almost_overlap_free(Word const& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t len = 1; i + len <= w.size(); ++len) {
        if (len < w.size()
            && !brute_overlap_free(Word(w.letters().subspan(i, len)))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool brute_uniform(Word const& w) {
    std::set<std::size_t> parities;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        parities.insert(i % 2);
      }
    }
    return parities.size() <= 1;
  }

  inline bool brute_phi_image(Word const& w) {
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

  inline bool is_factor(Word const& needle, Word const& hay) {
    std::string const h = hay.str();
    return h.find(needle.str()) != std::string::npos;
  }

  // Every split w = c Q d with |c|, |d| <= 1 and Q a phi-image, as
  // (|c|, Q) pairs.
  inline std::vector<std::pair<std::size_t, Word>>
  boundary_phi_splits(Word const& w) {
    std::vector<std::pair<std::size_t, Word>> out;
    for (std::size_t c = 0; c <= 1 && c <= w.size(); ++c) {
      for (std::size_t d = 0; d <= 1 && c + d <= w.size(); ++d) {
        Word q(w.letters().subspan(c, w.size() - c - d));
        if (brute_phi_image(q)) {
          out.emplace_back(c, q);
        }
      }
    }
    return out;
  }

  // One site of the complete-reduction system: w[first..first+len) -> cc.
  struct Redex {
    std::size_t first;
    std::size_t len;
  };

  // Every redex: c^3 (longer runs reduce through repeated c^3 steps) and
  // c(cd)^k cc with k >= 1, d the other letter.
  inline std::vector<Redex> all_redexes(std::string const& s) {
    std::vector<Redex> out;
    for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
      if (s[i] == s[i + 1] && s[i + 1] == s[i + 2]) {
        out.push_back({i, 3});
      }
      char const c = s[i];
      char const d = c == 'a' ? 'b' : 'a';
      for (std::size_t k = 1; i + 2 * k + 3 <= s.size(); ++k) {
        if (s[i + 2 * k - 1] != c || s[i + 2 * k] != d) {
          break;
        }
        if (s[i + 2 * k + 1] == c && s[i + 2 * k + 2] == c) {
          out.push_back({i, 2 * k + 3});
        }
      }
    }
    return out;
  }

  inline std::string apply_redex(std::string const& s, Redex r) {
    return s.substr(0, r.first) + std::string(2, s[r.first])
           + s.substr(r.first + r.len);
  }

  // The rewriting system run literally: leftmost site first, shortest match
  // at that site.
  inline Word literal_complete_reduction(Word const& w) {
    std::string s = w.str();
    while (true) {
      auto const sites = all_redexes(s);
      if (sites.empty()) {
        return Word::parse(s);
      }
      // all_redexes lists sites by position, shortest first.
      s = apply_redex(s, sites.front());
    }
  }

  inline Word random_order_reduction(Word const& w, std::mt19937_64& rng) {
    std::string s = w.str();
    while (true) {
      auto const sites = all_redexes(s);
      if (sites.empty()) {
        return Word::parse(s);
      }
      s = apply_redex(s, sites[rng() % sites.size()]);
    }
  }

  // Star expression to std::regex syntax: `X^n` becomes `X{n}`.
  inline std::regex to_regex(std::string const& expression) {
    static std::regex const power(R"(\^(\d+))");
    return std::regex(std::regex_replace(expression, power, "{$1}"));
  }

  inline bool regex_accepts(std::regex const& re, Word const& w) {
    return std::regex_match(w.str(), re);
  }

  // Longest prefix of w matched by re, if any.
  inline std::optional<std::size_t> regex_longest_prefix(std::regex const& re,
                                                         Word const& w) {
    std::string const s = w.str();
    for (std::size_t len = s.size() + 1; len-- > 0;) {
      if (std::regex_match(s.substr(0, len), re)) {
        return len;
      }
    }
    return std::nullopt;
  }

  inline std::optional<std::size_t> regex_longest_suffix(std::regex const& re,
                                                         Word const& w) {
    std::string const s = w.str();
    for (std::size_t len = s.size() + 1; len-- > 0;) {
      if (std::regex_match(s.substr(s.size() - len), re)) {
        return len;
      }
    }
    return std::nullopt;
  }

  // Applies `steps` rewrites at uniformly chosen square sites with period at
  // most max_period: Y^2 -> Y^3, or Y^3 -> Y^2 for a third of cube sites.
  // The result is equivalent to w by construction.
  inline Word random_rewrites(Word const& w, int steps, std::mt19937_64& rng,
                              std::size_t max_period = 8) {
    std::string s = w.str();
    for (int step = 0; step < steps; ++step) {
      std::vector<std::pair<std::size_t, std::size_t>> squares;
      for (std::size_t p = 1; p <= max_period && 2 * p <= s.size(); ++p) {
        for (std::size_t i = 0; i + 2 * p <= s.size(); ++i) {
          if (s.compare(i, p, s, i + p, p) == 0) {
            squares.emplace_back(i, p);
          }
        }
      }
      if (squares.empty()) {
        break;
      }
      auto const [i, p] = squares[rng() % squares.size()];
      bool const cube   = i + 3 * p <= s.size()
                        && s.compare(i, p, s, i + 2 * p, p) == 0;
      if (cube && rng() % 3 == 0) {
        s.erase(i, p);
      } else {
        s.insert(i, s.substr(i, p));
      }
    }
    return Word::parse(s);
  }

}  // namespace burnside::testing
