#include "burnside/reductions.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <tuple>

#include "burnside/automaton.hpp"
#include "burnside/error.hpp"

namespace burnside {

  namespace {

    void require_r1_reduced(Word const& w) {
      if (!is_r1_reduced(w)) {
        throw Error(ErrorCode::not_r1_reduced, w.str());
      }
    }

    // A-side expressions; the B-side recognizers use their negations.
    constexpr std::string_view non_uniform_left   = "(aab)*(aab)^2ba";
    constexpr std::string_view non_uniform_right  = "ab(baa)^2(baa)*";
    constexpr std::string_view non_reducible_left = "(aba)(aba)*(ab)^2(ab)*aa";
    constexpr std::string_view non_reducible_right
        = "aa(ba)*(ba)^2(aba)*(aba)";

    struct TailPatterns {
      // Indexed by LetterClass.
      std::array<Recognizer, 2> left;
      std::array<Recognizer, 2> right;
    };

    TailPatterns make_patterns(std::string_view left, std::string_view right) {
      return TailPatterns{
          {Recognizer(left), Recognizer(negate_expression(left))},
          {Recognizer(right), Recognizer(negate_expression(right))}};
    }

    TailPatterns const& patterns(TailFamily family) {
      static TailPatterns const nu
          = make_patterns(non_uniform_left, non_uniform_right);
      static TailPatterns const nr
          = make_patterns(non_reducible_left, non_reducible_right);
      return family == TailFamily::non_uniform ? nu : nr;
    }

    TailReport detect(Word const& w, TailFamily family) {
      auto const& pats = patterns(family);
      TailReport  report;
      for (auto side : {Side::left, Side::right}) {
        for (auto cls : {LetterClass::A, LetterClass::B}) {
          auto const  i   = static_cast<std::size_t>(cls);
          auto const& rec = side == Side::left ? pats.left[i] : pats.right[i];
          auto const  len = side == Side::left
                                ? rec.longest_prefix(w.letters())
                                : rec.longest_suffix(w.letters());
          if (!len || *len == 0) {
            continue;
          }
          TailKind const kind{side, cls, family};
          if (side == Side::left) {
            report.tails.push_back({kind, 1, *len});
          } else {
            report.tails.push_back({kind, w.size() - *len + 1, w.size()});
          }
        }
      }
      return report;
    }

    std::optional<Tail> non_uniform_tail(Word const& w, Side side) {
      return detect(w, TailFamily::non_uniform).find(side,
                                                     TailFamily::non_uniform);
    }

  }  // namespace

  std::optional<Tail> TailReport::find(Side side, TailFamily family) const {
    for (auto const& t : tails) {
      if (t.kind.side == side && t.kind.family == family) {
        return t;
      }
    }
    return std::nullopt;
  }

  std::vector<TailKind> TailReport::kinds() const {
    std::vector<TailKind> out;
    for (auto const& t : tails) {
      out.push_back(t.kind);
    }
    std::sort(out.begin(), out.end(), [](TailKind const& x, TailKind const& y) {
      return std::tie(x.side, x.letter_class, x.family)
             < std::tie(y.side, y.letter_class, y.family);
    });
    return out;
  }

  std::string format_tail(Tail const& t) {
    std::string out = "side=";
    out += t.kind.side == Side::left ? "left" : "right";
    out += " class=";
    out += t.kind.letter_class == LetterClass::A ? "A" : "B";
    out += " family=";
    out += t.kind.family == TailFamily::non_uniform ? "nonuniform"
                                                    : "nonreducible";
    out += " span=" + std::to_string(t.first) + ".." + std::to_string(t.last);
    return out;
  }

  std::ostream& operator<<(std::ostream& os, TailReport const& report) {
    for (auto const& t : report.tails) {
      os << format_tail(t) << '\n';
    }
    return os;
  }

  Word r1(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter x : w) {
      auto const n = out.size();
      if (n >= 2 && out[n - 1] == x && out[n - 2] == x) {
        continue;
      }
      out.push_back(x);
    }
    return Word(std::move(out));
  }

  std::vector<WholeViolation> find_whole_violations(Word const& w) {
    require_r1_reduced(w);
    std::vector<WholeViolation> out;
    std::size_t const           n   = w.size();
    std::size_t                 alt = 1;  // alternating run ending at i
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (i > 0) {
        alt = w[i] != w[i - 1] ? alt + 1 : 1;
      }
      // cXc with X = c(c'c)^k alternating: the final cc sits at (i, i + 1),
      // X is the maximal alternating run ending at i, and the leading c is
      // the letter just before it.
      if (w[i] != w[i + 1] || alt < 3 || alt % 2 == 0 || alt > i) {
        continue;
      }
      Letter const      c     = w[i];
      Letter const      d     = negate(c);
      std::size_t const first = i - alt;  // 0-based, the leading c
      std::size_t const last  = i + 1;
      bool const guarded = first >= 2 && w[first - 2] == c && w[first - 1] == d
                           && last + 2 < n && w[last + 1] == d
                           && w[last + 2] == c;
      if (!guarded) {
        out.push_back({first + 1, last + 1,
                       c == Letter::a ? LetterClass::A : LetterClass::B});
      }
    }
    return out;
  }

  bool is_ab_whole(Word const& w) {
    return find_whole_violations(w).empty();
  }

  Word complete_reduction(Word const& w) {
    // Stack rewriting: the stack is always irreducible, so after pushing a
    // letter every new redex ends at the top. For the top cc the only
    // candidate cXc has X equal to the maximal alternating run below it.
    std::vector<Letter>        st;
    std::vector<std::uint32_t> alt;
    st.reserve(w.size());
    alt.reserve(w.size());
    auto push = [&](Letter x) {
      alt.push_back(st.empty() || st.back() == x ? 1 : alt.back() + 1);
      st.push_back(x);
    };
    for (Letter x : w) {
      push(x);
      while (true) {
        std::size_t const n = st.size();
        if (n >= 3 && st[n - 1] == st[n - 2] && st[n - 2] == st[n - 3]) {
          st.pop_back();
          alt.pop_back();
          continue;
        }
        if (n >= 2 && st[n - 1] == st[n - 2]) {
          std::size_t const run = alt[n - 2];
          if (run >= 3 && run % 2 == 1 && run + 2 <= n) {
            Letter const c = st[n - 1];
            st.resize(n - 2 - run);
            alt.resize(n - 2 - run);
            push(c);
            push(c);
            continue;
          }
        }
        break;
      }
    }
    return Word(std::move(st));
  }

  TailReport detect_non_reducible_tails(Word const& w) {
    return detect(w, TailFamily::non_reducible);
  }

  TailReport detect_non_uniform_tails(Word const& w) {
    return detect(w, TailFamily::non_uniform);
  }

  Word tail_reduce_left(Word const& w) {
    require_r1_reduced(w);
    auto const tail = non_uniform_tail(w, Side::left);
    if (!tail) {
      return w;
    }
    return w.suffix(w.size() - (tail->length() - reduced_tail_length));
  }

  Word tail_reduce_right(Word const& w) {
    require_r1_reduced(w);
    auto const tail = non_uniform_tail(w, Side::right);
    if (!tail) {
      return w;
    }
    return w.prefix(w.size() - (tail->length() - reduced_tail_length));
  }

  Word tail_reduce(Word const& w) {
    return tail_reduce_right(tail_reduce_left(w));
  }

}  // namespace burnside
