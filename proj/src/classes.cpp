#include "burnside/classes.hpp"

#include <cassert>
#include <utility>

#include "burnside/error.hpp"

namespace burnside {

  namespace {

    void require_r1_reduced(Word const& w) {
      if (!is_r1_reduced(w)) {
        throw Error(ErrorCode::not_r1_reduced, w.str());
      }
    }

    struct Entry {
      char const* representative;
      char const* expression;
    };

    constexpr Entry non_uniform[] = {
        {"aabaa", "aabaa"},
        {"aabaab", "(aab)^2(aab)*"},
        {"baabaa", "(baa)*(baa)^2"},
        {"baabaab", "(baa)^2(baa)*b"},
        {"aabaabb", "(aab)^2(aab)*b"},
        {"bbaabaa", "b(baa)*(baa)^2"},
        {"aabaaba", "(aab)^2(aab)*a"},
        {"abaabaa", "a(baa)*(baa)^2"},
        {"aabaabbaabaa", "(aab)^2(aab)*(b(aab)*aab)*(baa)*(baa)^2"},
    };

    constexpr Entry cube_contraction[] = {
        {"abaabaab", "(aba)*(aba)^2ab"},
        {"abbabbab", "(abb)*(abb)^2ab"},
        {"baabaaba", "(baa)*(baa)^2ba"},
        {"babbabba", "(bab)*(bab)^2ba"},
        {"bbabbabb", "(bba)*(bba)^2bb"},
        {"aabaabaa", "(aab)*(aab)^2aa"},
    };

    constexpr char const* short_words[] = {"a", "b", "aa", "bb", "ab", "ba"};

    constexpr Entry alternating[] = {
        {"a", "a"},
        {"ab", "ab"},
        {"aba", "aba"},
        {"abab", "(ab)^2(ab)*"},
        {"ababa", "(ab)^2(ab)*a"},
    };

    constexpr std::size_t special_index = 8;

    std::vector<ClassPattern> build_table() {
      std::vector<ClassPattern> out;
      out.reserve(pattern_count);
      for (auto const& e : non_uniform) {
        out.emplace_back(Word::parse(e.representative), e.expression,
                         PatternFamily::non_uniform_aof);
      }
      for (auto const& e : non_uniform) {
        out.emplace_back(negate(Word::parse(e.representative)),
                         negate_expression(e.expression),
                         PatternFamily::non_uniform_aof);
      }
      for (auto const& e : cube_contraction) {
        out.emplace_back(Word::parse(e.representative), e.expression,
                         PatternFamily::cube_contraction);
      }
      for (auto const* w : short_words) {
        out.emplace_back(Word::parse(w), w, PatternFamily::short_word);
      }
      return out;
    }

  }  // namespace

  ClassPattern::ClassPattern(Word          representative,
                             std::string   expression,
                             PatternFamily family)
      : _representative(std::move(representative)),
        _recognizer(expression),
        _family(family) {}

  std::span<ClassPattern const> pattern_table() {
    static std::vector<ClassPattern> const table = build_table();
    return table;
  }

  std::span<ClassPattern const> letter_alternating_patterns() {
    static std::vector<ClassPattern> const table = [] {
      std::vector<ClassPattern> out;
      for (auto const& e : alternating) {
        out.emplace_back(Word::parse(e.representative), e.expression,
                         PatternFamily::letter_alternating);
        out.emplace_back(negate(Word::parse(e.representative)),
                         negate_expression(e.expression),
                         PatternFamily::letter_alternating);
      }
      return out;
    }();
    return table;
  }

  std::optional<Word> match_S(Word const& x) {
    require_r1_reduced(x);
    std::optional<Word> found;
    for (auto const& p : pattern_table()) {
      if (p.accepts(x)) {
#ifdef NDEBUG
        return p.representative();
#else
        assert(!found && "equivalence classes must be disjoint");
        found = p.representative();
#endif
      }
    }
    return found;
  }

  bool in_special_class(Word const& x) {
    require_r1_reduced(x);
    auto const table = pattern_table();
    return table[special_index].accepts(x)
           || table[special_index + std::size(non_uniform)].accepts(x);
  }

}  // namespace burnside
