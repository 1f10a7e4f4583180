#include "burnside/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "burnside/error.hpp"

namespace burnside {

  namespace {

    // Letter i of the word is bit i; a sentinel bit above the last letter
    // encodes the length, so distinct words have distinct keys.
    using Key = std::uint64_t;

    constexpr std::uint64_t mask(std::size_t k) noexcept {
      return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    }

    constexpr std::size_t length_of(Key k) noexcept {
      return 63 - static_cast<std::size_t>(std::countl_zero(k));
    }

    Key pack(Word const& w) {
      Key bits = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::b) {
          bits |= std::uint64_t{1} << i;
        }
      }
      return bits | (std::uint64_t{1} << w.size());
    }

    Word unpack(Key k) {
      std::size_t const   n = length_of(k);
      std::vector<Letter> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = ((k >> i) & 1) ? Letter::b : Letter::a;
      }
      return Word(std::move(out));
    }

    void check_bound(std::size_t length_bound) {
      if (length_bound > max_oracle_length) {
        throw Error(ErrorCode::bound_too_large,
                    "length bound " + std::to_string(length_bound) + " > "
                        + std::to_string(max_oracle_length));
      }
    }

    // Calls emit(key) for every neighbour of k within the bound (duplicates
    // possible). Returns false if some expansion was dropped by the bound.
    template <typename Emit>
    bool for_each_neighbour(Key k, std::size_t bound, Emit&& emit) {
      std::size_t const   n      = length_of(k);
      std::uint64_t const bits   = k & mask(n);
      bool                intact = true;
      for (std::size_t p = 1; 2 * p <= n; ++p) {
        for (std::size_t i = 0; i + 2 * p <= n; ++i) {
          if ((((bits >> i) ^ (bits >> (i + p))) & mask(p)) != 0) {
            continue;
          }
          // Y^2 at i -> Y^3.
          if (n + p <= bound) {
            std::uint64_t const low  = bits & mask(i + 2 * p);
            std::uint64_t const y    = (bits >> i) & mask(p);
            std::uint64_t const high = bits >> (i + 2 * p);
            emit(low | (y << (i + 2 * p)) | (high << (i + 3 * p))
                 | (std::uint64_t{1} << (n + p)));
          } else {
            intact = false;
          }
          // Y^3 at i -> Y^2.
          if (i + 3 * p <= n
              && (((bits >> (i + p)) ^ (bits >> (i + 2 * p))) & mask(p))
                     == 0) {
            std::uint64_t const low  = bits & mask(i + 2 * p);
            std::uint64_t const high = bits >> (i + 3 * p);
            emit(low | (high << (i + 2 * p)) | (std::uint64_t{1} << (n - p)));
          }
        }
      }
      return intact;
    }

    std::vector<Word> to_sorted_words(std::unordered_set<Key> const& keys) {
      std::vector<Word> out;
      out.reserve(keys.size());
      for (Key k : keys) {
        out.push_back(unpack(k));
      }
      std::sort(out.begin(), out.end(), [](Word const& x, Word const& y) {
        return x.shortlex_less(y);
      });
      return out;
    }

  }  // namespace

  std::vector<Word> ClosureResult::r1_members() const {
    std::vector<Word> out;
    std::copy_if(members.begin(), members.end(), std::back_inserter(out),
                 [](Word const& w) { return is_r1_reduced(w); });
    return out;
  }

  bool ClosureResult::contains(Word const& w) const {
    return std::binary_search(
        members.begin(), members.end(), w,
        [](Word const& x, Word const& y) { return x.shortlex_less(y); });
  }

  std::string format_closure(ClosureResult const& c, bool r1_only) {
    auto const  words = r1_only ? c.r1_members() : c.members;
    std::string out   = "seed=" + c.seed.str()
                      + " bound=" + std::to_string(c.length_bound)
                      + " exhausted=" + (c.exhausted ? "true" : "false")
                      + " count=" + std::to_string(words.size()) + "\n";
    for (auto const& w : words) {
      out += w.str();
      out += '\n';
    }
    return out;
  }

  std::vector<Word> pi_neighbours(Word const& w, std::size_t length_bound) {
    check_bound(length_bound);
    if (w.size() > length_bound) {
      throw std::invalid_argument("word longer than the length bound");
    }
    std::unordered_set<Key> found;
    Key const               self = pack(w);
    for_each_neighbour(self, length_bound, [&](Key k) {
      if (k != self) {
        found.insert(k);
      }
    });
    return to_sorted_words(found);
  }

  ClosureResult closure(Word const& w,
                        std::size_t length_bound,
                        std::size_t step_bound) {
    check_bound(length_bound);
    ClosureResult result;
    result.seed         = w;
    result.length_bound = length_bound;
    result.step_bound   = step_bound;
    result.exhausted    = true;
    if (w.size() > length_bound) {
      result.exhausted = false;
      return result;
    }

    std::unordered_set<Key> seen{pack(w)};
    std::deque<Key>         queue{pack(w)};
    std::size_t             steps = 0;
    while (!queue.empty()) {
      if (steps == step_bound) {
        result.budget_exceeded = true;
        result.exhausted       = false;
        break;
      }
      Key const k = queue.front();
      queue.pop_front();
      ++steps;
      bool const intact = for_each_neighbour(k, length_bound, [&](Key next) {
        if (seen.insert(next).second) {
          queue.push_back(next);
        }
      });
      if (!intact) {
        result.exhausted = false;
      }
    }
    result.members = to_sorted_words(seen);
    return result;
  }

  OracleAnswer oracle_equiv(Word const& u,
                            Word const& v,
                            std::size_t length_bound,
                            std::size_t step_bound) {
    check_bound(length_bound);
    if (u == v) {
      return OracleAnswer::yes;
    }
    if (u.size() > length_bound || v.size() > length_bound) {
      return OracleAnswer::unknown;
    }
    std::unordered_set<Key> seen[2] = {{pack(u)}, {pack(v)}};
    std::vector<Key>        frontier[2] = {{pack(u)}, {pack(v)}};
    std::size_t             steps       = 0;
    while (!frontier[0].empty() || !frontier[1].empty()) {
      // Grow the smaller nonempty frontier by one layer.
      std::size_t side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
      if (frontier[side].empty()) {
        side = 1 - side;
      }
      std::vector<Key> next;
      for (Key k : frontier[side]) {
        if (steps++ == step_bound) {
          return OracleAnswer::unknown;
        }
        bool met = false;
        for_each_neighbour(k, length_bound, [&](Key n) {
          if (met || !seen[side].insert(n).second) {
            return;
          }
          if (seen[1 - side].contains(n)) {
            met = true;
            return;
          }
          next.push_back(n);
        });
        if (met) {
          return OracleAnswer::yes;
        }
      }
      frontier[side] = std::move(next);
    }
    return OracleAnswer::unknown;
  }

  std::vector<Word> enumerate_aof(std::size_t max_len) {
    std::vector<Word> out;
    std::vector<Word> stack;
    if (max_len >= 1) {
      stack.push_back(Word{Letter::a});
      stack.push_back(Word{Letter::b});
    }
    while (!stack.empty()) {
      Word w = std::move(stack.back());
      stack.pop_back();
      if (!is_almost_overlap_free(w)) {
        continue;
      }
      if (w.size() < max_len) {
        for (Letter x : {Letter::a, Letter::b}) {
          Word longer = w;
          longer.push_back(x);
          stack.push_back(std::move(longer));
        }
      }
      out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(),
              [](Word const& x, Word const& y) { return x.shortlex_less(y); });
    return out;
  }

}  // namespace burnside
