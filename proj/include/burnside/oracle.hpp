#pragma once

// Brute-force ground truth for desk-scale checks.
//
// Words are explored through the neighbourhood relation: replace a factor Y^2
// by Y^3 or a factor Y^3 by Y^2. Bounded breadth-first closures approximate
// equivalence classes from below; the oracle never claims that two words are
// inequivalent.
//
// Internally words are packed into 64-bit integers, so every length bound must
// be at most max_oracle_length.

#include <cstddef>
#include <string>
#include <vector>

#include "burnside/word.hpp"

namespace burnside {

  inline constexpr std::size_t max_oracle_length = 63;
  inline constexpr std::size_t default_step_bound = 1'000'000;

  struct ClosureResult {
    Word seed;
    // Shortlex order.
    std::vector<Word> members;
    // No neighbour was dropped for exceeding the length bound and the step
    // bound was not hit.
    bool        exhausted       = false;
    bool        budget_exceeded = false;
    std::size_t length_bound    = 0;
    std::size_t step_bound      = 0;

    [[nodiscard]] std::vector<Word> r1_members() const;
    [[nodiscard]] bool contains(Word const& w) const;
  };

  // `seed=<w> bound=<n> exhausted=<bool> count=<n>` then one word per line.
  [[nodiscard]] std::string format_closure(ClosureResult const& c,
                                           bool r1_only = false);

  // All v != w with (w, v) a neighbour pair and |v| <= length_bound, shortlex
  // ordered. Requires |w| <= length_bound <= max_oracle_length.
  [[nodiscard]] std::vector<Word> pi_neighbours(Word const& w,
                                                std::size_t length_bound);

  [[nodiscard]] ClosureResult closure(Word const& w,
                                      std::size_t length_bound,
                                      std::size_t step_bound
                                      = default_step_bound);

  enum class OracleAnswer { yes, unknown };

  // Yes iff the bounded closures of u and v meet. Searches from both ends and
  // stops at the first common word.
  [[nodiscard]] OracleAnswer oracle_equiv(Word const& u,
                                          Word const& v,
                                          std::size_t length_bound,
                                          std::size_t step_bound
                                          = default_step_bound);

  // All nonempty almost overlap-free words of length <= max_len, shortlex.
  [[nodiscard]] std::vector<Word> enumerate_aof(std::size_t max_len);

}  // namespace burnside
