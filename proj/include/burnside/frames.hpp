#pragma once

#include <string>

#include "burnside/word.hpp"

namespace burnside {

  // The decomposition U = h . core . t of a uniform word, with core a
  // phi-image built from blocks ab/ba and h, t single letters or empty.
  // For letter-alternating U the head is always empty.
  struct Frame {
    MaybeLetter h;
    Word        core;
    MaybeLetter t;

    [[nodiscard]] Word assemble() const {
      return (h + core) + t;
    }

    friend bool operator==(Frame const&, Frame const&) = default;
  };

  // Throws Error(not_uniform).
  [[nodiscard]] Frame frame(Word const& u);

  // Maximal phi-image factor: frame(u).core.
  [[nodiscard]] Word eta(Word const& u);

  // Minimal phi-image containing u: negate(h) . u . negate(t).
  [[nodiscard]] Word xi(Word const& u);

  [[nodiscard]] Frame negate(Frame const& f);

  // `h=a core=baab t=-`
  [[nodiscard]] std::string format_frame(Frame const& f);

}  // namespace burnside
