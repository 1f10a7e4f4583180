#include "burnside/frames.hpp"

#include "burnside/error.hpp"

namespace burnside {

  Frame frame(Word const& u) {
    if (!is_uniform(u)) {
      throw Error(ErrorCode::not_uniform, u.str());
    }
    // Squares of letters start at even positions of a phi-image, so the
    // parity of any square fixes the length of the head.
    std::size_t head = 0;
    if (auto const p = first_letter_square(u)) {
      head = *p % 2;
    }
    std::size_t const tail = (u.size() - head) % 2;
    Frame             f;
    if (head == 1) {
      f.h = u.front();
    }
    if (tail == 1) {
      f.t = u.back();
    }
    f.core = u.factor(head + 1, u.size() - tail);
    return f;
  }

  Word eta(Word const& u) {
    return frame(u).core;
  }

  Word xi(Word const& u) {
    auto const f = frame(u);
    MaybeLetter h, t;
    if (f.h) {
      h = negate(*f.h);
    }
    if (f.t) {
      t = negate(*f.t);
    }
    return (h + u) + t;
  }

  Frame negate(Frame const& f) {
    Frame out;
    if (f.h) {
      out.h = negate(*f.h);
    }
    if (f.t) {
      out.t = negate(*f.t);
    }
    out.core = negate(f.core);
    return out;
  }

  std::string format_frame(Frame const& f) {
    std::string out = "h=";
    out += to_char(f.h);
    out += " core=" + f.core.str() + " t=";
    out += to_char(f.t);
    return out;
  }

}  // namespace burnside
