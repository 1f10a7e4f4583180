#include "burnside/pipeline.hpp"

#include <bit>
#include <cassert>

#include "burnside/classes.hpp"
#include "burnside/error.hpp"
#include "burnside/frames.hpp"

namespace burnside {

  std::string_view to_string(StopReason reason) noexcept {
    switch (reason) {
      case StopReason::short_word:
        return "short";
      case StopReason::special_class:
        return "special-class";
      case StopReason::not_ab_whole:
        return "not-ab-whole";
      case StopReason::non_reducible_tail:
        return "non-reducible-tail";
    }
    return "unknown";
  }

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::equivalent:
        return "EQUIVALENT";
      case Verdict::not_equivalent:
        return "NOT_EQUIVALENT";
      case Verdict::unknown:
        return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  PrimarySeries ancestor(Word const& input, bool trace) {
    if (input.empty()) {
      throw Error(ErrorCode::empty_input, "ancestor");
    }
    PrimarySeries out;
    Word          u = input;
    while (true) {
      u = r1(u);
      ++out.ell;
      out.left.emplace_back();
      out.right.emplace_back();
      out.head.emplace_back();
      out.tail.emplace_back();

      AncestorStep step{out.ell, {}, {}, {}, {}, {}, {}, {}, {}};
      auto         finish = [&](StopReason reason) {
        out.anc  = u;
        out.stop = reason;
        if (trace) {
          step.u    = u;
          step.stop = reason;
          out.series.push_back(u);
          out.steps.push_back(std::move(step));
        }
      };

      if (u.size() <= 2) {
        finish(StopReason::short_word);
        break;
      }
      if (in_special_class(u)) {
        finish(StopReason::special_class);
        break;
      }

      auto const tails = detect_non_uniform_tails(u);
      if (tails.find(Side::left, TailFamily::non_uniform)) {
        out.left.back() = u.front();
      }
      if (tails.find(Side::right, TailFamily::non_uniform)) {
        out.right.back() = u.back();
      }
      if (trace) {
        step.tails = tails;
        step.left  = out.left.back();
        step.right = out.right.back();
      }
      Word reduced = tail_reduce(u);

      if (!is_ab_whole(reduced)) {
        finish(StopReason::not_ab_whole);
        break;
      }
      if (!detect_non_reducible_tails(reduced).empty()) {
        finish(StopReason::non_reducible_tail);
        break;
      }

      auto const f     = frame(complete_reduction(reduced));
      out.head.back()  = f.h;
      out.tail.back()  = f.t;
      Word next        = phi_inverse(f.core);
      if (trace) {
        step.u    = u;
        step.head = f.h;
        step.tail = f.t;
        step.next = next;
        out.series.push_back(u);
        out.steps.push_back(std::move(step));
      }
      u = std::move(next);
    }
    // |U_{k+1}| <= |U_k| / 2.
    assert(out.ell <= static_cast<std::size_t>(std::bit_width(input.size())));
    return out;
  }

  Word normalize(Word w, PrimarySeries const& series) {
    if (w.empty()) {
      throw Error(ErrorCode::empty_input, "normalize");
    }
    for (std::size_t m = series.ell; m > 1;) {
      --m;
      std::size_t const i = m - 1;
      w                   = (series.head[i] + phi(w)) + series.tail[i];
      if (auto root = cube_root(w)) {
        w = *root + *root;
      }
      w = (series.left[i] + w) + series.right[i];
    }
    return w;
  }

  EqaofResult eqaof(Word const& u) {
    auto const series = ancestor(u);
    auto const seed   = match_S(series.anc);
    if (!seed) {
      return std::nullopt;
    }
    Word v = normalize(*seed, series);
    if (!is_almost_overlap_free(v)) {
      return std::nullopt;
    }
    return v;
  }

  Verdict decide_equiv(Word const& u, Word const& v) {
    auto const cu = eqaof(u);
    auto const cv = eqaof(v);
    if (cu && cv) {
      return *cu == *cv ? Verdict::equivalent : Verdict::not_equivalent;
    }
    if (cu || cv) {
      return Verdict::not_equivalent;
    }
    return Verdict::unknown;
  }

}  // namespace burnside
