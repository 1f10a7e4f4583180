#pragma once

// Main-Lorentz style detection of periodic factors.
//
// The word is split recursively at its midpoint. For each split point and each
// period p, two Z-function passes give the longest extensions to the left and
// to the right of the split, which yields the maximal p-periodic region (within
// the current segment) that contains p letters on one side of the split and
// touches the other. Every factor of length >= 2p + 1 with period p that
// crosses the split lies inside one such region, so a caller-supplied predicate
// on regions decides what counts as a hit. Total time O(n log n).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "burnside/word.hpp"

namespace burnside::detail {

  // A maximal run of period `period` inside the current segment: positions
  // [start, start + length), 0-based, length >= period.
  struct PeriodicRegion {
    std::size_t start;
    std::size_t length;
    std::size_t period;
  };

  inline void z_function(std::span<std::uint8_t const> s,
                         std::vector<std::size_t>&     z) {
    std::size_t const n = s.size();
    z.assign(n, 0);
    if (n == 0) {
      return;
    }
    z[0] = n;
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t k = 0;
      if (i < r) {
        k = std::min(r - i, z[i - l]);
      }
      while (i + k < n && s[k] == s[i + k]) {
        ++k;
      }
      z[i] = k;
      if (i + k > r) {
        l = i;
        r = i + k;
      }
    }
  }

  template <typename Hit>
  class RepetitionFinder {
   public:
    RepetitionFinder(std::span<Letter const> word, Hit hit)
        : _s(word.size()), _hit(hit) {
      for (std::size_t i = 0; i < word.size(); ++i) {
        _s[i] = static_cast<std::uint8_t>(word[i]);
      }
    }

    bool run() {
      return search(0, _s.size());
    }

   private:
    static constexpr std::uint8_t separator = 2;

    // Small segments are checked directly: every p-periodic maximal region of
    // a short segment is enumerated by a quadratic scan.
    bool brute(std::size_t lo, std::size_t hi) {
      std::size_t const n = hi - lo;
      for (std::size_t p = 1; 2 * p < n + 1; ++p) {
        std::size_t i = lo;
        while (i + p < hi) {
          if (_s[i] != _s[i + p]) {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j + p < hi && _s[j] == _s[j + p]) {
            ++j;
          }
          if (_hit(PeriodicRegion{i, j - i + p, p})) {
            return true;
          }
          i = j + 1;
        }
      }
      return false;
    }

    bool search(std::size_t lo, std::size_t hi) {
      if (hi - lo < 3) {
        return false;
      }
      if (hi - lo <= 24) {
        return brute(lo, hi);
      }
      std::size_t const mid = lo + (hi - lo) / 2;
      if (search(lo, mid) || search(mid, hi)) {
        return true;
      }
      return crossing(lo, mid, hi);
    }

    bool crossing(std::size_t lo, std::size_t mid, std::size_t hi) {
      std::size_t const nu = mid - lo;
      std::size_t const nv = hi - mid;

      // Regions with a full period inside the right half, [mid, mid + p).
      // Forward extension: LCE(mid, mid + p) = Z(v)[p].
      _buf.assign(_s.begin() + mid, _s.begin() + hi);
      z_function(_buf, _z1);
      // Backward extension: common suffix of s[lo, mid) and s[lo, mid + p),
      // read from Z of rev(u) # rev(s[lo, hi)).
      _buf.clear();
      for (std::size_t i = mid; i-- > lo;) {
        _buf.push_back(_s[i]);
      }
      _buf.push_back(separator);
      for (std::size_t i = hi; i-- > lo;) {
        _buf.push_back(_s[i]);
      }
      z_function(_buf, _z2);
      for (std::size_t p = 1; p <= nv; ++p) {
        std::size_t const fwd = p < nv ? _z1[p] : 0;
        std::size_t const bwd = std::min(nu, _z2[nu + 1 + (nv - p)]);
        if (bwd == 0) {
          continue;
        }
        if (_hit(PeriodicRegion{mid - bwd, p + bwd + fwd, p})) {
          return true;
        }
      }

      // Regions with a full period inside the left half, [mid - p, mid).
      // Backward extension: common suffix of s[lo, mid - p) and s[lo, mid) is
      // Z(rev(u))[p].
      _buf.clear();
      for (std::size_t i = mid; i-- > lo;) {
        _buf.push_back(_s[i]);
      }
      z_function(_buf, _z1);
      // Forward extension: LCE(mid - p, mid) from Z of v # s[lo, hi).
      _buf.assign(_s.begin() + mid, _s.begin() + hi);
      _buf.push_back(separator);
      _buf.insert(_buf.end(), _s.begin() + lo, _s.begin() + hi);
      z_function(_buf, _z2);
      for (std::size_t p = 1; p <= nu; ++p) {
        std::size_t const bwd = p < nu ? _z1[p] : 0;
        std::size_t const fwd = std::min(nv, _z2[nv + 1 + (mid - p - lo)]);
        if (fwd == 0) {
          continue;
        }
        if (_hit(PeriodicRegion{mid - p - bwd, p + bwd + fwd, p})) {
          return true;
        }
      }
      return false;
    }

    std::vector<std::uint8_t> _s;
    std::vector<std::uint8_t> _buf;
    std::vector<std::size_t>  _z1;
    std::vector<std::size_t>  _z2;
    Hit                       _hit;
  };

  // True iff some maximal periodic region satisfies `hit`.
  template <typename Hit>
  bool find_repetition(std::span<Letter const> word, Hit hit) {
    return RepetitionFinder<Hit>(word, hit).run();
  }

}  // namespace burnside::detail
