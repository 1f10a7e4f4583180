#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "burnside/error.hpp"
#include "burnside/word.hpp"
#include "support.hpp"

using namespace burnside;
using namespace burnside::literals;
using namespace burnside::testing;

TEST(WordBasics, ParseAndPrint) {
  EXPECT_EQ("abba"_w.str(), "abba");
  EXPECT_TRUE(Word::parse("").empty());
  EXPECT_EQ("aab"_w.letter(3), Letter::b);
  EXPECT_EQ("aabab"_w.factor(2, 4), "aba"_w);
}

TEST(WordBasics, RejectsForeignCharacters) {
  for (auto const* bad : {"abc", "aBb", "A", "a b", "ab\n"}) {
    try {
      (void)Word::parse(bad);
      ADD_FAILURE() << bad;
    } catch (Error const& e) {
      EXPECT_EQ(e.code(), ErrorCode::invalid_word);
    }
  }
}

TEST(WordBasics, ShortlexOrder) {
  EXPECT_TRUE("b"_w.shortlex_less("aa"_w));
  EXPECT_TRUE("ab"_w.shortlex_less("ba"_w));
  EXPECT_FALSE("ab"_w.shortlex_less("ab"_w));
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate(Word{}), Word{});
  EXPECT_EQ(negate("ab"_w), "ba"_w);
  EXPECT_EQ(negate("aabaa"_w), "bbabb"_w);
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(Word{}), Word{});
  EXPECT_EQ(reverse("aab"_w), "baa"_w);
  EXPECT_EQ(reverse("abba"_w), "abba"_w);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi("a"_w), "ab"_w);
  EXPECT_EQ(phi("b"_w), "ba"_w);
  EXPECT_EQ(phi(Word{}), Word{});
  EXPECT_EQ(phi("aba"_w), "abbaab"_w);
}

TEST(PhiInverse, Examples) {
  EXPECT_EQ(phi_inverse("abba"_w), "ab"_w);
  EXPECT_EQ(phi_inverse("abbabaab"_w), "abba"_w);
  EXPECT_EQ(phi("abba"_w), "abbabaab"_w);
  for (auto const* bad : {"aa", "aba", "abbb"}) {
    try {
      (void)phi_inverse(Word::parse(bad));
      ADD_FAILURE() << bad;
    } catch (Error const& e) {
      EXPECT_EQ(e.code(), ErrorCode::not_phi_image);
    }
  }
}

TEST(PhiInverse, RoundTripOnRandomWords) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word const w = random_word(rng, rng() % 10'001);
    ASSERT_EQ(phi_inverse(phi(w)), w);
  }
}

TEST(Phi, CommutesWithNegation) {
  for (auto const& w : words_up_to(12)) {
    ASSERT_EQ(phi(negate(w)), negate(phi(w))) << w;
  }
}

TEST(IsPhiImage, Examples) {
  EXPECT_TRUE(is_phi_image("abba"_w));
  EXPECT_TRUE(is_phi_image("abab"_w));
  EXPECT_TRUE(is_phi_image("baab"_w));
  EXPECT_FALSE(is_phi_image("aab"_w));
}

TEST(IsPhiImage, AgreesWithBlockScanAndImpliesUniform) {
  for (auto const& w : words_up_to(16)) {
    bool const image = is_phi_image(w);
    ASSERT_EQ(image, brute_phi_image(w)) << w;
    if (image) {
      ASSERT_TRUE(is_uniform(w)) << w;
    }
  }
}

TEST(IsCubeFree, Examples) {
  EXPECT_FALSE(is_cube_free("aaa"_w));
  EXPECT_TRUE(is_cube_free(Word{}));
  EXPECT_TRUE(is_cube_free("abbabaab"_w));
}

TEST(IsCubeFree, AgreesWithBruteForce) {
  for (auto const& w : words_up_to(16)) {
    ASSERT_EQ(is_cube_free(w), brute_cube_free(w)) << w;
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    Word const w = random_word(rng, rng() % 200);
    ASSERT_EQ(is_cube_free(w), brute_cube_free(w)) << w;
  }
}

TEST(IsOverlapFree, Examples) {
  EXPECT_FALSE(is_overlap_free("ababa"_w));
  EXPECT_TRUE(is_overlap_free("abbabaab"_w));
  EXPECT_TRUE(is_overlap_free("aabaab"_w));
}

TEST(IsOverlapFree, AgreesWithBruteForceExhaustively) {
  for (auto const& w : words_up_to(16)) {
    ASSERT_EQ(is_overlap_free(w), brute_overlap_free(w)) << w;
  }
}

TEST(IsOverlapFree, AgreesWithBruteForceOnRandomWords) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10'000; ++i) {
    Word const w = random_word(rng, rng() % 513);
    ASSERT_EQ(is_overlap_free(w), brute_overlap_free(w)) << w;
  }
}

// Random words almost always contain short overlaps, so also feed long
// overlap-free words with a single late defect.
TEST(IsOverlapFree, FindsLateDefectsInThueMorse) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    std::size_t const n = 30 + rng() % 400;
    Word              w = thue_morse_prefix(n);
    ASSERT_TRUE(is_overlap_free(w));
    std::vector<Letter> letters(w.begin(), w.end());
    std::size_t const   at = rng() % n;
    letters[at]            = negate(letters[at]);
    Word const flipped(std::move(letters));
    ASSERT_EQ(is_overlap_free(flipped), brute_overlap_free(flipped))
        << flipped;
    ASSERT_EQ(is_almost_overlap_free(flipped),
              brute_overlap_free(flipped.prefix(n - 1))
                  && brute_overlap_free(flipped.suffix(n - 1)))
        << flipped;
  }
}

TEST(IsAlmostOverlapFree, Examples) {
  EXPECT_TRUE(is_almost_overlap_free("aabaa"_w));
  EXPECT_TRUE(is_almost_overlap_free("ababa"_w));
  EXPECT_FALSE(is_almost_overlap_free("aabaabaa"_w));
  EXPECT_FALSE(is_overlap_free("aabaaba"_w));
}

TEST(IsAlmostOverlapFree, AgreesWithDefinition) {
  for (auto const& w : words_up_to(14)) {
    ASSERT_EQ(is_almost_overlap_free(w), brute_almost_overlap_free(w)) << w;
  }
}

TEST(IsLetterAlternating, Examples) {
  EXPECT_TRUE(is_letter_alternating("abab"_w));
  EXPECT_TRUE(is_letter_alternating(Word{}));
  EXPECT_FALSE(is_letter_alternating("aab"_w));
}

TEST(IsUniform, Examples) {
  EXPECT_TRUE(is_uniform("aabb"_w));
  EXPECT_FALSE(is_uniform("aabaa"_w));
  EXPECT_TRUE(is_uniform("abab"_w));
}

TEST(IsUniform, AgreesWithParityScan) {
  for (auto const& w : words_up_to(16)) {
    ASSERT_EQ(is_uniform(w), brute_uniform(w)) << w;
  }
}

TEST(IsUniform, IffFactorOfPhiImage) {
  for (std::size_t n = 0; n <= 14; ++n) {
    auto const images = [&] {
      std::vector<Word> out;
      for (auto const& v : words_of_length((n + 1) / 2 + 1)) {
        out.push_back(phi(v));
      }
      return out;
    }();
    for (auto const& w : words_of_length(n)) {
      bool const factor = std::any_of(
          images.begin(), images.end(),
          [&](Word const& img) { return is_factor(w, img); });
      ASSERT_EQ(is_uniform(w), factor) << w;
    }
  }
}

TEST(DegenerateWords, SatisfyEveryPredicate) {
  for (auto const& w : {Word{}, "a"_w, "b"_w}) {
    EXPECT_TRUE(is_cube_free(w));
    EXPECT_TRUE(is_overlap_free(w));
    EXPECT_TRUE(is_almost_overlap_free(w));
    EXPECT_TRUE(is_letter_alternating(w));
    EXPECT_TRUE(is_uniform(w));
  }
}

TEST(CubeRoot, OnlyExactCubes) {
  EXPECT_EQ(cube_root("aabbaabbaabb"_w), "aabb"_w);
  EXPECT_EQ(cube_root("aaa"_w), "a"_w);
  EXPECT_FALSE(cube_root("aabbaabbaaba"_w));
  EXPECT_FALSE(cube_root("abab"_w));
}

TEST(ThueMorse, PrefixIsOverlapFreeAndMatchesPhiIterates) {
  Word t = "a"_w;
  for (int i = 0; i < 10; ++i) {
    t = phi(t);
  }
  EXPECT_EQ(thue_morse_prefix(t.size()), t);
  EXPECT_EQ(thue_morse_prefix(5), "abbab"_w);
  EXPECT_TRUE(is_overlap_free(thue_morse_prefix(4096)));
}
