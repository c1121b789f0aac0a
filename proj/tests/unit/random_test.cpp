#include "lrc/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace {

TEST(RandomTest, EngineMatchesStandardSequence) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the
  // C++ standard.
  lrc::Rng rng(5489u);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(RandomTest, StreamsAreDeterministicAndDistinct) {
  EXPECT_EQ(lrc::deriveSeed(42, "a"), lrc::deriveSeed(42, "a"));
  EXPECT_NE(lrc::deriveSeed(42, "a"), lrc::deriveSeed(42, "b"));
  EXPECT_NE(lrc::deriveSeed(42, "a"), lrc::deriveSeed(43, "a"));

  auto r1 = lrc::Rng::forStream(7, "shuffle/letter");
  auto r2 = lrc::Rng::forStream(7, "shuffle/letter");
  for (int i = 0; i < 100; ++i) ASSERT_EQ(r1.next(), r2.next());
}

TEST(RandomTest, BelowStaysInRangeAndIsRoughlyUniform) {
  lrc::Rng rng(1);
  constexpr std::uint64_t kBins = 7;
  constexpr int kDraws = 70000;
  std::vector<int> counts(kBins, 0);
  for (int i = 0; i < kDraws; ++i) {
    const auto v = rng.below(kBins);
    ASSERT_LT(v, kBins);
    ++counts[v];
  }
  // Chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile.
  const double expected = static_cast<double>(kDraws) / kBins;
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 22.46);
}

TEST(RandomTest, UniformIsInUnitInterval) {
  lrc::Rng rng(3);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(RandomTest, ShuffleIsAPermutation) {
  lrc::Rng rng(11);
  std::vector<int> v(1000);
  std::iota(v.begin(), v.end(), 0);
  auto shuffled = v;
  rng.shuffle(std::span<int>(shuffled));
  EXPECT_NE(shuffled, v);
  std::sort(shuffled.begin(), shuffled.end());
  EXPECT_EQ(shuffled, v);
}

}  // namespace
