#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lrc/textnorm.hpp"

namespace lrc {

struct LexiconEntry {
  std::string word;
  std::uint64_t count = 0;
  std::size_t length = 0;
  // count * length / totalLetters
  double letterShare = 0.0;
};

// Word types ordered by decreasing count, ties broken lexicographically.
// Rank r (1-based) is entries()[r - 1].
class FrequencyLexicon {
 public:
  FrequencyLexicon() = default;
  explicit FrequencyLexicon(std::vector<LexiconEntry> entries);

  std::span<const LexiconEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint64_t totalLetters() const noexcept { return totalLetters_; }
  std::uint64_t totalTokens() const noexcept { return totalTokens_; }

  std::optional<std::size_t> rankOf(std::string_view word) const;
  const LexiconEntry& atRank(std::size_t rank) const { return entries_.at(rank - 1); }

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> rankByWord_;
  std::uint64_t totalLetters_ = 0;
  std::uint64_t totalTokens_ = 0;
};

FrequencyLexicon buildLexicon(std::span<const Token> tokens);

struct ZipfFit {
  // Slope of ln f against ln rank; about -1 for natural text.
  double exponent = 0.0;
  double intercept = 0.0;
  double rmsResidual = 0.0;
  std::size_t firstRank = 0;
  std::size_t lastRank = 0;
};

// Fits ranks firstRank..lastRank inclusive (clamped to the lexicon size).
// Needs at least 10 ranks.
ZipfFit zipfFit(const FrequencyLexicon& lex, std::size_t firstRank,
                std::size_t lastRank);

struct Band {
  // 1-based inclusive rank range; empty when wordTypeCount == 0.
  std::size_t firstRank = 0;
  std::size_t lastRank = 0;
  std::size_t wordTypeCount = 0;
  std::uint64_t letters = 0;
  double letterShare = 0.0;

  bool contains(std::size_t rank) const noexcept {
    return wordTypeCount > 0 && rank >= firstRank && rank <= lastRank;
  }
};

struct BandPartition {
  std::vector<Band> bands;
  double targetShare = 0.2;
  // True when some band is empty.
  bool degenerate = false;

  // Index of the band holding `rank`.
  std::size_t bandOfRank(std::size_t rank) const;
};

// Greedy scan in rank order: band b closes at the first word whose
// cumulative letter share reaches (b+1)*targetShare; the last band takes the
// remainder.
BandPartition partitionBands(const FrequencyLexicon& lex, std::size_t bandCount = 5,
                             double targetShare = 0.2);

// Blanks every token whose word is outside `band`, keeping offsets.
NormalizedText bandFilterText(const NormalizedText& text, const FrequencyLexicon& lex,
                              const Band& band);

struct BandJsdEntry {
  std::size_t wordTypeCount = 0;
  double meanNormalized = 0.0;
  // Mean over pairs of (N_left + N_right)/2 counted letters.
  double meanEffectiveN = 0.0;
  // Segment pairs that contributed (both sides hold letters).
  std::size_t pairs = 0;
};

struct BandJsdReport {
  std::vector<BandJsdEntry> bands;
  std::size_t segmentLength = 0;

  // Index of the band with the largest mean normalized divergence.
  std::size_t maxBand() const;
};

// For each band: filter, then compare letters-only distributions of the
// segment pairs [s, s+L) and [s+L, s+2L) at s = 0, 2L, 4L, ... in original
// text coordinates, normalize each pair by its own fluctuation level and
// average.
BandJsdReport bandJsd(const NormalizedText& text, const FrequencyLexicon& lex,
                      const BandPartition& partition,
                      std::size_t segmentLength = 100'000);

struct WordHalves {
  std::string word;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  // Relative frequency in the second half over that in the first; +inf when
  // absent from the first half.
  double ratio = 0.0;
  double relativeChange = 0.0;
};

struct HalvesComparison {
  // First symbol of the second half.
  std::size_t splitPosition = 0;
  std::uint64_t tokensFirst = 0;
  std::uint64_t tokensSecond = 0;
  // In lexicon rank order of the whole text.
  std::vector<WordHalves> words;

  const WordHalves* find(std::string_view word) const;
  // count(a)/count(b) within one half (0 = first, 1 = second). NaN when b
  // is absent.
  double countRatio(std::string_view a, std::string_view b, int half) const;
};

// Splits at the middle symbol, moved to the nearer end of the token it
// falls in, so every token lands wholly in one half.
HalvesComparison compareHalves(const NormalizedText& text);

struct ContentWordVariance {
  double expectedCount = 0.0;
  double standardDeviation = 0.0;
  // Unset when expectedCount == 0.
  std::optional<double> relativeSd;
};

// Poisson model of the letter count contributed by a small set of content
// words: mean = words * length * p, sd = sqrt(mean).
ContentWordVariance contentWordVarianceModel(double wordCount = 100,
                                             double avgWordLength = 4.5,
                                             double letterProb = 0.1);

}  // namespace lrc
