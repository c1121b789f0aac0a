#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lrc/textnorm.hpp"

namespace lrc {

enum class Alphabet {
  // All 27 symbols.
  WithSpace,
  // 'a'..'z' only; spaces are neither counted nor part of N.
  LettersOnly,
};

std::string_view toString(Alphabet alphabet) noexcept;
Alphabet parseAlphabet(std::string_view name);

// Symbol counts over a fixed alphabet.
class SymbolDistribution {
 public:
  explicit SymbolDistribution(std::vector<std::uint64_t> counts);

  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::size_t alphabetSize() const noexcept { return counts_.size(); }
  // Number of trials.
  std::uint64_t total() const noexcept { return total_; }
  double frequency(std::size_t i) const noexcept {
    return static_cast<double>(counts_[i]) / static_cast<double>(total_);
  }
  std::vector<double> frequencies() const;
  // Symbols with a nonzero count.
  std::size_t support() const noexcept;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Shannon entropy in nats, -sum p ln p over p > 0.
double entropy(const SymbolDistribution& d);
double entropy(std::span<const double> probabilities);

// Equal-weight Jensen-Shannon divergence in nats:
//   D = H((p+q)/2) - (H(p) + H(q))/2,
// evaluated term by term as sum_i [p_i ln(p_i/r_i) + q_i ln(q_i/r_i)]/2 so
// that every term is non-negative and D(p,q) == D(q,p) bit for bit.
double jsd(const SymbolDistribution& p, const SymbolDistribution& q);
double jsd(std::span<const double> p, std::span<const double> q);

// Expected JSD between two N-trial samples of one law over n outcomes:
// (n-1)/(4N).
double fluctuationLevel(std::size_t n, std::uint64_t trials);
// Unequal sample sizes: (n-1)/8 * (1/N1 + 1/N2).
double fluctuationLevel(std::size_t n, std::uint64_t trials1,
                        std::uint64_t trials2);

// Counts of the slice [start, start+length). Letters-only distributions
// have 26 bins, with-space distributions 27.
SymbolDistribution segmentDistribution(const NormalizedText& text,
                                       std::size_t start, std::size_t length,
                                       Alphabet alphabet);

struct JsdProfileEntry {
  // Boundary between the two segments.
  std::size_t position = 0;
  double rawJsd = 0.0;
  double fluctLevel = 0.0;
  double normalized = 0.0;
  std::uint64_t trialsLeft = 0;
  std::uint64_t trialsRight = 0;
  // Symbols present in the pooled pair (at least 2 for the level).
  std::size_t effectiveAlphabet = 0;
};

struct JsdProfile {
  std::vector<JsdProfileEntry> entries;
  std::size_t segmentLength = 0;
  std::size_t step = 0;
  Alphabet alphabet = Alphabet::WithSpace;

  double meanNormalized() const;
  // Fraction of boundaries with normalized > threshold.
  double fractionAbove(double threshold) const;
};

// Divergence of adjacent segments [b-L, b) and [b, b+L) for
// b = L, L+step, ..., <= N-L. step == 0 selects L/10 (at least 1).
JsdProfile jsdProfile(const NormalizedText& text, std::size_t segmentLength,
                      std::size_t step = 0,
                      Alphabet alphabet = Alphabet::WithSpace);

// Normalized divergence of one pair of count vectors, with the effective
// alphabet taken from the pooled support. Entry position is left at 0.
JsdProfileEntry compareSegments(const SymbolDistribution& left,
                                const SymbolDistribution& right);

}  // namespace lrc
