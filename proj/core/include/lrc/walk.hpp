#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lrc/textnorm.hpp"

namespace lrc {

// Binary series marking the positions of one symbol in a text.
struct IndicatorSeries {
  std::vector<std::uint8_t> bits;
  Symbol sourceLetter = 0;
  double mean = 0.0;

  std::size_t size() const noexcept { return bits.size(); }

  // Builds a series from explicit 0/1 values. Throws on empty input or a
  // value other than 0 or 1.
  static IndicatorSeries fromBits(std::vector<std::uint8_t> bits,
                                  Symbol sourceLetter = 0);
};

IndicatorSeries indicator(const NormalizedText& text, Symbol letter);

struct DisplacementPoint {
  std::size_t k = 0;
  double F = 0.0;

  friend bool operator==(const DisplacementPoint&, const DisplacementPoint&) = default;
};

struct DisplacementCurve {
  std::vector<DisplacementPoint> points;
  // Length of the source series.
  std::size_t length = 0;
  // Unset for a curve averaged over several letters.
  std::optional<Symbol> letter;
};

struct DisplacementOptions {
  // Worker threads for the per-k loop. Output does not depend on this.
  unsigned threads = 1;
};

// F(k): variance, over every start i in [0, N-k], of the window sum of
// bits[i..i+k-1].
//
// Window sums come from one prefix-sum pass; the moments are accumulated in
// 128-bit integers so the variance numerator is exact and F(k) carries a
// single rounding.
//
// Throws RangeError naming the offending k when the grid is not strictly
// increasing, contains 0, or exceeds N/4.
DisplacementCurve displacement(const IndicatorSeries& series,
                               std::span<const std::size_t> kGrid,
                               DisplacementOptions options = {});

// The centered form: mean over i of S_ik^2 with S_ik the window sum of
// x_j - <x>. Equals F(k) plus the squared offset between the mean window
// sum and k<x>, which vanishes as k/N -> 0.
double centeredMeanSquare(const IndicatorSeries& series, std::size_t k);

// Equal-weight mean of per-letter curves sampled on the same grid.
DisplacementCurve averageCurves(std::span<const DisplacementCurve> curves);

struct ScalingFit {
  double alpha = 0.0;
  double logIntercept = 0.0;
  std::size_t kMin = 0;
  std::size_t kMax = 0;
  double rmsResidual = 0.0;
  std::size_t pointsUsed = 0;
  // Points in range skipped because F == 0.
  std::size_t zeroPointsExcluded = 0;
};

// Least-squares slope of ln F against ln k over curve points with
// kMin <= k <= kMax. Needs at least 3 points with F > 0 in range.
ScalingFit fitExponent(const DisplacementCurve& curve, std::size_t kMin,
                       std::size_t kMax);

// Log-spaced distinct window lengths from 1 to floor(n/4) inclusive.
std::vector<std::size_t> defaultKGrid(std::size_t n,
                                      unsigned pointsPerDecade = 20);

}  // namespace lrc
