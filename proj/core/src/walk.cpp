#include "lrc/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "lrc/error.hpp"
#include "lrc/fit.hpp"

namespace lrc {

namespace {

__extension__ using Wide = unsigned __int128;

std::vector<std::int64_t> prefixSums(const std::vector<std::uint8_t>& bits) {
  std::vector<std::int64_t> prefix(bits.size() + 1, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) prefix[i + 1] = prefix[i] + bits[i];
  return prefix;
}

double windowVariance(const std::vector<std::int64_t>& prefix, std::size_t k) {
  const std::size_t n = prefix.size() - 1;
  const std::size_t windows = n - k + 1;
  Wide sum = 0;
  Wide sumSq = 0;
  for (std::size_t i = 0; i < windows; ++i) {
    const auto s = static_cast<std::uint64_t>(prefix[i + k] - prefix[i]);
    sum += s;
    sumSq += static_cast<Wide>(s) * s;
  }
  // windows^2 * Var = windows * sumSq - sum^2, exactly, and >= 0.
  const Wide numerator = static_cast<Wide>(windows) * sumSq - sum * sum;
  const auto w = static_cast<double>(windows);
  return static_cast<double>(numerator) / (w * w);
}

void checkGrid(std::span<const std::size_t> kGrid, std::size_t n) {
  if (kGrid.empty()) throw RangeError("k grid is empty");
  for (std::size_t j = 0; j < kGrid.size(); ++j) {
    const std::size_t k = kGrid[j];
    if (k == 0) throw RangeError("k = 0 is not a valid window length");
    if (j > 0 && k <= kGrid[j - 1]) {
      throw RangeError("k grid must be strictly increasing (k = " +
                       std::to_string(k) + " follows " +
                       std::to_string(kGrid[j - 1]) + ")");
    }
    if (k > n / 4) {
      throw RangeError("k = " + std::to_string(k) + " exceeds N/4 = " +
                       std::to_string(n / 4) + " for N = " + std::to_string(n));
    }
  }
}

}  // namespace

IndicatorSeries IndicatorSeries::fromBits(std::vector<std::uint8_t> bits,
                                          Symbol sourceLetter) {
  if (bits.empty()) throw InvalidArgument("empty text");
  std::size_t ones = 0;
  for (auto b : bits) {
    if (b > 1) throw InvalidArgument("indicator values must be 0 or 1");
    ones += b;
  }
  IndicatorSeries series;
  series.mean = static_cast<double>(ones) / static_cast<double>(bits.size());
  series.bits = std::move(bits);
  series.sourceLetter = sourceLetter;
  return series;
}

IndicatorSeries indicator(const NormalizedText& text, Symbol letter) {
  if (letter > kSpace) throw InvalidArgument("symbol code out of range");
  if (text.empty()) throw InvalidArgument("empty text");
  std::vector<std::uint8_t> bits(text.size());
  const auto symbols = text.symbols();
  std::transform(symbols.begin(), symbols.end(), bits.begin(),
                 [letter](Symbol s) { return static_cast<std::uint8_t>(s == letter); });
  return IndicatorSeries::fromBits(std::move(bits), letter);
}

DisplacementCurve displacement(const IndicatorSeries& series,
                               std::span<const std::size_t> kGrid,
                               DisplacementOptions options) {
  if (series.bits.empty()) throw InvalidArgument("empty text");
  checkGrid(kGrid, series.size());

  const auto prefix = prefixSums(series.bits);
  DisplacementCurve curve;
  curve.length = series.size();
  curve.letter = series.sourceLetter;
  curve.points.resize(kGrid.size());

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t j = first; j < kGrid.size(); j += stride) {
      curve.points[j] = {kGrid[j], windowVariance(prefix, kGrid[j])};
    }
  };

  const std::size_t threads =
      std::clamp<std::size_t>(options.threads, 1, kGrid.size());
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  return curve;
}

double centeredMeanSquare(const IndicatorSeries& series, std::size_t k) {
  const std::size_t n = series.size();
  if (k == 0 || k > n) throw RangeError("k = " + std::to_string(k) + " out of range");
  // Running window sum of the centered values, accumulated in long double.
  long double s = 0.0L;
  const long double mean = series.mean;
  for (std::size_t j = 0; j < k; ++j) s += series.bits[j] - mean;
  long double sumSq = s * s;
  for (std::size_t i = 1; i + k <= n; ++i) {
    s += static_cast<long double>(series.bits[i + k - 1]) - series.bits[i - 1];
    sumSq += s * s;
  }
  return static_cast<double>(sumSq / static_cast<long double>(n - k + 1));
}

DisplacementCurve averageCurves(std::span<const DisplacementCurve> curves) {
  if (curves.empty()) throw InvalidArgument("no curves to average");
  DisplacementCurve avg;
  avg.length = curves.front().length;
  avg.points = curves.front().points;
  for (std::size_t c = 1; c < curves.size(); ++c) {
    if (curves[c].points.size() != avg.points.size()) {
      throw InvalidArgument("curves sampled on different grids");
    }
    for (std::size_t j = 0; j < avg.points.size(); ++j) {
      if (curves[c].points[j].k != avg.points[j].k) {
        throw InvalidArgument("curves sampled on different grids");
      }
      avg.points[j].F += curves[c].points[j].F;
    }
  }
  for (auto& p : avg.points) p.F /= static_cast<double>(curves.size());
  return avg;
}

ScalingFit fitExponent(const DisplacementCurve& curve, std::size_t kMin,
                       std::size_t kMax) {
  if (kMin >= kMax) {
    throw RangeError("fit range needs kMin < kMax (got " + std::to_string(kMin) +
                     ":" + std::to_string(kMax) + ")");
  }
  std::vector<double> x, y;
  ScalingFit fit;
  fit.kMin = kMin;
  fit.kMax = kMax;
  for (const auto& p : curve.points) {
    if (p.k < kMin || p.k > kMax) continue;
    if (p.F <= 0.0) {
      ++fit.zeroPointsExcluded;
      continue;
    }
    x.push_back(std::log(static_cast<double>(p.k)));
    y.push_back(std::log(p.F));
  }
  if (x.size() < 3) {
    throw InvalidArgument("fit range " + std::to_string(kMin) + ":" +
                          std::to_string(kMax) + " holds " +
                          std::to_string(x.size()) +
                          " usable points; need at least 3");
  }
  const LineFit line = fitLine(x, y);
  fit.alpha = line.slope;
  fit.logIntercept = line.intercept;
  fit.rmsResidual = line.rmsResidual;
  fit.pointsUsed = line.points;
  return fit;
}

std::vector<std::size_t> defaultKGrid(std::size_t n, unsigned pointsPerDecade) {
  if (n < 40) throw InvalidArgument("k grid needs N >= 40 (got " + std::to_string(n) + ")");
  if (pointsPerDecade == 0) throw InvalidArgument("points per decade must be positive");
  const std::size_t kMax = n / 4;
  std::vector<std::size_t> grid;
  for (unsigned j = 0;; ++j) {
    const double value = std::pow(10.0, static_cast<double>(j) / pointsPerDecade);
    const auto k = static_cast<std::size_t>(std::llround(value));
    if (k > kMax) break;
    if (grid.empty() || k > grid.back()) grid.push_back(k);
  }
  if (grid.back() != kMax) grid.push_back(kMax);
  return grid;
}

}  // namespace lrc
