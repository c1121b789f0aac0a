#pragma once

#include <cstddef>
#include <span>

namespace lrc {

// Ordinary least-squares line y = intercept + slope * x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  // Root mean square of the residuals.
  double rmsResidual = 0.0;
  std::size_t points = 0;
};

// Requires x.size() == y.size() >= 2 and x not all equal.
LineFit fitLine(std::span<const double> x, std::span<const double> y);

}  // namespace lrc
