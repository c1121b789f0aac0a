#include "lrc/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lrc/error.hpp"

namespace lrc {

std::string_view toString(Alphabet alphabet) noexcept {
  return alphabet == Alphabet::WithSpace ? "with-space" : "letters-only";
}

Alphabet parseAlphabet(std::string_view name) {
  if (name == "with-space" || name == "all") return Alphabet::WithSpace;
  if (name == "letters-only" || name == "letters") return Alphabet::LettersOnly;
  throw InvalidArgument("unknown alphabet '" + std::string(name) +
                        "' (with-space, letters-only)");
}

SymbolDistribution::SymbolDistribution(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0})) {}

std::vector<double> SymbolDistribution::frequencies() const {
  std::vector<double> f(counts_.size(), 0.0);
  if (total_ == 0) return f;
  for (std::size_t i = 0; i < counts_.size(); ++i) f[i] = frequency(i);
  return f;
}

std::size_t SymbolDistribution::support() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(counts_.begin(), counts_.end(), [](auto c) { return c > 0; }));
}

double entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double entropy(const SymbolDistribution& d) {
  if (d.total() == 0) throw InvalidArgument("entropy of an empty distribution");
  return entropy(d.frequencies());
}

double jsd(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw InvalidArgument("alphabet mismatch: " + std::to_string(p.size()) +
                          " vs " + std::to_string(q.size()) + " symbols");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double r = (p[i] + q[i]) / 2.0;
    double term = 0.0;
    if (p[i] > 0.0) term += p[i] * std::log(p[i] / r);
    if (q[i] > 0.0) term += q[i] * std::log(q[i] / r);
    d += std::max(0.0, term) / 2.0;
  }
  return d;
}

double jsd(const SymbolDistribution& p, const SymbolDistribution& q) {
  if (p.alphabetSize() != q.alphabetSize()) {
    throw InvalidArgument("alphabet mismatch: " + std::to_string(p.alphabetSize()) +
                          " vs " + std::to_string(q.alphabetSize()) + " symbols");
  }
  if (p.total() == 0 || q.total() == 0) {
    throw InvalidArgument("divergence of an empty distribution");
  }
  return jsd(p.frequencies(), q.frequencies());
}

double fluctuationLevel(std::size_t n, std::uint64_t trials) {
  return fluctuationLevel(n, trials, trials);
}

double fluctuationLevel(std::size_t n, std::uint64_t trials1,
                        std::uint64_t trials2) {
  if (n < 2) throw RangeError("fluctuation level needs n >= 2 (got " + std::to_string(n) + ")");
  if (trials1 == 0 || trials2 == 0) throw RangeError("fluctuation level needs N > 0");
  if (trials1 == trials2) {
    return static_cast<double>(n - 1) / (4.0 * static_cast<double>(trials1));
  }
  return static_cast<double>(n - 1) / 8.0 *
         (1.0 / static_cast<double>(trials1) + 1.0 / static_cast<double>(trials2));
}

namespace {

std::size_t binCount(Alphabet alphabet) {
  return alphabet == Alphabet::WithSpace ? kAlphabetSize : kLetterCount;
}

void countInto(std::span<const Symbol> symbols, Alphabet alphabet,
               std::vector<std::uint64_t>& counts, int sign) {
  for (Symbol s : symbols) {
    if (s == kSpace && alphabet == Alphabet::LettersOnly) continue;
    counts[s] += static_cast<std::uint64_t>(static_cast<std::int64_t>(sign));
  }
}

}  // namespace

SymbolDistribution segmentDistribution(const NormalizedText& text,
                                       std::size_t start, std::size_t length,
                                       Alphabet alphabet) {
  if (length == 0) throw RangeError("zero-length segment");
  if (start > text.size() || length > text.size() - start) {
    throw RangeError("segment [" + std::to_string(start) + ", " +
                     std::to_string(start + length) + ") outside text of length " +
                     std::to_string(text.size()));
  }
  std::vector<std::uint64_t> counts(binCount(alphabet), 0);
  countInto(text.symbols().subspan(start, length), alphabet, counts, +1);
  return SymbolDistribution(std::move(counts));
}

JsdProfileEntry compareSegments(const SymbolDistribution& left,
                                const SymbolDistribution& right) {
  if (left.alphabetSize() != right.alphabetSize()) {
    throw InvalidArgument("alphabet mismatch between segments");
  }
  JsdProfileEntry e;
  e.trialsLeft = left.total();
  e.trialsRight = right.total();
  std::size_t pooled = 0;
  for (std::size_t i = 0; i < left.alphabetSize(); ++i) {
    if (left.counts()[i] + right.counts()[i] > 0) ++pooled;
  }
  e.effectiveAlphabet = std::max<std::size_t>(pooled, 2);
  e.rawJsd = jsd(left, right);
  e.fluctLevel = fluctuationLevel(e.effectiveAlphabet, e.trialsLeft, e.trialsRight);
  e.normalized = e.rawJsd / e.fluctLevel;
  return e;
}

JsdProfile jsdProfile(const NormalizedText& text, std::size_t segmentLength,
                      std::size_t step, Alphabet alphabet) {
  if (segmentLength == 0) throw RangeError("segment length must be positive");
  if (text.size() / 2 < segmentLength) {
    throw RangeError("text of length " + std::to_string(text.size()) +
                     " is shorter than two segments of " +
                     std::to_string(segmentLength));
  }
  if (step == 0) step = std::max<std::size_t>(1, segmentLength / 10);

  JsdProfile profile;
  profile.segmentLength = segmentLength;
  profile.step = step;
  profile.alphabet = alphabet;

  const auto symbols = text.symbols();
  const std::size_t bins = binCount(alphabet);
  std::vector<std::uint64_t> left(bins, 0), right(bins, 0);
  std::size_t b = segmentLength;
  countInto(symbols.subspan(0, segmentLength), alphabet, left, +1);
  countInto(symbols.subspan(b, segmentLength), alphabet, right, +1);

  while (true) {
    auto entry = compareSegments(SymbolDistribution(left), SymbolDistribution(right));
    entry.position = b;
    profile.entries.push_back(entry);

    if (b + step + segmentLength > symbols.size()) break;
    // Slide both segments forward by `step`, in whole-segment jumps when the
    // step exceeds the segment length.
    const std::size_t next = b + step;
    if (step >= segmentLength) {
      std::fill(left.begin(), left.end(), 0);
      std::fill(right.begin(), right.end(), 0);
      countInto(symbols.subspan(next - segmentLength, segmentLength), alphabet, left, +1);
      countInto(symbols.subspan(next, segmentLength), alphabet, right, +1);
    } else {
      countInto(symbols.subspan(b - segmentLength, step), alphabet, left, -1);
      countInto(symbols.subspan(b, step), alphabet, left, +1);
      countInto(symbols.subspan(b, step), alphabet, right, -1);
      countInto(symbols.subspan(b + segmentLength, step), alphabet, right, +1);
    }
    b = next;
  }
  return profile;
}

double JsdProfile::meanNormalized() const {
  if (entries.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& e : entries) sum += e.normalized;
  return sum / static_cast<double>(entries.size());
}

double JsdProfile::fractionAbove(double threshold) const {
  if (entries.empty()) return 0.0;
  const auto above = std::count_if(entries.begin(), entries.end(),
                                   [&](const auto& e) { return e.normalized > threshold; });
  return static_cast<double>(above) / static_cast<double>(entries.size());
}

}  // namespace lrc
