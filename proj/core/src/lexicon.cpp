#include "lrc/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lrc/divergence.hpp"
#include "lrc/error.hpp"
#include "lrc/fit.hpp"

namespace lrc {

FrequencyLexicon::FrequencyLexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    return a.count != b.count ? a.count > b.count : a.word < b.word;
  });
  for (const auto& e : entries_) {
    totalLetters_ += e.count * e.length;
    totalTokens_ += e.count;
  }
  rankByWord_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    e.letterShare = totalLetters_ == 0
                        ? 0.0
                        : static_cast<double>(e.count * e.length) /
                              static_cast<double>(totalLetters_);
    rankByWord_.emplace(e.word, i + 1);
  }
}

std::optional<std::size_t> FrequencyLexicon::rankOf(std::string_view word) const {
  const auto it = rankByWord_.find(std::string(word));
  if (it == rankByWord_.end()) return std::nullopt;
  return it->second;
}

FrequencyLexicon buildLexicon(std::span<const Token> tokens) {
  if (tokens.empty()) throw InvalidArgument("empty token stream");
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& t : tokens) ++counts[t.text];
  std::vector<LexiconEntry> entries;
  entries.reserve(counts.size());
  for (auto& [word, count] : counts) {
    entries.push_back({word, count, word.size(), 0.0});
  }
  return FrequencyLexicon(std::move(entries));
}

ZipfFit zipfFit(const FrequencyLexicon& lex, std::size_t firstRank,
                std::size_t lastRank) {
  if (firstRank == 0) firstRank = 1;
  lastRank = std::min(lastRank, lex.size());
  if (lastRank < firstRank || lastRank - firstRank + 1 < 10) {
    throw InvalidArgument("Zipf fit needs at least 10 ranks (have " +
                          std::to_string(lastRank >= firstRank ? lastRank - firstRank + 1 : 0) +
                          ")");
  }
  std::vector<double> x, y;
  const auto total = static_cast<double>(lex.totalTokens());
  for (std::size_t r = firstRank; r <= lastRank; ++r) {
    x.push_back(std::log(static_cast<double>(r)));
    y.push_back(std::log(static_cast<double>(lex.atRank(r).count) / total));
  }
  const auto line = fitLine(x, y);
  return {line.slope, line.intercept, line.rmsResidual, firstRank, lastRank};
}

std::size_t BandPartition::bandOfRank(std::size_t rank) const {
  for (std::size_t b = 0; b < bands.size(); ++b) {
    if (bands[b].contains(rank)) return b;
  }
  throw RangeError("rank " + std::to_string(rank) + " is in no band");
}

BandPartition partitionBands(const FrequencyLexicon& lex, std::size_t bandCount,
                             double targetShare) {
  if (bandCount == 0) throw InvalidArgument("band count must be positive");
  if (!(targetShare > 0.0)) throw InvalidArgument("target share must be positive");
  if (lex.size() == 0) throw InvalidArgument("empty lexicon");

  BandPartition partition;
  partition.targetShare = targetShare;
  partition.bands.resize(bandCount);

  const auto total = static_cast<double>(lex.totalLetters());
  const auto entries = lex.entries();
  std::uint64_t cumulative = 0;
  std::size_t rank = 1;
  for (std::size_t b = 0; b < bandCount; ++b) {
    Band& band = partition.bands[b];
    const bool last = b + 1 == bandCount;
    const double target = static_cast<double>(b + 1) * targetShare * total * (1.0 - 1e-12);
    while (rank <= entries.size()) {
      const auto& e = entries[rank - 1];
      if (band.wordTypeCount == 0) band.firstRank = rank;
      band.lastRank = rank;
      ++band.wordTypeCount;
      band.letters += e.count * e.length;
      cumulative += e.count * e.length;
      ++rank;
      if (!last && static_cast<double>(cumulative) >= target) break;
    }
    band.letterShare = total == 0.0 ? 0.0 : static_cast<double>(band.letters) / total;
    if (band.wordTypeCount == 0) partition.degenerate = true;
  }
  return partition;
}

NormalizedText bandFilterText(const NormalizedText& text, const FrequencyLexicon& lex,
                              const Band& band) {
  std::vector<Symbol> out(text.symbols().begin(), text.symbols().end());
  for (const auto& token : tokenize(text)) {
    const auto rank = lex.rankOf(token.text);
    if (rank && band.contains(*rank)) continue;
    std::fill_n(out.begin() + static_cast<std::ptrdiff_t>(token.start), token.length, kSpace);
  }
  return NormalizedText(std::move(out));
}

std::size_t BandJsdReport::maxBand() const {
  if (bands.empty()) throw InvalidArgument("empty band report");
  std::size_t best = 0;
  for (std::size_t b = 1; b < bands.size(); ++b) {
    if (bands[b].meanNormalized > bands[best].meanNormalized) best = b;
  }
  return best;
}

BandJsdReport bandJsd(const NormalizedText& text, const FrequencyLexicon& lex,
                      const BandPartition& partition, std::size_t segmentLength) {
  if (segmentLength == 0) throw RangeError("segment length must be positive");
  if (text.size() / 2 < segmentLength) {
    throw RangeError("text of length " + std::to_string(text.size()) +
                     " is shorter than two segments of " +
                     std::to_string(segmentLength));
  }
  BandJsdReport report;
  report.segmentLength = segmentLength;
  for (const Band& band : partition.bands) {
    BandJsdEntry entry;
    entry.wordTypeCount = band.wordTypeCount;
    const auto filtered = bandFilterText(text, lex, band);
    double sumNormalized = 0.0;
    double sumN = 0.0;
    for (std::size_t s = 0; s + 2 * segmentLength <= filtered.size(); s += 2 * segmentLength) {
      const auto left = segmentDistribution(filtered, s, segmentLength, Alphabet::LettersOnly);
      const auto right = segmentDistribution(filtered, s + segmentLength, segmentLength,
                                             Alphabet::LettersOnly);
      if (left.total() == 0 || right.total() == 0) continue;
      const auto cmp = compareSegments(left, right);
      sumNormalized += cmp.normalized;
      sumN += static_cast<double>(left.total() + right.total()) / 2.0;
      ++entry.pairs;
    }
    if (entry.pairs > 0) {
      entry.meanNormalized = sumNormalized / static_cast<double>(entry.pairs);
      entry.meanEffectiveN = sumN / static_cast<double>(entry.pairs);
    }
    report.bands.push_back(entry);
  }
  return report;
}

const WordHalves* HalvesComparison::find(std::string_view word) const {
  const auto it = std::find_if(words.begin(), words.end(),
                               [&](const auto& w) { return w.word == word; });
  return it == words.end() ? nullptr : &*it;
}

double HalvesComparison::countRatio(std::string_view a, std::string_view b,
                                    int half) const {
  const auto* wa = find(a);
  const auto* wb = find(b);
  const auto count = [half](const WordHalves* w) -> double {
    if (!w) return 0.0;
    return static_cast<double>(half == 0 ? w->first : w->second);
  };
  const double denominator = count(wb);
  if (denominator == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return count(wa) / denominator;
}

HalvesComparison compareHalves(const NormalizedText& text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw InvalidArgument("text holds no words");

  HalvesComparison result;
  std::size_t split = text.size() / 2;
  for (const auto& t : tokens) {
    if (split > t.start && split < t.start + t.length) {
      const std::size_t end = t.start + t.length;
      split = (split - t.start <= end - split) ? t.start : end;
      break;
    }
  }
  result.splitPosition = split;

  std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>> counts;
  for (const auto& t : tokens) {
    auto& c = counts[t.text];
    if (t.start < split) {
      ++c.first;
      ++result.tokensFirst;
    } else {
      ++c.second;
      ++result.tokensSecond;
    }
  }

  const auto lex = buildLexicon(tokens);
  result.words.reserve(lex.size());
  for (const auto& e : lex.entries()) {
    const auto& c = counts.at(e.word);
    WordHalves w{e.word, c.first, c.second, 0.0, 0.0};
    const double f1 = result.tokensFirst ? static_cast<double>(c.first) / static_cast<double>(result.tokensFirst) : 0.0;
    const double f2 = result.tokensSecond ? static_cast<double>(c.second) / static_cast<double>(result.tokensSecond) : 0.0;
    if (f1 > 0.0) {
      w.ratio = f2 / f1;
      w.relativeChange = w.ratio - 1.0;
    } else {
      w.ratio = std::numeric_limits<double>::infinity();
      w.relativeChange = std::numeric_limits<double>::infinity();
    }
    result.words.push_back(std::move(w));
  }
  return result;
}

ContentWordVariance contentWordVarianceModel(double wordCount, double avgWordLength,
                                             double letterProb) {
  if (!(wordCount >= 0.0) || !(avgWordLength >= 0.0) || !(letterProb >= 0.0)) {
    throw InvalidArgument("content-word model parameters must be non-negative");
  }
  ContentWordVariance v;
  v.expectedCount = wordCount * avgWordLength * letterProb;
  v.standardDeviation = std::sqrt(v.expectedCount);
  if (v.expectedCount > 0.0) v.relativeSd = 1.0 / std::sqrt(v.expectedCount);
  return v;
}

}  // namespace lrc
