#include "lrc/nullmodels.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/random.hpp"

namespace lrc {

namespace {

void requireWindow(const NormalizedText& text, std::size_t window,
                   std::size_t minimum) {
  if (text.empty()) throw InvalidArgument("empty text");
  if (window < minimum) {
    throw InvalidArgument("window size " + std::to_string(window) +
                          " is below the minimum of " + std::to_string(minimum));
  }
  if (window > text.size()) {
    throw InvalidArgument("window size " + std::to_string(window) +
                          " exceeds text length " + std::to_string(text.size()));
  }
}

}  // namespace

std::string_view toString(ShuffleMode mode) noexcept {
  switch (mode) {
    case ShuffleMode::WindowSample: return "window-sample";
    case ShuffleMode::WindowPermute: return "window-permute";
    case ShuffleMode::FullLetter: return "letter";
    case ShuffleMode::FullWord: return "word";
  }
  return "?";
}

ShuffleMode parseShuffleMode(std::string_view name) {
  for (auto mode : {ShuffleMode::WindowSample, ShuffleMode::WindowPermute,
                    ShuffleMode::FullLetter, ShuffleMode::FullWord}) {
    if (name == toString(mode)) return mode;
  }
  throw InvalidArgument("unknown shuffle mode '" + std::string(name) +
                        "' (window-sample, window-permute, letter, word)");
}

NormalizedText windowShuffle(const NormalizedText& text, const ShuffleSpec& spec) {
  requireWindow(text, spec.window, 2);
  const std::size_t n = text.size();
  const std::size_t behind = spec.window / 2;         // floor(n/2)
  const std::size_t ahead = (spec.window + 1) / 2;    // ceil(n/2)
  auto rng = Rng::forStream(spec.seed, "shuffle/window-sample");
  const auto source = text.symbols();
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i + 1 > behind ? i + 1 - behind : 0;
    const std::size_t hi = std::min(n, i + ahead);
    out[i] = source[rng.between(lo, hi)];
  }
  return NormalizedText(std::move(out));
}

NormalizedText windowPermute(const NormalizedText& text, const ShuffleSpec& spec) {
  requireWindow(text, spec.window, 1);
  auto rng = Rng::forStream(spec.seed, "shuffle/window-permute");
  std::vector<Symbol> out(text.symbols().begin(), text.symbols().end());
  for (std::size_t begin = 0; begin < out.size(); begin += spec.window) {
    const std::size_t len = std::min(spec.window, out.size() - begin);
    rng.shuffle(std::span<Symbol>(out.data() + begin, len));
  }
  return NormalizedText(std::move(out));
}

NormalizedText fullShuffle(const NormalizedText& text, const ShuffleSpec& spec) {
  if (text.empty()) throw InvalidArgument("empty text");
  if (spec.mode == ShuffleMode::FullLetter) {
    auto rng = Rng::forStream(spec.seed, "shuffle/letter");
    std::vector<Symbol> out(text.symbols().begin(), text.symbols().end());
    rng.shuffle(std::span<Symbol>(out));
    return NormalizedText(std::move(out));
  }
  if (spec.mode == ShuffleMode::FullWord) {
    auto rng = Rng::forStream(spec.seed, "shuffle/word");
    auto tokens = tokenize(text);
    if (tokens.empty()) throw InvalidArgument("text holds no words to shuffle");
    rng.shuffle(std::span<Token>(tokens));
    std::string rendered;
    rendered.reserve(text.size());
    for (const auto& token : tokens) {
      if (!rendered.empty()) rendered.push_back(' ');
      rendered += token.text;
    }
    return NormalizedText::fromRendered(rendered);
  }
  throw InvalidArgument("fullShuffle needs mode letter or word");
}

NormalizedText shuffle(const NormalizedText& text, const ShuffleSpec& spec) {
  switch (spec.mode) {
    case ShuffleMode::WindowSample: return windowShuffle(text, spec);
    case ShuffleMode::WindowPermute: return windowPermute(text, spec);
    case ShuffleMode::FullLetter:
    case ShuffleMode::FullWord: return fullShuffle(text, spec);
  }
  throw InvalidArgument("unknown shuffle mode");
}

std::size_t TwoRegimeSpec::resolvedBurstStart() const noexcept {
  if (burstStart) return *burstStart;
  return totalLength >= burstLength ? (totalLength - burstLength) / 2 : 0;
}

NormalizedText twoRegimeSequence(const TwoRegimeSpec& spec) {
  auto inOpenUnit = [](double p) { return p > 0.0 && p < 1.0; };
  if (!inOpenUnit(spec.baseP) || !inOpenUnit(spec.burstP)) {
    throw RangeError("probabilities must lie in (0, 1)");
  }
  const std::size_t start = spec.resolvedBurstStart();
  if (start > spec.totalLength || spec.burstLength > spec.totalLength - start) {
    throw RangeError("burst [" + std::to_string(start) + ", " +
                     std::to_string(start + spec.burstLength) +
                     ") does not fit in length " + std::to_string(spec.totalLength));
  }
  auto rng = Rng::forStream(spec.seed, "synth/two-regime");
  std::vector<Symbol> out(spec.totalLength);
  const Symbol letterA = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool inBurst = i >= start && i < start + spec.burstLength;
    out[i] = rng.bernoulli(inBurst ? spec.burstP : spec.baseP) ? letterA : kSpace;
  }
  return NormalizedText(std::move(out));
}

}  // namespace lrc
