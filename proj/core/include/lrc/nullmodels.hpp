#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "lrc/textnorm.hpp"

namespace lrc {

enum class ShuffleMode {
  // Each position drawn with replacement from a window centred on it.
  WindowSample,
  // Disjoint blocks of the window size, each permuted independently.
  WindowPermute,
  // Uniform permutation of all symbols.
  FullLetter,
  // Uniform permutation of tokens, joined by single spaces.
  FullWord,
};

std::string_view toString(ShuffleMode mode) noexcept;
ShuffleMode parseShuffleMode(std::string_view name);

struct ShuffleSpec {
  ShuffleMode mode = ShuffleMode::WindowSample;
  // Window size in symbols; ignored by the full modes.
  std::size_t window = 3000;
  std::uint64_t seed = 0;
};

// output[i] is drawn uniformly from source positions
// [max(0, i - floor(n/2) + 1), min(N, i + ceil(n/2))), i.e. the open window
// i - n/2 < j < i + n/2 clamped to the text (no wraparound).
// Requires 2 <= n <= N.
NormalizedText windowShuffle(const NormalizedText& text, const ShuffleSpec& spec);

// Block-wise permutation; preserves the global histogram exactly.
// Requires 1 <= n <= N.
NormalizedText windowPermute(const NormalizedText& text, const ShuffleSpec& spec);

// FullLetter or FullWord. Throws on empty input.
NormalizedText fullShuffle(const NormalizedText& text, const ShuffleSpec& spec);

// Dispatches on spec.mode.
NormalizedText shuffle(const NormalizedText& text, const ShuffleSpec& spec);

// Bernoulli sequence over {'a', space} with a single burst of raised
// probability.
struct TwoRegimeSpec {
  std::size_t totalLength = 1'200'000;
  double baseP = 0.062;
  double burstP = 0.1054;
  // Defaults to centring the burst in the sequence.
  std::optional<std::size_t> burstStart;
  std::size_t burstLength = 6250;
  std::uint64_t seed = 0;

  std::size_t resolvedBurstStart() const noexcept;
};

NormalizedText twoRegimeSequence(const TwoRegimeSpec& spec);

}  // namespace lrc
