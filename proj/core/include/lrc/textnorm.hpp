#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

// Symbol codes: 0..25 are 'a'..'z', 26 is the space.
using Symbol = std::uint8_t;
inline constexpr Symbol kSpace = 26;
inline constexpr std::size_t kAlphabetSize = 27;
inline constexpr std::size_t kLetterCount = 26;

constexpr char symbolChar(Symbol s) noexcept {
  return s == kSpace ? ' ' : static_cast<char>('a' + s);
}

constexpr bool isSymbolChar(char c) noexcept {
  return (c >= 'a' && c <= 'z') || c == ' ';
}

constexpr Symbol charSymbol(char c) noexcept {
  return c == ' ' ? kSpace : static_cast<Symbol>(c - 'a');
}

// Parses a letter name ("a".."z", or "space"/" ") to its code.
Symbol parseSymbol(std::string_view name);

// A sequence over the 27-symbol alphabet.
//
// Every code is in 0..26. Text produced by normalize() additionally never
// holds two adjacent spaces (isCollapsed()); surrogate sequences from the
// null models are valid NormalizedText but need not be collapsed.
class NormalizedText {
 public:
  NormalizedText() = default;
  explicit NormalizedText(std::vector<Symbol> symbols);

  // Reads a byte-per-symbol rendering verbatim. Throws on any byte outside
  // 'a'..'z' and ' '.
  static NormalizedText fromRendered(std::string_view rendered);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  std::string render() const;
  bool isCollapsed() const noexcept;

  friend bool operator==(const NormalizedText&, const NormalizedText&) = default;

 private:
  std::vector<Symbol> symbols_;
};

struct NormalizeOptions {
  // Drop the single leading/trailing space left by edge runs.
  bool trim = false;
};

// Incremental form of s/[^a-z]+/ /g after ASCII lowercasing. Chunks may
// split a run anywhere; the result is the same as normalizing the
// concatenation. Memory use is independent of input size.
class StreamNormalizer {
 public:
  explicit StreamNormalizer(NormalizeOptions options = {}) : options_(options) {}

  // Appends the rendered symbols for `chunk` to `out`.
  void feed(std::string_view chunk, std::string& out);
  // Flushes a pending trailing space (unless trimming).
  void finish(std::string& out);

 private:
  NormalizeOptions options_;
  bool pendingSpace_ = false;
  bool emittedAny_ = false;
};

NormalizedText normalize(std::string_view raw, NormalizeOptions options = {});

// Reads `in` to the end. Throws IoError with the byte offset on a read
// failure.
NormalizedText normalize(std::istream& in, NormalizeOptions options = {});

// Streams `in` to `out` as a byte-per-symbol rendering in fixed-size chunks.
// Returns the number of symbols written.
std::uint64_t normalizeStream(std::istream& in, std::ostream& out,
                              NormalizeOptions options = {});

NormalizedText trim(const NormalizedText& text);

struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Maximal space-free runs, in order.
std::vector<Token> tokenize(const NormalizedText& text);

enum class InputFormat {
  // Symbols if every byte is in [a-z ], otherwise raw.
  Auto,
  // Arbitrary text, normalized on load.
  Raw,
  // A byte-per-symbol rendering, read verbatim.
  Symbols,
};

NormalizedText loadText(const std::filesystem::path& path,
                        InputFormat format = InputFormat::Auto,
                        NormalizeOptions options = {});

}  // namespace lrc
