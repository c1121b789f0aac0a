#include "lrc/textnorm.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "lrc/error.hpp"

namespace lrc {

namespace {

constexpr std::size_t kChunkBytes = 1 << 16;

char lowerAscii(char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

Symbol parseSymbol(std::string_view name) {
  if (name == "space" || name == " ") return kSpace;
  if (name.size() == 1) {
    const char c = lowerAscii(name[0]);
    if (c >= 'a' && c <= 'z') return charSymbol(c);
  }
  throw InvalidArgument("not a symbol: '" + std::string(name) +
                        "' (expected a..z or 'space')");
}

NormalizedText::NormalizedText(std::vector<Symbol> symbols)
    : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] > kSpace) {
      throw InvalidArgument("symbol code " + std::to_string(symbols_[i]) +
                            " at position " + std::to_string(i) +
                            " is outside 0..26");
    }
  }
}

NormalizedText NormalizedText::fromRendered(std::string_view rendered) {
  std::vector<Symbol> symbols;
  symbols.reserve(rendered.size());
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    const char c = rendered[i];
    if (!isSymbolChar(c)) {
      throw InvalidArgument("byte " +
                            std::to_string(static_cast<unsigned char>(c)) +
                            " at offset " + std::to_string(i) +
                            " is not in [a-z ]");
    }
    symbols.push_back(charSymbol(c));
  }
  NormalizedText text;
  text.symbols_ = std::move(symbols);
  return text;
}

std::string NormalizedText::render() const {
  std::string out(symbols_.size(), ' ');
  std::transform(symbols_.begin(), symbols_.end(), out.begin(), symbolChar);
  return out;
}

bool NormalizedText::isCollapsed() const noexcept {
  return std::adjacent_find(symbols_.begin(), symbols_.end(),
                            [](Symbol a, Symbol b) {
                              return a == kSpace && b == kSpace;
                            }) == symbols_.end();
}

void StreamNormalizer::feed(std::string_view chunk, std::string& out) {
  for (char raw : chunk) {
    const char c = lowerAscii(raw);
    if (c >= 'a' && c <= 'z') {
      if (pendingSpace_ && (emittedAny_ || !options_.trim)) out.push_back(' ');
      pendingSpace_ = false;
      out.push_back(c);
      emittedAny_ = true;
    } else {
      pendingSpace_ = true;
    }
  }
}

void StreamNormalizer::finish(std::string& out) {
  if (pendingSpace_ && !options_.trim) out.push_back(' ');
  pendingSpace_ = false;
}

NormalizedText normalize(std::string_view raw, NormalizeOptions options) {
  StreamNormalizer normalizer(options);
  std::string rendered;
  rendered.reserve(raw.size());
  normalizer.feed(raw, rendered);
  normalizer.finish(rendered);
  return NormalizedText::fromRendered(rendered);
}

namespace {

// Calls sink(chunk) for each chunk read; throws IoError on a stream fault.
template <typename Sink>
std::uint64_t readChunks(std::istream& in, Sink&& sink) {
  std::array<char, kChunkBytes> buffer;
  std::uint64_t offset = 0;
  while (in) {
    in.read(buffer.data(), buffer.size());
    const auto got = static_cast<std::size_t>(in.gcount());
    if (in.bad()) throw IoError("read failed", offset);
    sink(std::string_view(buffer.data(), got));
    offset += got;
  }
  if (in.bad()) throw IoError("read failed", offset);
  return offset;
}

}  // namespace

NormalizedText normalize(std::istream& in, NormalizeOptions options) {
  StreamNormalizer normalizer(options);
  std::string rendered;
  readChunks(in, [&](std::string_view chunk) { normalizer.feed(chunk, rendered); });
  normalizer.finish(rendered);
  return NormalizedText::fromRendered(rendered);
}

std::uint64_t normalizeStream(std::istream& in, std::ostream& out,
                              NormalizeOptions options) {
  StreamNormalizer normalizer(options);
  std::string buffer;
  buffer.reserve(kChunkBytes + 1);
  std::uint64_t written = 0;
  std::uint64_t consumed = 0;
  auto flush = [&] {
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    if (!out) throw IoError("write failed", consumed);
    written += buffer.size();
    buffer.clear();
  };
  readChunks(in, [&](std::string_view chunk) {
    normalizer.feed(chunk, buffer);
    consumed += chunk.size();
    flush();
  });
  normalizer.finish(buffer);
  flush();
  return written;
}

NormalizedText trim(const NormalizedText& text) {
  auto symbols = text.symbols();
  std::size_t begin = 0;
  std::size_t end = symbols.size();
  while (begin < end && symbols[begin] == kSpace) ++begin;
  while (end > begin && symbols[end - 1] == kSpace) --end;
  return NormalizedText(std::vector<Symbol>(symbols.begin() + begin,
                                            symbols.begin() + end));
}

std::vector<Token> tokenize(const NormalizedText& text) {
  std::vector<Token> tokens;
  const auto symbols = text.symbols();
  std::size_t i = 0;
  while (i < symbols.size()) {
    if (symbols[i] == kSpace) {
      ++i;
      continue;
    }
    Token token;
    token.start = i;
    while (i < symbols.size() && symbols[i] != kSpace) {
      token.text.push_back(symbolChar(symbols[i]));
      ++i;
    }
    token.length = i - token.start;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

NormalizedText loadText(const std::filesystem::path& path, InputFormat format,
                        NormalizeOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'", 0);

  if (format == InputFormat::Raw) return normalize(in, options);

  std::string content;
  readChunks(in, [&](std::string_view chunk) { content.append(chunk); });
  const bool symbolsOnly =
      std::all_of(content.begin(), content.end(), isSymbolChar);

  if (format == InputFormat::Symbols) {
    if (!symbolsOnly) {
      throw InvalidArgument("'" + path.string() +
                            "' is not a symbol file (bytes outside [a-z ])");
    }
  } else if (!symbolsOnly) {
    return normalize(content, options);
  }
  auto text = NormalizedText::fromRendered(content);
  return options.trim ? trim(text) : text;
}

}  // namespace lrc
