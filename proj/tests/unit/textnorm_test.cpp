#include "lrc/textnorm.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lrc/error.hpp"
#include "oracles.hpp"

namespace {

using lrc::NormalizedText;
using lrc::normalize;
using lrc::tokenize;

TEST(NormalizeTest, TrailingPunctuationBecomesOneSpace) {
  EXPECT_EQ(normalize("Call me Ishmael.").render(), "call me ishmael ");
}

TEST(NormalizeTest, EmptyInEmptyOut) {
  EXPECT_TRUE(normalize("").empty());
}

TEST(NormalizeTest, CollapsesRuns) {
  EXPECT_EQ(normalize("A--b  C").render(), "a b c");
}

TEST(NormalizeTest, LeadingRunKeptAsSingleSpace) {
  EXPECT_EQ(normalize("  \"Hello,\" she said...\n").render(), " hello she said ");
}

TEST(NormalizeTest, NonAsciiAndDigitsAreNonAlphabetic) {
  // UTF-8 "café 42 naïve": accented letters are separators.
  EXPECT_EQ(normalize("caf\xC3\xA9 42 na\xC3\xAFve").render(), "caf na ve");
}

TEST(NormalizeTest, TrimOption) {
  EXPECT_EQ(normalize("...Call me Ishmael.", {.trim = true}).render(), "call me ishmael");
  EXPECT_EQ(lrc::trim(normalize(" ab ")).render(), "ab");
}

TEST(NormalizeTest, ChunkBoundariesDoNotMatter) {
  std::mt19937_64 engine(5);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int trial = 0; trial < 50; ++trial) {
    std::string raw(500, '\0');
    for (auto& c : raw) c = static_cast<char>(byte(engine));
    const auto whole = normalize(raw).render();
    for (std::size_t cut : {1u, 7u, 64u, 499u}) {
      lrc::StreamNormalizer n;
      std::string out;
      for (std::size_t i = 0; i < raw.size(); i += cut) {
        n.feed(std::string_view(raw).substr(i, cut), out);
      }
      n.finish(out);
      ASSERT_EQ(out, whole);
    }
  }
}

TEST(NormalizeTest, PropertiesOnRandomBytes) {
  std::mt19937_64 engine(17);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> len(0, 300);
  for (int trial = 0; trial < 500; ++trial) {
    std::string raw(static_cast<std::size_t>(len(engine)), '\0');
    for (auto& c : raw) c = static_cast<char>(byte(engine));
    const auto text = normalize(raw);
    const auto rendered = text.render();
    // Output alphabet is a subset of [a-z ].
    for (char c : rendered) ASSERT_TRUE(lrc::isSymbolChar(c));
    ASSERT_TRUE(text.isCollapsed());
    // Idempotent.
    ASSERT_EQ(normalize(rendered), text);
    // Tokens are non-empty.
    for (const auto& t : tokenize(text)) ASSERT_GE(t.length, 1u);
  }
}

TEST(NormalizeTest, StreamMatchesInMemory) {
  std::string raw;
  for (int i = 0; i < 20000; ++i) raw += "It was the best of times; it was the WORST of times!\n";
  std::istringstream in(raw);
  std::ostringstream out;
  const auto written = lrc::normalizeStream(in, out);
  EXPECT_EQ(out.str(), normalize(raw).render());
  EXPECT_EQ(written, out.str().size());
}

TEST(NormalizeTest, UnreadableStreamReportsOffset) {
  std::istringstream in("abc");
  in.setstate(std::ios::badbit);
  try {
    normalize(in);
    FAIL() << "expected IoError";
  } catch (const lrc::IoError& e) {
    EXPECT_EQ(e.offset(), 0u);
  }
}

TEST(NormalizedTextTest, RejectsInvalidCodes) {
  EXPECT_THROW(NormalizedText(std::vector<lrc::Symbol>{0, 27}), lrc::InvalidArgument);
  EXPECT_THROW(NormalizedText::fromRendered("ab!"), lrc::InvalidArgument);
  EXPECT_NO_THROW(NormalizedText::fromRendered("a  b"));
  EXPECT_FALSE(NormalizedText::fromRendered("a  b").isCollapsed());
}

TEST(TokenizeTest, SplitsOnSpaces) {
  const auto tokens = tokenize(NormalizedText::fromRendered("call me ishmael "));
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0], (lrc::Token{"call", 0, 4}));
  EXPECT_EQ(tokens[1], (lrc::Token{"me", 5, 2}));
  EXPECT_EQ(tokens[2], (lrc::Token{"ishmael", 8, 7}));
}

TEST(TokenizeTest, NoLettersNoTokens) {
  EXPECT_TRUE(tokenize(NormalizedText::fromRendered(" ")).empty());
}

TEST(TokenizeTest, RepeatedWord) {
  const auto tokens = tokenize(NormalizedText::fromRendered("a a a"));
  ASSERT_EQ(tokens.size(), 3u);
  for (const auto& t : tokens) EXPECT_EQ(t.text, "a");
}

TEST(TokenizeTest, JoinReproducesTrimmedText) {
  std::mt19937_64 engine(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto text = normalize(lrc::testing::randomSymbols(200, engine, 0.3));
    std::string joined;
    std::size_t lastStart = 0;
    bool first = true;
    for (const auto& t : tokenize(text)) {
      if (!first) ASSERT_GT(t.start, lastStart);
      lastStart = t.start;
      joined += (first ? "" : " ") + t.text;
      first = false;
    }
    ASSERT_EQ(joined, lrc::trim(text).render());
  }
}

TEST(ParseSymbolTest, LettersAndSpace) {
  EXPECT_EQ(lrc::parseSymbol("a"), 0);
  EXPECT_EQ(lrc::parseSymbol("Z"), 25);
  EXPECT_EQ(lrc::parseSymbol("space"), lrc::kSpace);
  EXPECT_THROW(lrc::parseSymbol("ab"), lrc::InvalidArgument);
}

TEST(LoadTextTest, AutoDetectsSymbolFiles) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto raw = dir / "lrc_load_raw.txt";
  const auto sym = dir / "lrc_load_sym.txt";
  std::ofstream(raw) << "Hello,  World!\n";
  std::ofstream(sym) << "a  a   a";
  EXPECT_EQ(lrc::loadText(raw).render(), "hello world ");
  // Symbol files keep runs of spaces.
  EXPECT_EQ(lrc::loadText(sym).render(), "a  a   a");
  EXPECT_EQ(lrc::loadText(sym, lrc::InputFormat::Raw).render(), "a a a");
  EXPECT_THROW(lrc::loadText(raw, lrc::InputFormat::Symbols), lrc::InvalidArgument);
  EXPECT_THROW(lrc::loadText(dir / "lrc_missing_file.txt"), lrc::IoError);
  std::filesystem::remove(raw);
  std::filesystem::remove(sym);
}

}  // namespace
