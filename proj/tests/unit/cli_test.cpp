#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result runCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = lrc::cli::main(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("lrc_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv("LRC_SEED");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }

  std::string sampleFile(std::size_t n = 40000) {
    std::mt19937_64 engine(12);
    return write("sample.txt", "Call me Ishmael. " + lrc::testing::randomSymbols(n, engine));
  }

  fs::path dir_;
};

// First line "# command: lrc ..." re-parsed and run again.
Result replay(const std::string& output) {
  const auto line = output.substr(0, output.find('\n'));
  const std::string prefix = "# command: ";
  EXPECT_EQ(line.rfind(prefix, 0), 0u) << line;
  auto args = lrc::cli::splitCommandLine(line.substr(prefix.size()));
  EXPECT_EQ(args.front(), "lrc");
  args.erase(args.begin());
  return runCli(args);
}

TEST_F(CliTest, EmptyInputFails) {
  const auto path = write("empty.txt", "");
  const auto r = runCli({"walk", "-i", path});
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("empty text"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingFileAndBadFlags) {
  EXPECT_NE(runCli({"walk", "-i", (dir_ / "nope.txt").string()}).status, 0);
  EXPECT_NE(runCli({"walk", "-i", sampleFile(), "--bogus"}).status, 0);
  EXPECT_NE(runCli({"walk", "-i", sampleFile(), "--letter", "ab"}).status, 0);
  EXPECT_NE(runCli({"shuffle", "-i", sampleFile(), "--mode", "sentence"}).status, 0);
  EXPECT_NE(runCli({"walk", "-i", sampleFile(), "--fit", "10"}).status, 0);
  EXPECT_NE(runCli({}).status, 0);
}

TEST_F(CliTest, NormalizeWritesSymbolsAndSidecar) {
  const auto input = write("in.txt", "Hello,  World!\n\"Ahab\"");
  const auto output = (dir_ / "out.txt").string();
  const auto r = runCli({"normalize", "-i", input, "-o", output});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(slurp(output), "hello world ahab ");
  const auto params = slurp(output + ".params");
  EXPECT_EQ(params.rfind("# command: lrc normalize", 0), 0u) << params;
}

TEST_F(CliTest, WalkOutputIsDeterministic) {
  const auto input = sampleFile();
  const std::vector<std::string> args{"walk", "-i", input, "-l", "a,e,space", "--fit", "10:100"};
  const auto first = runCli(args);
  ASSERT_EQ(first.status, 0) << first.err;
  EXPECT_EQ(runCli(args).out, first.out);
  EXPECT_NE(first.out.find("# block letter=e"), std::string::npos);
  EXPECT_NE(first.out.find("fit letter=a kmin=10 kmax=100"), std::string::npos) << first.out;
}

TEST_F(CliTest, ThreadsDoNotChangeOutput) {
  const auto input = sampleFile();
  const auto serial = runCli({"walk", "-i", input, "-l", "all"});
  const auto parallel = runCli({"walk", "-i", input, "-l", "all", "--threads", "4"});
  ASSERT_EQ(serial.status, 0) << serial.err;
  EXPECT_EQ(serial.out, parallel.out);
}

TEST_F(CliTest, HeadersReplayToIdenticalOutput) {
  const auto input = sampleFile();
  const std::vector<std::vector<std::string>> invocations{
      {"walk", "-i", input, "-l", "a,t", "--fit", "10:100", "--fit", "100:1000", "--average"},
      {"jsd-profile", "-i", input, "--segment-length", "2000", "--alphabet", "letters-only"},
      {"zipf", "-i", input, "--top", "20", "--fit-range", "2:40"},
      {"bands", "-i", input, "--band-count", "4", "--target-share", "0.25"},
      {"band-jsd", "-i", input, "--segment-length", "5000"},
      {"halves", "-i", input, "--ratio", "the/a"},
  };
  for (const auto& args : invocations) {
    const auto first = runCli(args);
    ASSERT_EQ(first.status, 0) << args.front() << ": " << first.err;
    const auto again = replay(first.out);
    ASSERT_EQ(again.status, 0) << again.err;
    EXPECT_EQ(again.out, first.out) << args.front();
  }
}

TEST_F(CliTest, ShuffleSidecarReplays) {
  const auto input = sampleFile();
  const auto output = (dir_ / "shuffled.txt").string();
  const auto r = runCli({"shuffle", "-i", input, "-o", output, "--mode", "window-sample",
                         "--window", "500", "--seed", "7"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto first = slurp(output);
  const auto params = slurp(output + ".params");
  EXPECT_NE(params.find("--seed 7"), std::string::npos) << params;
  fs::remove(output);
  ASSERT_EQ(replay(params).status, 0);
  EXPECT_EQ(slurp(output), first);
}

TEST_F(CliTest, SeedFromEnvironment) {
  const auto input = sampleFile(5000);
  const std::vector<std::string> args{"shuffle", "-i", input, "--mode", "letter"};
  const auto seed1 = runCli(args);
  ::setenv("LRC_SEED", "99", 1);
  const auto env = runCli(args);
  const auto explicitSeed = runCli({"shuffle", "-i", input, "--mode", "letter", "--seed", "99"});
  ::unsetenv("LRC_SEED");
  EXPECT_NE(seed1.out, env.out);
  EXPECT_EQ(env.out, explicitSeed.out);
  const auto config = lrc::cli::parseArgs({"shuffle", "-i", input});
  EXPECT_EQ(config.seed, 1u);
}

TEST_F(CliTest, SynthThenWalk) {
  const auto synth = (dir_ / "synth.txt").string();
  const auto r = runCli({"synth", "-o", synth, "--length", "200000", "--base-p", "0.062",
                         "--burst-p", "0.1054", "--burst-len", "6250", "--seed", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(fs::file_size(synth), 200000u);
  const auto walk = runCli({"walk", "-i", synth, "-l", "a", "--fit", "10:100"});
  ASSERT_EQ(walk.status, 0) << walk.err;
  EXPECT_NE(walk.out.find("alpha="), std::string::npos);
}

TEST(CommandLineTest, SplitHandlesQuotes) {
  EXPECT_EQ(lrc::cli::splitCommandLine(R"(lrc walk -i "a b.txt" -l a)"),
            (std::vector<std::string>{"lrc", "walk", "-i", "a b.txt", "-l", "a"}));
  EXPECT_EQ(lrc::cli::splitCommandLine(R"(x "q\"r\\s")"),
            (std::vector<std::string>{"x", R"(q"r\s)"}));
}

TEST(CommandLineTest, CanonicalArgsRoundTrip) {
  auto config = lrc::cli::parseArgs({"synth", "--length", "1000", "--base-p", "0.1",
                                     "--burst-p", "0.3", "--burst-start", "10", "--seed", "5"});
  const auto again = lrc::cli::parseArgs(lrc::cli::canonicalArgs(config));
  EXPECT_EQ(lrc::cli::canonicalArgs(again), lrc::cli::canonicalArgs(config));
  EXPECT_EQ(again.burstStart, 10u);
  EXPECT_EQ(again.baseP, 0.1);
}

TEST(ToolBinaryTest, ExitStatusOnError) {
  const std::string tool = LRC_TOOL_PATH;
  const auto missing = (fs::temp_directory_path() / "lrc_no_such_file.txt").string();
  const int status = std::system((tool + " walk -i " + missing + " > /dev/null 2>&1").c_str());
  EXPECT_NE(status, 0);
  EXPECT_EQ(std::system((tool + " --help > /dev/null 2>&1").c_str()), 0);
}

}  // namespace
