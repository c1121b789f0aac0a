#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lrc::cli {

// Every parameter of one invocation. Defaults match the tool's flags.
struct RunConfig {
  std::string subcommand;
  std::string input;
  // "-" writes to standard output.
  std::string output = "-";
  std::uint64_t seed = 1;
  int verbosity = 0;
  std::string inputFormat = "auto";
  bool trim = false;

  // walk
  std::vector<std::string> letters{"a"};
  unsigned pointsPerDecade = 20;
  std::vector<std::string> fits;
  bool average = false;
  unsigned threads = 1;

  // shuffle
  std::string mode = "window-sample";
  std::size_t window = 3000;

  // synth
  std::size_t length = 1'200'000;
  double baseP = 0.062;
  double burstP = 0.1054;
  std::optional<std::size_t> burstStart;
  std::size_t burstLength = 6250;

  // jsd-profile, band-jsd
  std::size_t segmentLength = 0;
  std::size_t step = 0;
  std::string alphabet = "with-space";

  // zipf, bands, band-jsd, halves
  std::size_t bandCount = 5;
  double targetShare = 0.2;
  std::size_t top = 50;
  std::string fitRange = "10:1000";
  std::vector<std::string> ratios{"the/a", "is/was"};
};

// Parses a full argument vector (without the program name). Throws
// lrc::InvalidArgument with a one-line message on bad input. Honors the
// LRC_SEED environment variable when --seed is absent.
RunConfig parseArgs(const std::vector<std::string>& args);

// The argument vector that reproduces `config` exactly.
std::vector<std::string> canonicalArgs(const RunConfig& config);

// Splits a command line written by canonicalArgs (double-quoted words
// allowed) back into arguments.
std::vector<std::string> splitCommandLine(const std::string& line);

// Runs one subcommand. Returns the process exit status; diagnostics go to
// `err`, tabular output to `out` or to config.output.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parseArgs + run, reporting parse errors and --help on `out`/`err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrc::cli
