#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lrc/lrc.hpp"

namespace lrc::cli {

namespace {

const std::vector<std::string> kSubcommands = {
    "normalize", "walk", "shuffle", "synth", "jsd-profile",
    "zipf",      "bands", "band-jsd", "halves"};

std::string formatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Shortest representation that parses back to the same double.
std::string exactDouble(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::pair<std::size_t, std::size_t> parseRange(const std::string& text,
                                               const std::string& flag) {
  const auto colon = text.find(':');
  std::size_t lo = 0, hi = 0;
  bool ok = colon != std::string::npos;
  if (ok) {
    const char* b = text.data();
    const char* e = b + text.size();
    ok = std::from_chars(b, b + colon, lo).ptr == b + colon &&
         std::from_chars(b + colon + 1, e, hi).ptr == e;
  }
  if (!ok || lo >= hi) {
    throw InvalidArgument(flag + " expects LO:HI with LO < HI, got '" + text + "'");
  }
  return {lo, hi};
}

std::vector<Symbol> parseLetters(const std::vector<std::string>& items) {
  std::vector<Symbol> letters;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) continue;
      if (part == "all") {
        for (Symbol s = 0; s < kLetterCount; ++s) letters.push_back(s);
      } else {
        letters.push_back(parseSymbol(part));
      }
    }
  }
  if (letters.empty()) throw InvalidArgument("--letter needs at least one letter");
  return letters;
}

std::pair<std::string, std::string> parseRatio(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
    throw InvalidArgument("--ratio expects WORD/WORD, got '" + text + "'");
  }
  return {text.substr(0, slash), text.substr(slash + 1)};
}

InputFormat parseFormat(const std::string& name) {
  if (name == "auto") return InputFormat::Auto;
  if (name == "raw") return InputFormat::Raw;
  if (name == "symbols") return InputFormat::Symbols;
  throw InvalidArgument("unknown --format '" + name + "' (auto, raw, symbols)");
}

bool needsInput(const std::string& sub) { return sub != "synth"; }
bool usesSeed(const std::string& sub) { return sub == "shuffle" || sub == "synth"; }

void buildApp(CLI::App& app, RunConfig& c) {
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto common = [&](CLI::App* sub) {
    if (needsInput(sub->get_name())) {
      sub->add_option("-i,--input", c.input, "Input text file")->required();
      sub->add_option("--format", c.inputFormat,
                      "Input format: auto, raw, symbols")
          ->capture_default_str();
      sub->add_flag("--trim", c.trim, "Drop leading/trailing space after normalizing");
    }
    sub->add_option("-o,--output", c.output, "Output file ('-' for stdout)")
        ->capture_default_str();
    sub->add_flag("-v,--verbose", c.verbosity, "Log progress to stderr (repeatable)");
    if (usesSeed(sub->get_name())) {
      sub->add_option("--seed", c.seed, "Random seed (default: $LRC_SEED or 1)");
    }
  };

  auto* normalize = app.add_subcommand("normalize", "Write the 27-symbol rendering of a text");
  common(normalize);

  auto* walk = app.add_subcommand("walk", "Displacement function F(k) for letter indicator series");
  common(walk);
  walk->add_option("-l,--letter", c.letters, "Letter(s): a, v,x or 'all'")->capture_default_str();
  walk->add_option("--points-per-decade", c.pointsPerDecade, "k-grid density")->capture_default_str();
  walk->add_option("--fit", c.fits, "Fit range KMIN:KMAX (repeatable)");
  walk->add_flag("--average", c.average, "Also emit the equal-weight letter average");
  walk->add_option("--threads", c.threads, "Worker threads (output is identical)")->capture_default_str();

  auto* shuffle = app.add_subcommand("shuffle", "Write a shuffled surrogate of a text");
  common(shuffle);
  shuffle->add_option("--mode", c.mode, "window-sample, window-permute, letter, word")
      ->capture_default_str();
  shuffle->add_option("--window", c.window, "Window size in symbols")->capture_default_str();

  auto* synth = app.add_subcommand("synth", "Write a two-regime Bernoulli sequence over {a, space}");
  common(synth);
  synth->add_option("--length", c.length, "Total length")->capture_default_str();
  synth->add_option("--base-p", c.baseP, "Probability of 'a' outside the burst")->capture_default_str();
  synth->add_option("--burst-p", c.burstP, "Probability of 'a' inside the burst")->capture_default_str();
  synth->add_option("--burst-start", c.burstStart, "Burst offset (default: centred)");
  synth->add_option("--burst-len", c.burstLength, "Burst length")->capture_default_str();

  auto* profile = app.add_subcommand("jsd-profile", "JSD between adjacent segments along the text");
  common(profile);
  profile->add_option("--segment-length", c.segmentLength, "Segment length L")->required();
  profile->add_option("--step", c.step, "Boundary step (default L/10)");
  profile->add_option("--alphabet", c.alphabet, "with-space or letters-only")->capture_default_str();

  auto* zipf = app.add_subcommand("zipf", "Rank-frequency lexicon and Zipf exponent");
  common(zipf);
  zipf->add_option("--top", c.top, "Rows to print (0 = all)")->capture_default_str();
  zipf->add_option("--fit-range", c.fitRange, "Rank range FIRST:LAST")->capture_default_str();

  auto* bands = app.add_subcommand("bands", "Partition the lexicon into letter-share bands");
  common(bands);
  bands->add_option("--band-count", c.bandCount, "Number of bands")->capture_default_str();
  bands->add_option("--target-share", c.targetShare, "Letter share per band")->capture_default_str();

  auto* bandJsdCmd = app.add_subcommand("band-jsd", "Mean normalized JSD per lexicon band");
  common(bandJsdCmd);
  bandJsdCmd->add_option("--band-count", c.bandCount, "Number of bands")->capture_default_str();
  bandJsdCmd->add_option("--target-share", c.targetShare, "Letter share per band")->capture_default_str();
  bandJsdCmd->add_option("--segment-length", c.segmentLength, "Segment length (default 100000)");

  auto* halves = app.add_subcommand("halves", "Word frequencies in the first vs second half");
  common(halves);
  halves->add_option("--top", c.top, "Rows to print (0 = all)")->capture_default_str();
  halves->add_option("--ratio", c.ratios, "Count ratio WORD/WORD per half (repeatable)")
      ->capture_default_str();
}

void finishConfig(CLI::App& app, RunConfig& c, bool seedGiven) {
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  if (usesSeed(c.subcommand) && !seedGiven) {
    if (const char* env = std::getenv("LRC_SEED")) {
      const std::string text(env);
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), c.seed);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidArgument("LRC_SEED must be an unsigned integer, got '" + text + "'");
      }
    }
  }
  if (c.subcommand == "band-jsd" && c.segmentLength == 0) c.segmentLength = 100'000;
  if (c.subcommand == "jsd-profile" && c.step == 0) c.step = std::max<std::size_t>(1, c.segmentLength / 10);

  // Validate enumerations early so errors surface before any work.
  parseFormat(c.inputFormat);
  if (c.subcommand == "walk") {
    parseLetters(c.letters);
    for (const auto& f : c.fits) parseRange(f, "--fit");
  }
  if (c.subcommand == "shuffle") parseShuffleMode(c.mode);
  if (c.subcommand == "jsd-profile") parseAlphabet(c.alphabet);
  if (c.subcommand == "zipf") parseRange(c.fitRange, "--fit-range");
  if (c.subcommand == "halves") {
    for (const auto& r : c.ratios) parseRatio(r);
  }
}

bool seedOnCommandLine(const std::vector<std::string>& args) {
  return std::any_of(args.begin(), args.end(), [](const std::string& a) {
    return a == "--seed" || a.rfind("--seed=", 0) == 0;
  });
}

void parseInto(CLI::App& app, RunConfig& c, const std::vector<std::string>& args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
  finishConfig(app, c, seedOnCommandLine(args));
}

std::string quote(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t\"\\") == std::string::npos) return arg;
  std::string q = "\"";
  for (char ch : arg) {
    if (ch == '"' || ch == '\\') q.push_back('\\');
    q.push_back(ch);
  }
  return q + "\"";
}

std::string commandLine(const RunConfig& c) {
  std::string line = "lrc";
  for (const auto& a : canonicalArgs(c)) line += " " + quote(a);
  return line;
}

// Output sink: a file or the caller's stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError("cannot open '" + path + "' for writing", 0);
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  bool isFile() const { return path_ != "-"; }
  void close() {
    stream_->flush();
    if (!*stream_) throw IoError("write to '" + path_ + "' failed", 0);
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

struct Context {
  const RunConfig& config;
  std::ostream& out;
  std::ostream& err;

  void log(int level, const std::string& message) const {
    if (config.verbosity >= level) err << "lrc: " << message << '\n';
  }

  NormalizedText load() const {
    log(1, "reading " + config.input);
    auto text = loadText(config.input, parseFormat(config.inputFormat),
                         NormalizeOptions{config.trim});
    log(1, "loaded " + std::to_string(text.size()) + " symbols");
    return text;
  }

  // Tabular output: parameter header first.
  void writeTable(const std::vector<std::string>& headerLines,
                  const std::function<void(std::ostream&)>& body) const {
    Output sink(config.output, out);
    auto& os = sink.stream();
    os << "# command: " << commandLine(config) << '\n';
    for (const auto& h : headerLines) os << "# " << h << '\n';
    body(os);
    sink.close();
  }

  // Symbol-file output: the header goes to a `.params` sidecar so the
  // symbol file stays a pure byte-per-symbol rendering.
  void writeSymbols(const NormalizedText& text,
                    const std::vector<std::string>& headerLines) const {
    Output sink(config.output, out);
    const auto rendered = text.render();
    sink.stream().write(rendered.data(), static_cast<std::streamsize>(rendered.size()));
    sink.close();
    if (sink.isFile()) writeSidecar(headerLines);
  }

  void writeSidecar(const std::vector<std::string>& headerLines) const {
    std::ofstream params(config.output + ".params", std::ios::binary | std::ios::trunc);
    params << "# command: " << commandLine(config) << '\n';
    for (const auto& h : headerLines) params << "# " << h << '\n';
    if (!params) throw IoError("cannot write '" + config.output + ".params'", 0);
  }
};

int runNormalize(const Context& ctx) {
  std::ifstream in(ctx.config.input, std::ios::binary);
  if (!in) throw IoError("cannot open '" + ctx.config.input + "'", 0);
  Output sink(ctx.config.output, ctx.out);
  const auto n = normalizeStream(in, sink.stream(), NormalizeOptions{ctx.config.trim});
  sink.close();
  if (sink.isFile()) ctx.writeSidecar({"symbols=" + std::to_string(n)});
  ctx.log(1, "wrote " + std::to_string(n) + " symbols");
  return 0;
}

int runWalk(const Context& ctx) {
  const auto& c = ctx.config;
  const auto text = ctx.load();
  if (text.empty()) throw InvalidArgument("empty text");
  const auto letters = parseLetters(c.letters);
  const auto grid = defaultKGrid(text.size(), c.pointsPerDecade);

  std::vector<DisplacementCurve> curves;
  std::vector<double> means;
  for (Symbol letter : letters) {
    const auto series = indicator(text, letter);
    ctx.log(1, std::string("letter ") + symbolChar(letter) + ": " +
                   std::to_string(grid.size()) + " window lengths");
    curves.push_back(displacement(series, grid, DisplacementOptions{c.threads}));
    means.push_back(series.mean);
  }
  std::vector<std::string> labels;
  for (Symbol letter : letters) labels.push_back(letter == kSpace ? "space" : std::string(1, symbolChar(letter)));
  if (c.average && curves.size() > 1) {
    curves.push_back(averageCurves(curves));
    labels.push_back("average");
  }

  std::vector<std::string> header{"N=" + std::to_string(text.size()) +
                                  " k_max=" + std::to_string(grid.back()) +
                                  " grid_points=" + std::to_string(grid.size())};
  for (std::size_t i = 0; i < letters.size(); ++i) {
    header.push_back("letter=" + labels[i] + " mean=" + formatDouble(means[i]));
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (const auto& f : c.fits) {
      const auto [lo, hi] = parseRange(f, "--fit");
      const auto fit = fitExponent(curves[i], lo, hi);
      header.push_back("fit letter=" + labels[i] + " kmin=" + std::to_string(lo) +
                       " kmax=" + std::to_string(hi) + " alpha=" + formatDouble(fit.alpha) +
                       " log_intercept=" + formatDouble(fit.logIntercept) +
                       " rms=" + formatDouble(fit.rmsResidual) +
                       " points=" + std::to_string(fit.pointsUsed) +
                       " zero_excluded=" + std::to_string(fit.zeroPointsExcluded));
    }
  }
  ctx.writeTable(header, [&](std::ostream& os) {
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (i > 0) os << "\n\n";
      os << "# block letter=" << labels[i] << '\n' << "k\tF\n";
      for (const auto& p : curves[i].points) os << p.k << '\t' << formatDouble(p.F) << '\n';
    }
  });
  return 0;
}

int runShuffle(const Context& ctx) {
  const auto& c = ctx.config;
  const auto text = ctx.load();
  ShuffleSpec spec{parseShuffleMode(c.mode), c.window, c.seed};
  const auto shuffled = shuffle(text, spec);
  ctx.writeSymbols(shuffled, {"N=" + std::to_string(shuffled.size())});
  return 0;
}

int runSynth(const Context& ctx) {
  const auto& c = ctx.config;
  TwoRegimeSpec spec;
  spec.totalLength = c.length;
  spec.baseP = c.baseP;
  spec.burstP = c.burstP;
  spec.burstStart = c.burstStart;
  spec.burstLength = c.burstLength;
  spec.seed = c.seed;
  const auto text = twoRegimeSequence(spec);
  ctx.writeSymbols(text, {"N=" + std::to_string(text.size()) +
                          " burst_start=" + std::to_string(spec.resolvedBurstStart())});
  return 0;
}

int runJsdProfile(const Context& ctx) {
  const auto& c = ctx.config;
  const auto text = ctx.load();
  const auto profile = jsdProfile(text, c.segmentLength, c.step, parseAlphabet(c.alphabet));

  std::vector<std::size_t> order(profile.entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return profile.entries[a].normalized > profile.entries[b].normalized;
  });
  std::string peaks = "peaks";
  for (std::size_t i = 0; i < std::min<std::size_t>(5, order.size()); ++i) {
    const auto& e = profile.entries[order[i]];
    peaks += " " + std::to_string(e.position) + ":" + formatDouble(e.normalized);
  }
  ctx.writeTable(
      {"N=" + std::to_string(text.size()) + " boundaries=" + std::to_string(profile.entries.size()),
       "mean_normalized=" + formatDouble(profile.meanNormalized()) +
           " fraction_above_1=" + formatDouble(profile.fractionAbove(1.0)),
       peaks},
      [&](std::ostream& os) {
        os << "position\traw\tfluct\tnormalized\n";
        for (const auto& e : profile.entries) {
          os << e.position << '\t' << formatDouble(e.rawJsd) << '\t'
             << formatDouble(e.fluctLevel) << '\t' << formatDouble(e.normalized) << '\n';
        }
      });
  return 0;
}

FrequencyLexicon lexiconOf(const NormalizedText& text) {
  const auto tokens = tokenize(text);
  return buildLexicon(tokens);
}

int runZipf(const Context& ctx) {
  const auto& c = ctx.config;
  const auto text = ctx.load();
  const auto lex = lexiconOf(text);
  const auto [lo, hi] = parseRange(c.fitRange, "--fit-range");
  const auto fit = zipfFit(lex, lo, hi);
  const std::size_t rows = c.top == 0 ? lex.size() : std::min(c.top, lex.size());
  ctx.writeTable(
      {"types=" + std::to_string(lex.size()) + " tokens=" + std::to_string(lex.totalTokens()) +
           " letters=" + std::to_string(lex.totalLetters()),
       "zipf first_rank=" + std::to_string(fit.firstRank) + " last_rank=" +
           std::to_string(fit.lastRank) + " exponent=" + formatDouble(fit.exponent) +
           " rms=" + formatDouble(fit.rmsResidual)},
      [&](std::ostream& os) {
        os << "rank\tword\tcount\tlength\tshare\n";
        for (std::size_t r = 1; r <= rows; ++r) {
          const auto& e = lex.atRank(r);
          os << r << '\t' << e.word << '\t' << e.count << '\t' << e.length << '\t'
             << formatDouble(e.letterShare) << '\n';
        }
      });
  return 0;
}

int runBands(const Context& ctx) {
  const auto& c = ctx.config;
  const auto text = ctx.load();
  const auto lex = lexiconOf(text);
  const auto partition = partitionBands(lex, c.bandCount, c.targetShare);
  ctx.writeTable(
      {"types=" + std::to_string(lex.size()) + " letters=" + std::to_string(lex.totalLetters()) +
       " degenerate=" + (partition.degenerate ? std::string("yes") : std::string("no"))},
      [&](std::ostream& os) {
        os << "band\tfirst_rank\tlast_rank\ttypes\tletters\tshare\n";
        for (std::size_t b = 0; b < partition.bands.size(); ++b) {
          const auto& band = partition.bands[b];
          os << b + 1 << '\t' << band.firstRank << '\t' << band.lastRank << '\t'
             << band.wordTypeCount << '\t' << band.letters << '\t'
             << formatDouble(band.letterShare) << '\n';
        }
      });
  return 0;
}

int runBandJsd(const Context& ctx) {
  const auto& c = ctx.config;
  const auto text = ctx.load();
  const auto lex = lexiconOf(text);
  const auto partition = partitionBands(lex, c.bandCount, c.targetShare);
  const auto report = bandJsd(text, lex, partition, c.segmentLength);
  ctx.writeTable(
      {"N=" + std::to_string(text.size()) + " types=" + std::to_string(lex.size()),
       "max_band=" + std::to_string(report.maxBand() + 1)},
      [&](std::ostream& os) {
        os << "band\ttypes\tmean_normalized\tmean_effective_n\tpairs\n";
        for (std::size_t b = 0; b < report.bands.size(); ++b) {
          const auto& e = report.bands[b];
          os << b + 1 << '\t' << e.wordTypeCount << '\t' << formatDouble(e.meanNormalized)
             << '\t' << formatDouble(e.meanEffectiveN) << '\t' << e.pairs << '\n';
        }
      });
  return 0;
}

int runHalves(const Context& ctx) {
  const auto& c = ctx.config;
  const auto text = ctx.load();
  const auto halves = compareHalves(text);
  std::vector<std::string> header{"split=" + std::to_string(halves.splitPosition) +
                                  " tokens_first=" + std::to_string(halves.tokensFirst) +
                                  " tokens_second=" + std::to_string(halves.tokensSecond)};
  for (const auto& r : c.ratios) {
    const auto [a, b] = parseRatio(r);
    header.push_back("ratio " + r + " first=" + formatDouble(halves.countRatio(a, b, 0)) +
                     " second=" + formatDouble(halves.countRatio(a, b, 1)));
  }
  const std::size_t rows =
      c.top == 0 ? halves.words.size() : std::min(c.top, halves.words.size());
  ctx.writeTable(header, [&](std::ostream& os) {
    os << "word\tcount1\tcount2\tratio\n";
    for (std::size_t i = 0; i < rows; ++i) {
      const auto& w = halves.words[i];
      os << w.word << '\t' << w.first << '\t' << w.second << '\t' << formatDouble(w.ratio) << '\n';
    }
  });
  return 0;
}

}  // namespace

RunConfig parseArgs(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"lrc"};
  buildApp(app, config);
  try {
    parseInto(app, config, args);
  } catch (const CLI::ParseError& e) {
    throw InvalidArgument(e.what());
  }
  return config;
}

std::vector<std::string> canonicalArgs(const RunConfig& c) {
  std::vector<std::string> a{c.subcommand};
  auto add = [&a](std::string flag, std::string value) {
    a.push_back(std::move(flag));
    a.push_back(std::move(value));
  };
  if (needsInput(c.subcommand)) {
    add("--input", c.input);
    add("--format", c.inputFormat);
    if (c.trim) a.push_back("--trim");
  }
  add("--output", c.output);
  if (usesSeed(c.subcommand)) add("--seed", std::to_string(c.seed));

  const auto& s = c.subcommand;
  if (s == "walk") {
    std::string letters;
    for (const auto& l : c.letters) letters += (letters.empty() ? "" : ",") + l;
    add("--letter", letters);
    add("--points-per-decade", std::to_string(c.pointsPerDecade));
    for (const auto& f : c.fits) add("--fit", f);
    if (c.average) a.push_back("--average");
  } else if (s == "shuffle") {
    add("--mode", c.mode);
    add("--window", std::to_string(c.window));
  } else if (s == "synth") {
    add("--length", std::to_string(c.length));
    add("--base-p", exactDouble(c.baseP));
    add("--burst-p", exactDouble(c.burstP));
    if (c.burstStart) add("--burst-start", std::to_string(*c.burstStart));
    add("--burst-len", std::to_string(c.burstLength));
  } else if (s == "jsd-profile") {
    add("--segment-length", std::to_string(c.segmentLength));
    add("--step", std::to_string(c.step));
    add("--alphabet", c.alphabet);
  } else if (s == "zipf") {
    add("--top", std::to_string(c.top));
    add("--fit-range", c.fitRange);
  } else if (s == "bands" || s == "band-jsd") {
    add("--band-count", std::to_string(c.bandCount));
    add("--target-share", exactDouble(c.targetShare));
    if (s == "band-jsd") add("--segment-length", std::to_string(c.segmentLength));
  } else if (s == "halves") {
    add("--top", std::to_string(c.top));
    for (const auto& r : c.ratios) add("--ratio", r);
  }
  return a;
}

std::vector<std::string> splitCommandLine(const std::string& line) {
  std::vector<std::string> words;
  std::string current;
  bool inWord = false, quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '\\' && i + 1 < line.size()) {
        current.push_back(line[++i]);
      } else if (ch == '"') {
        quoted = false;
      } else {
        current.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = inWord = true;
    } else if (ch == ' ' || ch == '\t') {
      if (inWord) words.push_back(std::move(current));
      current.clear();
      inWord = false;
    } else {
      current.push_back(ch);
      inWord = true;
    }
  }
  if (quoted) throw InvalidArgument("unterminated quote in command line");
  if (inWord) words.push_back(std::move(current));
  return words;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Context ctx{config, out, err};
  try {
    const auto& s = config.subcommand;
    if (s == "normalize") return runNormalize(ctx);
    if (s == "walk") return runWalk(ctx);
    if (s == "shuffle") return runShuffle(ctx);
    if (s == "synth") return runSynth(ctx);
    if (s == "jsd-profile") return runJsdProfile(ctx);
    if (s == "zipf") return runZipf(ctx);
    if (s == "bands") return runBands(ctx);
    if (s == "band-jsd") return runBandJsd(ctx);
    if (s == "halves") return runHalves(ctx);
    err << "lrc: error: unknown subcommand '" << s << "'\n";
    return 2;
  } catch (const Error& e) {
    err << "lrc: error: " << e.what() << '\n';
    return 1;
  } catch (const std::bad_alloc&) {
    err << "lrc: error: out of memory\n";
    return 1;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Long-range letter correlation toolkit"};
  app.name("lrc");
  buildApp(app, config);
  try {
    parseInto(app, config, args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const Error& e) {
    err << "lrc: error: " << e.what() << '\n';
    return 2;
  }
  return run(config, out, err);
}

}  // namespace lrc::cli
