// arnold — complexity of length-2^n binary words.
//
// Subcommands: complexity, plan, scheme, parities, synth, shannon, verify,
// bench. Exit codes: 0 success, 1 usage, 2 verification failure, 3 input
// error. Output is buffered per command so an input error never leaves
// partial output behind.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arnold/bench.hpp"
#include "arnold/engines.hpp"
#include "arnold/planner.hpp"
#include "arnold/thinning.hpp"
#include "arnold/verify.hpp"
#include "arnold/word.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitInput = 3;

struct GlobalOpts {
  bool json = false;
  bool timing = false;
  uint64_t seed = 1;
};

class Timer {
 public:
  uint64_t elapsed_ns() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Emits one record: JSON on --json, otherwise the prepared text. --timing
// appends the elapsed time (timings are the one intentionally
// non-reproducible field, so they stay opt-in).
void emit(const GlobalOpts& g, const Timer& timer, ordered_json& record,
          const std::string& text) {
  if (g.json) {
    if (g.timing) record["elapsed_ns"] = timer.elapsed_ns();
    std::cout << record.dump(2) << "\n";
  } else {
    std::cout << text;
    if (g.timing) {
      std::cout << "elapsed: " << timer.elapsed_ns() << " ns\n";
    }
  }
}

std::vector<std::string> read_words_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw arnold::parse_error("cannot open words file: " + path);
  }
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    tokens.push_back(line.substr(begin, end - begin + 1));
  }
  return tokens;
}

struct ComplexityArgs {
  std::string input;
  std::string file;
  std::string engine = "fast";
  bool cert = false;
  bool cross_check = false;
};

int run_complexity(const GlobalOpts& g, const ComplexityArgs& args) {
  Timer timer;
  std::vector<std::string> tokens;
  if (!args.input.empty()) {
    tokens.push_back(args.input);
  } else {
    tokens = read_words_file(args.file);
  }
  std::vector<arnold::PeriodicWord> words;
  words.reserve(tokens.size());
  for (const auto& t : tokens) words.push_back(arnold::PeriodicWord::parse(t));

  const bool file_mode = args.input.empty();
  std::ostringstream text;
  ordered_json record;
  record["command"] = "complexity";
  record["engine"] = args.engine;
  record["inputs"] = tokens;
  record["results"] = ordered_json::array();

  bool mismatch = false;
  std::ostringstream mismatch_report;
  for (size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    const arnold::FastResult fast =
        (args.engine == "fast" || args.cert || args.cross_check)
            ? arnold::complexity_fast(w)
            : arnold::FastResult{};
    uint64_t value;
    if (args.engine == "naive" || args.cross_check) {
      const uint64_t naive = arnold::complexity_naive_count(w);
      if (args.cross_check && naive != fast.complexity) {
        mismatch = true;
        mismatch_report << "cross-check mismatch: word=" << tokens[i]
                        << " naive=" << naive << " fast=" << fast.complexity
                        << "\n";
      }
      value = args.engine == "naive" ? naive : fast.complexity;
    } else {
      value = fast.complexity;
    }

    if (file_mode) text << tokens[i] << " ";
    text << "A=" << value;
    ordered_json entry;
    entry["word"] = tokens[i];
    entry["complexity"] = value;
    if (args.cert) {
      text << " ranks=[";
      for (size_t r = 0; r < fast.cert.ranks.size(); ++r) {
        text << (r ? "," : "") << fast.cert.ranks[r];
      }
      text << "] final=" << fast.cert.final_complexity;
      entry["certificate"] = {{"ranks", fast.cert.ranks},
                              {"final_complexity", fast.cert.final_complexity},
                              {"total", fast.cert.total}};
    }
    text << "\n";
    record["results"].push_back(entry);
  }

  emit(g, timer, record, text.str());
  if (mismatch) {
    std::cerr << mismatch_report.str();
    return kExitVerification;
  }
  return kExitOk;
}

struct PlanArgs {
  uint64_t value = 0;
  int bits = 0;
  bool bfs = false;
};

int run_plan(const GlobalOpts& g, const PlanArgs& args) {
  Timer timer;
  const arnold::Plan plan = arnold::plan_ranks(args.value, args.bits);
  const auto width_binary = [&](uint64_t v) {
    return arnold::ComplexityValue::analyze(v, args.bits).binary();
  };

  std::ostringstream text;
  ordered_json record;
  record["command"] = "plan";
  record["inputs"] = {{"value", args.value}, {"bits", args.bits}};
  text << "value: " << args.value << " (" << width_binary(args.value) << ")\n";
  text << "subcase: " << arnold::to_string(plan.subcase) << "\n";
  text << "ranks: [";
  for (size_t i = 0; i < plan.ranks.size(); ++i) {
    text << (i ? "," : "") << plan.ranks[i];
  }
  text << "]\n";

  ordered_json steps = ordered_json::array();
  uint64_t cur = args.value;
  for (size_t i = 0; i < plan.ranks.size(); ++i) {
    const int k = std::countr_zero(plan.ranks[i]);
    cur = arnold::value_step(cur, k, args.bits).result;
    text << "step " << (i + 1) << ": rank " << plan.ranks[i] << " -> " << cur
         << " (" << width_binary(cur) << ")\n";
    steps.push_back({{"rank", plan.ranks[i]},
                     {"value", cur},
                     {"binary", width_binary(cur)}});
  }
  text << "final: " << plan.final_value << " ("
       << width_binary(plan.final_value) << ")\n";
  text << "ops: " << plan.count << "\n";

  record["results"] = {{"subcase", arnold::to_string(plan.subcase)},
                       {"ranks", plan.ranks},
                       {"count", plan.count},
                       {"steps", steps},
                       {"final_value", plan.final_value},
                       {"final_binary", width_binary(plan.final_value)}};
  if (args.bfs) {
    const int oracle = arnold::bfs_min_ops(args.value, args.bits);
    text << "bfs: " << oracle << "\n";
    record["results"]["bfs"] = oracle;
  }
  emit(g, timer, record, text.str());
  return kExitOk;
}

struct SchemeArgs {
  std::string input;
  std::vector<uint64_t> ranks;
};

int run_scheme(const GlobalOpts& g, const SchemeArgs& args) {
  Timer timer;
  const auto w = arnold::PeriodicWord::parse(args.input);
  const arnold::SchemeTrace trace = arnold::run_scheme(w, args.ranks);

  std::ostringstream text;
  ordered_json record;
  record["command"] = "scheme";
  record["inputs"] = {{"word", args.input}, {"ranks", args.ranks}};
  text << "start: " << w.to_binary_string() << "\n";
  ordered_json steps = ordered_json::array();
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    text << "step " << (i + 1) << ": rank " << step.rank << " -> "
         << step.result.to_binary_string() << "\n";
    steps.push_back({{"rank", step.rank},
                     {"word", step.result.to_binary_string()}});
  }
  ordered_json terminal;
  if (trace.terminal_zero) {
    text << "terminal: zero\n";
    terminal["kind"] = "zero";
  } else if (trace.terminal_final) {
    text << "terminal: final level=" << trace.terminal_final->level
         << " complexity=" << trace.terminal_final->complexity << "\n";
    terminal["kind"] = "final";
    terminal["level"] = trace.terminal_final->level;
    terminal["complexity"] = trace.terminal_final->complexity;
  } else {
    text << "terminal: nonfinal\n";
    terminal["kind"] = "nonfinal";
  }
  record["results"] = {{"steps", steps}, {"terminal", terminal}};
  emit(g, timer, record, text.str());
  return kExitOk;
}

int run_parities(const GlobalOpts& g, const std::string& input) {
  Timer timer;
  const auto w = arnold::PeriodicWord::parse(input);
  const arnold::ParityTree tree = arnold::parity_tree(w);

  std::ostringstream text;
  ordered_json record;
  record["command"] = "parities";
  record["inputs"] = {{"word", input}};
  ordered_json levels = ordered_json::array();
  for (int m = 0; m <= tree.n; ++m) {
    for (size_t i = 0; i < tree.levels[m].size(); ++i) {
      text << (i ? " " : "") << int(tree.levels[m][i]);
    }
    text << "\n";
    levels.push_back(tree.levels[m]);
  }
  record["results"] = {{"levels", levels}, {"xor_count", tree.xor_count}};
  emit(g, timer, record, text.str());
  return kExitOk;
}

struct SynthArgs {
  int bits = 0;
  uint64_t complexity = 0;
};

int run_synth(const GlobalOpts& g, const SynthArgs& args) {
  Timer timer;
  const auto w = arnold::synthesize_word(args.bits, args.complexity, g.seed);
  std::ostringstream text;
  text << w.to_binary_string() << "\n";
  ordered_json record;
  record["command"] = "synth";
  record["inputs"] = {{"bits", args.bits},
                      {"complexity", args.complexity},
                      {"seed", g.seed}};
  record["results"] = {{"word", w.to_binary_string()}};
  emit(g, timer, record, text.str());
  return kExitOk;
}

struct ShannonArgs {
  int min_n = 1;
  int max_n = 14;
  bool validate = false;
};

int run_shannon(const GlobalOpts& g, const ShannonArgs& args) {
  Timer timer;
  if (args.min_n < 1 || args.min_n > args.max_n || args.max_n > 16) {
    throw std::domain_error("shannon range must satisfy 1 <= min <= max <= 16");
  }
  std::ostringstream text;
  text << "   n  max_odd  bound_odd  max_even  bound_even  formula==bfs\n";
  ordered_json record;
  record["command"] = "shannon";
  record["inputs"] = {{"min_n", args.min_n}, {"max_n", args.max_n}};
  ordered_json rows = ordered_json::array();
  bool violation = false;
  for (int n = args.min_n; n <= args.max_n; ++n) {
    const arnold::ShannonRow row = arnold::shannon_exhaustive(n);
    const bool within =
        row.max_odd <= row.bound_odd && row.max_even <= row.bound_even;
    if (!within || !row.formula_matches_bfs) violation = true;
    text << std::setw(4) << n << "  " << std::setw(7) << row.max_odd << "  "
         << std::setw(9) << row.bound_odd << "  " << std::setw(8)
         << row.max_even << "  " << std::setw(10) << row.bound_even << "  "
         << (row.formula_matches_bfs ? "ok" : "MISMATCH")
         << (within ? "" : "  BOUND-VIOLATION") << "\n";
    rows.push_back({{"n", n},
                    {"max_odd", row.max_odd},
                    {"witness_odd", row.witness_odd},
                    {"bound_odd", row.bound_odd},
                    {"max_even", row.max_even},
                    {"witness_even", row.witness_even},
                    {"bound_even", row.bound_even},
                    {"formula_matches_bfs", row.formula_matches_bfs},
                    {"within_bounds", within}});
  }
  record["results"] = {{"rows", rows}};
  emit(g, timer, record, text.str());
  if (args.validate && violation) return kExitVerification;
  return kExitOk;
}

struct VerifyArgs {
  std::string level = "quick";
  bool inject_fault = false;
};

int run_verify(const GlobalOpts& g, const VerifyArgs& args) {
  Timer timer;
  arnold::VerifyOptions opts;
  opts.level = args.level == "full" ? arnold::VerifyOptions::Level::full
                                    : arnold::VerifyOptions::Level::quick;
  opts.seed = g.seed;
  opts.inject_fault = args.inject_fault;
  const arnold::VerifyReport report = arnold::run_verification(opts);

  std::ostringstream text;
  ordered_json record;
  record["command"] = "verify";
  record["inputs"] = {{"level", args.level}, {"seed", g.seed}};
  ordered_json props = ordered_json::array();
  size_t failed = 0;
  for (const auto& p : report.properties) {
    if (p.pass) {
      text << "ok   " << std::left << std::setw(28) << p.name << " "
           << p.details << "\n";
    } else {
      ++failed;
      text << "FAIL " << std::left << std::setw(28) << p.name << " "
           << p.details << "\n";
    }
    props.push_back({{"name", p.name}, {"pass", p.pass}, {"details", p.details}});
  }
  for (const auto& note : report.notes) text << note << "\n";
  if (failed == 0) {
    text << "all " << report.properties.size() << " properties hold\n";
  } else {
    text << failed << " of " << report.properties.size()
         << " properties FAILED\n";
  }
  record["results"] = {{"properties", props},
                       {"notes", report.notes},
                       {"all_pass", failed == 0}};
  emit(g, timer, record, text.str());
  return failed == 0 ? kExitOk : kExitVerification;
}

struct BenchArgs {
  int bits = 14;
  uint64_t samples = 100;
};

int run_bench_cmd(const GlobalOpts& g, const BenchArgs& args) {
  Timer timer;
  const arnold::BenchResult res =
      arnold::run_bench(args.bits, args.samples, g.seed);
  std::ostringstream text;
  text << "n=" << res.n << " samples=" << res.samples << "\n";
  text << "naive median: " << res.naive_median_ns << " ns\n";
  text << "fast median: " << res.fast_median_ns << " ns\n";
  text << "speedup: " << std::fixed << std::setprecision(1) << res.speedup
       << "x\n";
  ordered_json record;
  record["command"] = "bench";
  record["inputs"] = {{"bits", args.bits},
                      {"samples", args.samples},
                      {"seed", g.seed}};
  record["results"] = {{"naive_median_ns", res.naive_median_ns},
                       {"fast_median_ns", res.fast_median_ns},
                       {"speedup", res.speedup}};
  emit(g, timer, record, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complexity of length-2^n binary words"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit a JSON record instead of text");
  app.add_flag("--timing", g.timing, "append elapsed wall time to the output");
  app.add_option("--seed", g.seed, "seed for all randomized commands");

  ComplexityArgs complexity_args;
  auto* complexity_cmd =
      app.add_subcommand("complexity", "complexity of one word or a file");
  auto* source = complexity_cmd->add_option_group("source");
  source->add_option("--input", complexity_args.input,
                     "word literal, 0b... or 0x...");
  source->add_option("--file", complexity_args.file,
                     "words file: one token per line, # comments");
  source->require_option(1);
  complexity_cmd
      ->add_option("--engine", complexity_args.engine, "fast or naive")
      ->check(CLI::IsMember({"fast", "naive"}));
  complexity_cmd->add_flag("--cert", complexity_args.cert,
                           "print the descent certificate");
  complexity_cmd->add_flag("--cross-check", complexity_args.cross_check,
                           "run both engines; exit 2 on disagreement");

  PlanArgs plan_args;
  auto* plan_cmd =
      app.add_subcommand("plan", "minimal rank plan down to a final value");
  plan_cmd->add_option("--value", plan_args.value, "complexity value")
      ->required();
  plan_cmd->add_option("--bits", plan_args.bits, "bit width n")->required();
  plan_cmd->add_flag("--bfs", plan_args.bfs, "append the BFS oracle count");

  SchemeArgs scheme_args;
  auto* scheme_cmd = app.add_subcommand("scheme", "replay a rank sequence");
  scheme_cmd->add_option("--input", scheme_args.input, "start word")
      ->required();
  scheme_cmd
      ->add_option("--ranks", scheme_args.ranks, "comma-separated ranks")
      ->required()
      ->delimiter(',');

  std::string parities_input;
  auto* parities_cmd =
      app.add_subcommand("parities", "parity tree of a word, top-down");
  parities_cmd->add_option("--input", parities_input, "word literal")
      ->required();

  SynthArgs synth_args;
  auto* synth_cmd =
      app.add_subcommand("synth", "synthesize a word of given complexity");
  synth_cmd->add_option("--bits", synth_args.bits, "log2 of the length")
      ->required();
  synth_cmd
      ->add_option("--complexity", synth_args.complexity, "target complexity")
      ->required();

  ShannonArgs shannon_args;
  auto* shannon_cmd = app.add_subcommand(
      "shannon", "exhaustive transformation maxima vs the bounds");
  shannon_cmd->add_option("--min-n", shannon_args.min_n, "first width");
  shannon_cmd->add_option("--max-n", shannon_args.max_n, "last width");
  shannon_cmd->add_flag("--validate", shannon_args.validate,
                        "exit 2 on any bound violation or formula mismatch");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the property battery");
  verify_cmd->add_option("--level", verify_args.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd
      ->add_flag("--inject-fault", verify_args.inject_fault,
                 "self-test: force one oracle mismatch")
      ->group("");

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "naive vs fast engine timings");
  bench_cmd->add_option("--bits", bench_args.bits, "log2 of the word length");
  bench_cmd->add_option("--samples", bench_args.samples, "word count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*complexity_cmd) return run_complexity(g, complexity_args);
    if (*plan_cmd) return run_plan(g, plan_args);
    if (*scheme_cmd) return run_scheme(g, scheme_args);
    if (*parities_cmd) return run_parities(g, parities_input);
    if (*synth_cmd) return run_synth(g, synth_args);
    if (*shannon_cmd) return run_shannon(g, shannon_args);
    if (*verify_cmd) return run_verify(g, verify_args);
    if (*bench_cmd) return run_bench_cmd(g, bench_args);
  } catch (const arnold::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
