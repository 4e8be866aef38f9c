#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "braid/bench.hpp"
#include "braid/garside.hpp"
#include "braid/halftwist.hpp"
#include "braid/random.hpp"
#include "braid/text.hpp"
#include "braid/word.hpp"

namespace braid {

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in, std::ostream& err, bool& ok) {
  ok = true;
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) {
    err << "error: cannot open '" << path << "'\n";
    ok = false;
    return {};
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// "A..B" or a single integer.
inline std::vector<int> parse_power_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  std::vector<int> powers;
  if (dots == std::string::npos) {
    powers.push_back(std::stoi(text));
    return powers;
  }
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty power range");
  for (int p = lo; p <= hi; ++p) powers.push_back(p);
  return powers;
}

}  // namespace detail

// Exit codes: 0 = true, 3 = genuine false, 4 = non-genuine false,
// 2 = usage/parse/I-O error.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"decides whether a braid word is conjugate to a power of a generator,\n"
               "with a verifiable conjugating witness on every positive answer"};
  app.name("halftwist");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  // check
  auto* check = app.add_subcommand("check", "test a braid word, printing a witness when one is found");
  std::optional<int> check_strands;
  std::optional<int> check_power;
  int check_tries = 64;
  std::uint64_t check_seed = 1;
  bool check_square = false;
  std::string check_file;
  check->add_option("--strands", check_strands, "strand count (default: from the word)");
  check->add_option("--power", check_power, "expected power; must match the degree of the word");
  check->add_option("--max-tries", check_tries, "random conjugate restarts before giving up")->check(CLI::PositiveNumber);
  check->add_option("--seed", check_seed, "seed for the restart conjugators");
  check->add_flag("--square", check_square, "test w^2 against the doubled power instead of w");
  check->add_option("file", check_file, "input file ('-' or absent: stdin)");

  // normalize
  auto* norm = app.add_subcommand("normalize", "print the canonical form Delta^-r . P of a word");
  std::optional<int> norm_strands;
  std::string norm_file;
  norm->add_option("--strands", norm_strands, "strand count (default: from the word)");
  norm->add_option("file", norm_file, "input file ('-' or absent: stdin)");

  // gen
  auto* gen = app.add_subcommand("gen", "sample a random half-twist with its ground-truth conjugator");
  int gen_strands = 5;
  int gen_power = 1;
  int gen_conj_len = 10;
  std::uint64_t gen_seed = 1;
  gen->add_option("--strands", gen_strands, "strand count")->check(CLI::Range(2, 1000));
  gen->add_option("--power", gen_power, "power of the sampled half-twist")->check(CLI::PositiveNumber);
  gen->add_option("--conj-len", gen_conj_len, "length of the random conjugator")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "sampling seed");

  // bench
  auto* bench = app.add_subcommand("bench", "reproduce the success-rate experiment, writing a CSV");
  ExperimentConfig bench_cfg;
  std::string bench_powers = "1..2";
  std::string bench_out;
  bench->add_option("--strands", bench_cfg.strands, "strand count")->check(CLI::Range(2, 1000));
  bench->add_option("--powers", bench_powers, "powers to sample, e.g. 2 or 1..5");
  bench->add_option("--samples", bench_cfg.samples_per_power, "samples per power")->check(CLI::NonNegativeNumber);
  bench->add_option("--conj-len-min", bench_cfg.conj_len_min, "smallest conjugator length in the sweep");
  bench->add_option("--conj-len-max", bench_cfg.conj_len_max, "largest conjugator length in the sweep");
  bench->add_option("--bucket-width", bench_cfg.bucket_width, "length bucket width")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_cfg.seed, "master seed; per-trial seeds derive from it");
  bench->add_option("--threads", bench_cfg.threads, "worker threads (CSV output does not depend on this)");
  bench->add_option("--out", bench_out, "output CSV path")->required();

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (check->parsed()) {
      bool ok = false;
      const std::string text = detail::read_input(check_file, in, err, ok);
      if (!ok) return 2;
      const BraidWord word = parse_word(text, check_strands);
      if (check_power && *check_power != degree(word)) {
        // degree is a conjugacy invariant, so a mismatch settles the question
        out << "false genuine reason=DegreeMismatch\n";
        return 3;
      }
      const TrialConfig config{check_tries, check_seed, check_square};
      const CheckOutcome outcome = test_random_half_twist(word, config);
      switch (outcome.kind()) {
        case CheckOutcome::Kind::True: {
          const HalfTwistWitness& witness = outcome.witness();
          out << "true c=" << witness.generator << " k=" << witness.power << " q="
              << format_letters(witness.conjugator) << "\n";
          if (check_square)
            out << "# square mode: the witness certifies w^2; evidence for w itself, not proof\n";
          return 0;
        }
        case CheckOutcome::Kind::GenuineFalse:
          out << "false genuine reason=" << to_string(outcome.reason()) << "\n";
          if (check_square) out << "# square mode: this verdict is about w^2 only\n";
          return 3;
        case CheckOutcome::Kind::False:
          out << "false tries=" << outcome.tries() << "\n";
          if (check_square)
            out << "# square mode: a false for w^2 also means w is not a half-twist in any power\n";
          return 4;
      }
    }

    if (norm->parsed()) {
      bool ok = false;
      const std::string text = detail::read_input(norm_file, in, err, ok);
      if (!ok) return 2;
      const NormalForm nf = normalize(parse_word(text, norm_strands));
      out << "r=" << nf.r << "\n" << format_word(nf.positive.to_braid_word());
      return 0;
    }

    if (gen->parsed()) {
      RandomSource rng(gen_seed);
      const auto [word, witness] = sample_half_twist(gen_strands, gen_power, gen_conj_len, rng);
      out << format_word(word);
      out << "# c=" << witness.generator << " k=" << witness.power << "\n";
      out << "# q=" << format_letters(witness.conjugator) << "\n";
      return 0;
    }

    if (bench->parsed()) {
      bench_cfg.powers = detail::parse_power_range(bench_powers);
      if (bench_cfg.threads < 1) bench_cfg.threads = static_cast<int>(std::thread::hardware_concurrency());
      const ExperimentTable table = run_experiment(bench_cfg);
      std::ofstream file(bench_out);
      if (!file) {
        err << "error: cannot write '" << bench_out << "'\n";
        return 2;
      }
      write_csv(table, file);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace braid
