#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "braid/halftwist.hpp"
#include "braid/random.hpp"

namespace braid {

struct ExperimentConfig {
  int strands = 5;
  std::vector<int> powers = {1, 2};
  int samples_per_power = 200;
  int conj_len_min = 0;
  int conj_len_max = 25;
  int bucket_width = 100;
  std::uint64_t seed = 1;
  int threads = 1;  // the CSV does not depend on this
};

struct ExperimentRow {
  int strands = 0;
  int power = 0;
  int length_bucket = 0;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
};

struct ExperimentTable {
  std::vector<ExperimentRow> rows;        // sorted by (power, length_bucket)
  std::int64_t genuine_falses = 0;        // must stay 0 on sampled half-twists
};

// Draws a random half-twist q^{-1} sigma_i^k q (i uniform, q of the requested
// length), returns its expanded normal form together with the witness that
// certifies it.
inline std::pair<BraidWord, HalfTwistWitness> sample_half_twist(int n, int k, int conj_len, RandomSource& rng) {
  if (n < 2) throw std::invalid_argument("sample_half_twist: need n >= 2");
  if (k < 1) throw std::invalid_argument("sample_half_twist: need k >= 1");
  const int i = rng.uniform_int(1, n - 1);
  const BraidWord q = random_word(n, conj_len, rng);
  const BraidWord word = expand_to_word(normalize(conjugate(generator_power(n, i, k), q)));
  return {word, HalfTwistWitness{i, k, inverse(q)}};
}

// Samples half-twists, runs the single-shot check once per sample, and
// tabulates success counts per (power, normal-form length bucket). Buckets are
// labelled by their upper edge: lengths 1..width fall into bucket `width`.
// Per-trial seeds are mix_seed(seed, power, sample index), so trials can run on
// any number of threads with identical results; conjugator lengths sweep the
// configured range to populate several buckets.
inline ExperimentTable run_experiment(const ExperimentConfig& cfg) {
  if (cfg.strands < 2) throw std::invalid_argument("run_experiment: need strands >= 2");
  if (cfg.samples_per_power < 0) throw std::invalid_argument("run_experiment: negative sample count");
  if (cfg.bucket_width < 1) throw std::invalid_argument("run_experiment: bucket width must be >= 1");
  if (cfg.conj_len_min < 0 || cfg.conj_len_max < cfg.conj_len_min)
    throw std::invalid_argument("run_experiment: bad conjugator length range");
  for (int p : cfg.powers)
    if (p < 1) throw std::invalid_argument("run_experiment: powers must be >= 1");

  struct Trial {
    int power;
    int conj_len;
    std::uint64_t seed;
  };
  std::vector<Trial> trials;
  trials.reserve(cfg.powers.size() * static_cast<std::size_t>(cfg.samples_per_power));
  const int span = cfg.conj_len_max - cfg.conj_len_min + 1;
  for (int power : cfg.powers)
    for (int s = 0; s < cfg.samples_per_power; ++s)
      trials.push_back({power, cfg.conj_len_min + s % span,
                        mix_seed(cfg.seed, static_cast<std::uint64_t>(power), static_cast<std::uint64_t>(s))});

  struct Result {
    int power = 0;
    int bucket = 0;
    bool success = false;
    bool genuine_false = false;
  };
  std::vector<Result> results(trials.size());

  auto run_range = [&](std::size_t from, std::size_t to) {
    for (std::size_t idx = from; idx < to; ++idx) {
      const Trial& tr = trials[idx];
      RandomSource rng(tr.seed);
      const auto [word, truth] = sample_half_twist(cfg.strands, tr.power, tr.conj_len, rng);
      const std::size_t len = word.size();
      const int bucket =
          static_cast<int>((len + static_cast<std::size_t>(cfg.bucket_width) - 1) /
                           static_cast<std::size_t>(cfg.bucket_width)) *
          cfg.bucket_width;
      const CheckOutcome outcome = is_half_twist(word, tr.power);
      results[idx] = {tr.power, bucket, outcome.is_true(), outcome.is_genuine_false()};
    }
  };

  const int threads = cfg.threads < 1 ? 1 : cfg.threads;
  if (threads == 1 || trials.size() < 2) {
    run_range(0, trials.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (trials.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
    for (std::size_t from = 0; from < trials.size(); from += chunk) {
      const std::size_t to = std::min(trials.size(), from + chunk);
      pool.emplace_back(run_range, from, to);
    }
    for (std::thread& t : pool) t.join();
  }

  std::map<std::pair<int, int>, std::pair<std::int64_t, std::int64_t>> cells;
  std::int64_t gf = 0;
  for (const Result& r : results) {
    auto& cell = cells[{r.power, r.bucket}];
    cell.first += 1;
    cell.second += r.success ? 1 : 0;
    gf += r.genuine_false ? 1 : 0;
  }

  ExperimentTable table;
  table.genuine_falses = gf;
  for (const auto& [key, counts] : cells)
    table.rows.push_back({cfg.strands, key.first, key.second, counts.first, counts.second});
  return table;
}

inline void write_csv(const ExperimentTable& table, std::ostream& os) {
  os << "strands,power,length_bucket,trials,successes,rate\n";
  char rate[16];
  for (const ExperimentRow& row : table.rows) {
    std::snprintf(rate, sizeof rate, "%.3f", row.rate());
    os << row.strands << ',' << row.power << ',' << row.length_bucket << ',' << row.trials << ','
       << row.successes << ',' << rate << '\n';
  }
}

inline std::string to_csv(const ExperimentTable& table) {
  std::ostringstream os;
  write_csv(table, os);
  return os.str();
}

}  // namespace braid
