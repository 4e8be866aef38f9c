#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "braid/garside.hpp"
#include "braid/halftwist.hpp"
#include "braid/word.hpp"

namespace braid {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stable combination of a master seed with stream labels, e.g. one derived
// seed per benchmark trial.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  return splitmix64(splitmix64(splitmix64(a) ^ b) ^ c);
}

// Seeded random stream. mt19937_64 output is fixed by the standard, and the
// bounded draw below uses plain rejection, so identical seeds give identical
// letter streams on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RandomSource: bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    while (true) {
      const std::uint64_t v = next();
      if (v < limit) return v % bound;
    }
  }

  int uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("RandomSource: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// length i.i.d. letters; index uniform on 1..n-1, then sign uniform on {+1,-1}.
inline BraidWord random_word(int n, int length, RandomSource& rng) {
  if (length < 0) throw std::invalid_argument("random_word: negative length");
  if (n < 2 && length > 0) throw std::invalid_argument("random_word: need n >= 2 to draw letters");
  BraidWord w(n);
  for (int i = 0; i < length; ++i) {
    const int index = rng.uniform_int(1, n - 1);
    const int sign = rng.uniform_int(0, 1) == 0 ? +1 : -1;
    w.push_back(Letter{index, sign});
  }
  return w;
}

struct TrialConfig {
  int max_tries = 64;
  std::uint64_t seed = 1;
  bool square_mode = false;
};

// Monte Carlo driver. The first try tests the normal form of w itself; each
// later try conjugates w by a fresh random word of the same length and tests
// the normal form of the result. A True witness is composed back so that it
// certifies the word that was passed in (for square mode: w^2). GenuineFalse
// is returned immediately; exhausting max_tries yields a plain (non-genuine)
// False.
//
// k = deg(w) is the only power a conjugate of sigma_i^k can have. k = 0 is
// settled by the word problem, negative k by running on the inverse word:
// q^{-1} w^{-1} q = sigma_c^{-k} inverts to q^{-1} w q = sigma_c^{k}.
inline CheckOutcome test_random_half_twist(const BraidWord& w, const TrialConfig& config = {}) {
  if (config.max_tries < 1) throw std::invalid_argument("test_random_half_twist: max_tries must be >= 1");
  const int n = w.strands();

  BraidWord work = config.square_mode ? concat(w, w) : w;
  int k = degree(work);

  if (k == 0) {
    if (is_identity(work)) return CheckOutcome::truth({1, 0, BraidWord(n)});
    return CheckOutcome::genuine_false(FalseReason::ZeroDegreeNonIdentity);
  }

  const bool inverted = k < 0;
  if (inverted) {
    work = inverse(work);
    k = -k;
  }

  RandomSource rng(config.seed);
  const int length = static_cast<int>(work.size());

  for (int attempt = 1; attempt <= config.max_tries; ++attempt) {
    BraidWord r(n);
    if (attempt > 1) r = random_word(n, length, rng);
    const BraidWord subject = attempt == 1 ? work : conjugate(work, r);
    const CheckOutcome inner = is_half_twist(expand_to_word(normalize(subject)), k);
    if (inner.is_true()) {
      const HalfTwistWitness& found = inner.witness();
      const BraidWord q = attempt == 1 ? found.conjugator : concat(r, found.conjugator);
      return CheckOutcome::truth({found.generator, inverted ? -k : k, q}, attempt);
    }
    if (inner.is_genuine_false()) return CheckOutcome::genuine_false(inner.reason(), attempt);
  }
  return CheckOutcome::unknown_false(config.max_tries);
}

}  // namespace braid
