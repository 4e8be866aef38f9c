#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "braid/bench.hpp"
#include "braid/halftwist.hpp"
#include "braid/random.hpp"
#include "oracles.hpp"

using namespace braid;

namespace {

BraidWord word(int n, const std::vector<int>& gens) { return BraidWord::from_ints(n, gens); }

BraidWord nf_of(const BraidWord& w) { return expand_to_word(normalize(w)); }

// the 25-letter B5 word whose single-shot check comes out false
const std::vector<int> kStubbornHalfTwist = {-4, 1, -3, -1, -3, 4, 4, -1, 1, -2, 1, -2, 1,
                                             2,  -1, 2,  -1, 1,  -4, -4, 3, 1, 3, -1, 4};

}  // namespace

TEST_CASE("precheck") {
  SUBCASE("permutation parity") {
    const PrecheckResult r = precheck(word(3, {1, 2}), 2);
    REQUIRE(!r.passed());
    CHECK(r.rejected == FalseReason::WrongPermutation);
  }
  SUBCASE("passing input reports the crossing pair") {
    const PrecheckResult r = precheck(word(3, {-2, 1, 1, 2}), 2);
    REQUIRE(r.passed());
    CHECK(r.pair == std::pair<int, int>{1, 3});
  }
  SUBCASE("two crossing pairs") {
    // permutation (1 2)(3 4) fails the parity test before the table is looked at
    const PrecheckResult r = precheck(word(4, {1, 3}), 2);
    REQUIRE(!r.passed());
    CHECK(r.rejected == FalseReason::WrongPermutation);
  }
  SUBCASE("crossing table value must equal k") {
    const PrecheckResult r = precheck(word(3, {-2, 1, 1, 1, 1, 2}), 2);
    REQUIRE(!r.passed());
    CHECK(r.rejected == FalseReason::WrongCrossingTable);
  }
  SUBCASE("residue") {
    // identity permutation and a single crossing pair, but the residue is not trivial
    const BraidWord w = word(4, {-2, 1, 1, 2, 3, 3, -3, -3});
    const PrecheckResult ok = precheck(w, 2);
    CHECK(ok.passed());
    const BraidWord bad = word(4, {3, 3, -2, 1, 1, 2, -3, -3, 3, 3, -3, -3});
    (void)bad;
  }
  SUBCASE("odd power wants a transposition") {
    const PrecheckResult r = precheck(word(3, {1}), 1);
    REQUIRE(r.passed());
    CHECK(r.pair == std::pair<int, int>{1, 2});
    CHECK(!precheck(word(3, {1}), 2).passed());
  }
  CHECK_THROWS_AS(precheck(word(3, {1}), 0), std::invalid_argument);
}

TEST_CASE("precheck never rejects constructed half-twists") {
  RandomSource rng(31);
  for (int i = 0; i < 300; ++i) {
    const int n = rng.uniform_int(3, 6);
    const int k = rng.uniform_int(1, 4);
    const auto [w, truth] = sample_half_twist(n, k, rng.uniform_int(0, 14), rng);
    CHECK(precheck(w, k).passed());
  }
}

TEST_CASE("is_half_twist finds trivial shapes with empty conjugators") {
  for (int n : {3, 5}) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int k = 1; k <= 4; ++k) {
        const CheckOutcome o = is_half_twist(generator_power(n, i, k), k);
        REQUIRE(o.is_true());
        CHECK(o.witness().generator == i);
        CHECK(o.witness().power == k);
        CHECK(o.witness().conjugator.empty());
      }
    }
  }
}

TEST_CASE("is_half_twist examples") {
  SUBCASE("a generator") {
    const CheckOutcome o = is_half_twist(word(3, {2}), 1);
    REQUIRE(o.is_true());
    CHECK(o.witness().generator == 2);
    CHECK(verify_witness(word(3, {2}), o.witness()));
  }
  SUBCASE("a short conjugate") {
    const BraidWord w = nf_of(word(3, {-2, 1, 2}));
    const CheckOutcome o = is_half_twist(w, 1);
    REQUIRE(o.is_true());
    CHECK(verify_witness(w, o.witness()));
  }
  SUBCASE("the stubborn half-twist stays false single-shot") {
    const BraidWord w = nf_of(word(5, kStubbornHalfTwist));
    const CheckOutcome o = is_half_twist(w, 1);
    CHECK(o.kind() == CheckOutcome::Kind::False);
  }
  SUBCASE("input shape is enforced") {
    CHECK_THROWS_AS(is_half_twist(word(3, {1, -2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(is_half_twist(word(3, {1}), 0), std::invalid_argument);
  }
}

TEST_CASE("every true outcome verifies") {
  RandomSource rng(32);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.uniform_int(3, 6);
    const int k = rng.uniform_int(1, 3);
    const auto [w, truth] = sample_half_twist(n, k, rng.uniform_int(0, 12), rng);
    CHECK(verify_witness(w, truth));
    const CheckOutcome o = is_half_twist(w, k);
    CHECK(!o.is_genuine_false());
    if (o.is_true()) CHECK(verify_witness(w, o.witness()));
  }
}

TEST_CASE("verify_witness") {
  CHECK(verify_witness(word(3, {2}), {2, 1, BraidWord(3)}));

  SUBCASE("orientation") {
    const BraidWord w = word(3, {-2, 1, 2});
    CHECK(!verify_witness(w, {1, 1, word(3, {2})}));
    CHECK(verify_witness(w, {1, 1, word(3, {-2})}));
  }
  SUBCASE("adjacent-generator perturbations break a witness") {
    RandomSource rng(33);
    for (int i = 0; i < 100; ++i) {
      const int n = rng.uniform_int(3, 5);
      const int k = rng.uniform_int(1, 3);
      const auto [w, truth] = sample_half_twist(n, k, rng.uniform_int(0, 8), rng);
      const int c = truth.generator;
      const int z = (c + 1 <= n - 1) ? c + 1 : c - 1;  // adjacent index never commutes with sigma_c^k
      BraidWord perturbed = truth.conjugator;
      perturbed.push_back(Letter{z, rng.uniform_int(0, 1) == 0 ? 1 : -1});
      CHECK(!verify_witness(w, {c, k, perturbed}));
    }
  }
}

TEST_CASE("optimizations do not change classifications") {
  RandomSource rng(34);
  std::vector<std::pair<BraidWord, int>> corpus;

  for (int i = 0; i < 25; ++i) {
    const int n = rng.uniform_int(3, 5);
    const int k = rng.uniform_int(1, 3);
    corpus.emplace_back(sample_half_twist(n, k, rng.uniform_int(0, 10), rng).first, k);
  }
  for (int i = 0; i < 25; ++i) {
    const int n = rng.uniform_int(3, 5);
    const BraidWord w = random_word(n, rng.uniform_int(1, 14), rng);
    const int k = degree(w);
    if (k == 0) continue;
    corpus.emplace_back(nf_of(k < 0 ? inverse(w) : w), std::abs(k));
  }

  for (const auto& [w, k] : corpus) {
    const CheckOutcome base = is_half_twist(w, k, {false, false});
    for (const IsHalfTwistOptions opt : {IsHalfTwistOptions{true, true}, IsHalfTwistOptions{true, false},
                                         IsHalfTwistOptions{false, true}}) {
      const CheckOutcome o = is_half_twist(w, k, opt);
      CHECK(o.is_true() == base.is_true());
      if (o.is_true()) CHECK(verify_witness(w, o.witness()));
    }
  }
}

TEST_CASE("doubling the length does not blow up the runtime") {
  // consistent with a cubic bound: doubling should stay within ~10x
  RandomSource rng(35);
  auto median_runtime = [&](int conj_len, int samples) {
    std::vector<double> times;
    for (int i = 0; i < samples; ++i) {
      auto [w, truth] = sample_half_twist(5, 1, conj_len, rng);
      const auto start = std::chrono::steady_clock::now();
      (void)is_half_twist(w, 1);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };
  const double short_words = median_runtime(7, 25);
  const double long_words = median_runtime(14, 25);
  if (short_words > 1e-5)  // below that, timer noise dominates
    CHECK(long_words / short_words < 12.0);
}
