#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braid/garside.hpp"
#include "braid/random.hpp"
#include "braid/word.hpp"
#include "oracles.hpp"

using namespace braid;

namespace {

BraidWord word(int n, const std::vector<int>& gens) { return BraidWord::from_ints(n, gens); }

}  // namespace

TEST_CASE("concat") {
  CHECK(concat(word(3, {1}), word(3, {2})) == word(3, {1, 2}));
  CHECK(concat(BraidWord(4), word(4, {1, -2})) == word(4, {1, -2}));
  CHECK(concat(word(4, {1, -2}), word(4, {1, 3})) == word(4, {1, -2, 1, 3}));
  CHECK_THROWS_AS(concat(word(3, {1}), word(4, {1})), std::invalid_argument);
}

TEST_CASE("letter validation") {
  CHECK_THROWS_AS(word(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(word(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(0), std::invalid_argument);
  CHECK(BraidWord(1).empty());
}

TEST_CASE("inverse") {
  CHECK(inverse(word(3, {1, -2})) == word(3, {2, -1}));
  CHECK(inverse(BraidWord(3)) == BraidWord(3));

  RandomSource rng(7);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.uniform_int(2, 5);
    const BraidWord w = random_word(n, rng.uniform_int(0, 12), rng);
    CHECK(inverse(inverse(w)) == w);
    CHECK(is_identity(concat(w, inverse(w))));
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(word(3, {1}), BraidWord(3)) == word(3, {1}));
  CHECK(conjugate(word(3, {1}), word(3, {2})) == word(3, {-2, 1, 2}));

  RandomSource rng(8);
  for (int i = 0; i < 50; ++i) {
    const BraidWord w = random_word(4, rng.uniform_int(0, 10), rng);
    const BraidWord q = random_word(4, rng.uniform_int(0, 10), rng);
    CHECK(degree(conjugate(w, q)) == degree(w));
  }
}

TEST_CASE("degree") {
  CHECK(degree(word(4, {1, -2, 1, 3})) == 2);
  CHECK(degree(BraidWord(2)) == 0);

  RandomSource rng(9);
  for (int i = 0; i < 50; ++i) {
    const int k = rng.uniform_int(-3, 3);
    const BraidWord q = random_word(5, rng.uniform_int(0, 10), rng);
    CHECK(degree(conjugate(generator_power(5, rng.uniform_int(1, 4), k), q)) == k);
  }
}

TEST_CASE("strand_data traces positions") {
  SUBCASE("sigma1 sigma2 in B3") {
    const StrandData sd = strand_data(word(3, {1, 2}));
    CHECK(sd.permutation.image_of(1) == 3);
    CHECK(sd.permutation.image_of(2) == 1);
    CHECK(sd.permutation.image_of(3) == 2);
    CHECK(sd.crossings.at(1, 2) == 1);
    CHECK(sd.crossings.at(1, 3) == 1);
    CHECK(sd.crossings.at(2, 3) == 0);
    REQUIRE(sd.switching.size() == 2);
    CHECK(sd.switching[0] == std::pair<int, int>{1, 2});
    CHECK(sd.switching[1] == std::pair<int, int>{1, 3});
  }
  SUBCASE("a conjugated square in B3") {
    const StrandData sd = strand_data(word(3, {-2, 1, 1, 2}));
    CHECK(sd.permutation.is_identity());
    CHECK(sd.crossings.at(1, 3) == 2);
    CHECK(sd.crossings.at(1, 2) == 0);
    CHECK(sd.crossings.at(2, 3) == 0);
  }
  SUBCASE("free cancellation") {
    const StrandData sd = strand_data(word(3, {1, -1}));
    CHECK(sd.permutation.is_identity());
    CHECK(sd.crossings.all_zero());
  }
}

TEST_CASE("permutation composes along concatenation") {
  RandomSource rng(10);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.uniform_int(2, 6);
    const BraidWord u = random_word(n, rng.uniform_int(0, 12), rng);
    const BraidWord v = random_word(n, rng.uniform_int(0, 12), rng);
    const StrandPermutation composed = strand_data(u).permutation.then(strand_data(v).permutation);
    CHECK(strand_data(concat(u, v)).permutation == composed);
  }
}

TEST_CASE("crossing table and degree survive legal rewrites") {
  RandomSource rng(11);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.uniform_int(2, 6);
    const BraidWord w = random_word(n, rng.uniform_int(2, 16), rng);
    std::vector<int> rewritten = w.to_ints();
    oracle::apply_random_rewrite(rewritten, n, rng);
    const BraidWord w2 = BraidWord::from_ints(n, rewritten);
    CHECK(degree(w2) == degree(w));
    CHECK(strand_data(w2).crossings == strand_data(w).crossings);
    CHECK(strand_data(w2).permutation == strand_data(w).permutation);
  }
}

TEST_CASE("delete_strands") {
  SUBCASE("deleting the crossing pair of a conjugated square") {
    const BraidWord out = delete_strands(word(3, {-2, 1, 1, 2}), {1, 3});
    CHECK(out.strands() == 1);
    CHECK(out.empty());
  }
  SUBCASE("re-indexing") {
    const BraidWord out = delete_strands(word(4, {3}), {1, 2});
    CHECK(out == word(2, {1}));
  }
  SUBCASE("empty word") {
    CHECK(delete_strands(BraidWord(5), {2, 4}).empty());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(delete_strands(BraidWord(2), {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(delete_strands(BraidWord(4), {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(delete_strands(BraidWord(4), {0, 2}), std::invalid_argument);
  }
  SUBCASE("identity words keep identity residue") {
    RandomSource rng(12);
    for (int i = 0; i < 50; ++i) {
      const int n = rng.uniform_int(3, 6);
      const BraidWord w = random_word(n, rng.uniform_int(0, 8), rng);
      const BraidWord id_word = concat(w, inverse(w));
      const int a = rng.uniform_int(1, n - 1);
      const int b = rng.uniform_int(a + 1, n);
      CHECK(is_identity(delete_strands(id_word, {a, b})));
    }
  }
}

TEST_CASE("generator_power") {
  CHECK(generator_power(3, 2, 3) == word(3, {2, 2, 2}));
  CHECK(generator_power(3, 2, -2) == word(3, {-2, -2}));
  CHECK(generator_power(3, 2, 0).empty());
}
