#include <random>

#include "doctest.h"
#include "lrb/band.hpp"
#include "lrb/closure.hpp"
#include "lrb/words.hpp"
#include "support.hpp"

using namespace lrb;
using test::random_word;
using test::word;

TEST_CASE("free product concatenates and drops repeated letters") {
  AlphabetRegistry reg;
  CHECK(fw_product(word(reg, {1, 2, 3}), word(reg, {2, 3, 4})) == word(reg, {1, 2, 3, 4}));
  CHECK(fw_product(word(reg, {2}), word(reg, {1, 2})) == word(reg, {2, 1}));
  const FreeWord w = word(reg, {3, 1});
  CHECK(fw_product(w, FreeWord{}) == w);
  CHECK(fw_product(FreeWord{}, w) == w);
}

TEST_CASE("prefix and support orders") {
  AlphabetRegistry reg;
  CHECK(fw_leq(word(reg, {1}), word(reg, {1, 2})));
  CHECK_FALSE(fw_leq(word(reg, {1, 2}), word(reg, {2, 1})));
  CHECK(fw_preceq(word(reg, {1, 2}), word(reg, {2, 1})));
  CHECK(fw_preceq(word(reg, {2}), word(reg, {1, 2, 3})));
  CHECK_FALSE(fw_preceq(word(reg, {4}), word(reg, {1, 2, 3})));
}

TEST_CASE("canonical order: size first, then rank") {
  AlphabetRegistry reg;
  CHECK(canonical_compare(word(reg, {1}), word(reg, {1, 2}), reg) < 0);
  CHECK(canonical_compare(word(reg, {1}), word(reg, {2}), reg) < 0);
  CHECK(canonical_compare(word(reg, {2}), word(reg, {3}), reg) < 0);
  CHECK(canonical_compare(word(reg, {1, 2}), word(reg, {1, 2}), reg) == 0);
  // same letter set: the sequences break the tie
  CHECK(canonical_compare(word(reg, {1, 2}), word(reg, {2, 1}), reg) < 0);
}

TEST_CASE("canonical order is total and containment-monotone on random words") {
  AlphabetRegistry reg;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const FreeWord a = random_word(reg, rng, 6);
    const FreeWord b = random_word(reg, rng, 6);
    const FreeWord c = random_word(reg, rng, 6);
    const int ab = canonical_compare(a, b, reg);
    CHECK(ab == -canonical_compare(b, a, reg));
    CHECK((ab == 0) == (a == b));
    if (ab < 0 && canonical_compare(b, c, reg) < 0) CHECK(canonical_compare(a, c, reg) < 0);
    auto sa = letter_set(a), sb = letter_set(b);
    if (sa != sb && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
      CHECK(canonical_compare(a, b, reg) < 0);
  }
}

TEST_CASE("free band laws hold for the product") {
  AlphabetRegistry reg;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const FreeWord a = random_word(reg, rng, 5);
    const FreeWord b = random_word(reg, rng, 5);
    const FreeWord c = random_word(reg, rng, 5);
    CHECK(fw_product(a, a) == a);
    CHECK(fw_product(fw_product(a, b), a) == fw_product(a, b));
    CHECK(fw_product(fw_product(a, b), c) == fw_product(a, fw_product(b, c)));
    if (fw_leq(a, b)) CHECK(fw_preceq(a, b));
  }
}

TEST_CASE("prefixes of incomparable words stay incomparable upward") {
  AlphabetRegistry reg;
  std::mt19937_64 rng(13);
  auto incomparable = [](const FreeWord& a, const FreeWord& b) {
    return !fw_leq(a, b) && !fw_leq(b, a);
  };
  int seen = 0;
  for (int i = 0; i < 2000 && seen < 200; ++i) {
    const FreeWord y1 = random_word(reg, rng, 6);
    const FreeWord y2 = random_word(reg, rng, 6);
    FreeWord x1 = y1, x2 = y2;
    x1.letters.resize(1 + rng() % y1.size());
    x2.letters.resize(1 + rng() % y2.size());
    if (!incomparable(x1, x2)) continue;
    ++seen;
    CHECK(incomparable(y1, y2));
  }
  CHECK(seen >= 100);
}

TEST_CASE("sorted word of a letter set") {
  AlphabetRegistry reg;
  std::vector<LetterId> letter_of{reg.base(1), reg.base(2), reg.base(3), reg.base(4)};
  CHECK(to_sorted_word(SemWord::of({0, 1, 2}), letter_of, reg) == word(reg, {1, 2, 3}));
  CHECK(to_sorted_word(SemWord::of({2, 0}), letter_of, reg) == word(reg, {1, 3}));
  CHECK(to_sorted_word(SemWord{}, letter_of, reg) == FreeWord{});
}

TEST_CASE("suffix words") {
  AlphabetRegistry reg;
  CHECK(delta_word(word(reg, {1, 2, 3}), word(reg, {1, 2})) == word(reg, {3}));
  CHECK(delta_word(word(reg, {2, 1}), word(reg, {2})) == word(reg, {1}));
  CHECK(delta_word(word(reg, {1, 2}), FreeWord{}) == word(reg, {1, 2}));
  CHECK_THROWS_AS(delta_word(word(reg, {1, 2}), word(reg, {2})), std::invalid_argument);
  CHECK_THROWS_AS(delta_word(word(reg, {1, 2}), word(reg, {1, 2})), std::invalid_argument);
}

TEST_CASE("separator letters") {
  AlphabetRegistry reg;
  const FreeWord b = word(reg, {1, 2, 3, 4, 5});
  const FreeWord dx = word(reg, {1, 2, 3, 5});
  const FreeWord dy = word(reg, {2, 4, 5});
  auto s = separator(dx, dy, b);
  REQUIRE(s.has_value());
  CHECK(reg.letter(*s).gen == 4);
  CHECK_FALSE(separator(dy, dx, b).has_value());
  // the difference being the last letter of b makes it the separator
  auto s2 = separator(word(reg, {1, 2}), word(reg, {2, 5}), b);
  REQUIRE(s2.has_value());
  CHECK(reg.letter(*s2).gen == 5);
  CHECK_THROWS_AS(separator(dx, dx, b), std::invalid_argument);
}

TEST_CASE("closure of seed words") {
  AlphabetRegistry reg;
  auto got = close_under_product({word(reg, {1}), word(reg, {2, 1})}, true, reg);
  REQUIRE(std::holds_alternative<Closure>(got));
  const Closure& clo = std::get<Closure>(got);
  CHECK(clo.band.size() == 4);
  std::vector<FreeWord> expect{FreeWord{}, word(reg, {1}), word(reg, {1, 2}), word(reg, {2, 1})};
  CHECK(clo.words == expect);

  auto tiny = close_under_product({word(reg, {1})}, true, reg);
  CHECK(std::get<Closure>(tiny).band.size() == 2);

  auto capped = close_under_product({word(reg, {1}), word(reg, {2, 1})}, true, reg, 3);
  REQUIRE(std::holds_alternative<ClosureError>(capped));
  CHECK(std::get<ClosureError>(capped).kind == ClosureError::Kind::CapExceeded);

  // without the adjoined identity a closure of nonempty words has none
  auto bare = close_under_product({word(reg, {1})}, false, reg);
  REQUIRE(std::holds_alternative<ClosureError>(bare));
  CHECK(std::get<ClosureError>(bare).kind == ClosureError::Kind::NoIdentity);
  auto seeded = close_under_product({FreeWord{}, word(reg, {1})}, false, reg);
  CHECK(std::holds_alternative<Closure>(seeded));
}

TEST_CASE("random closures are valid right hereditary bands") {
  AlphabetRegistry reg;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    std::vector<FreeWord> seeds;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < k; ++s) seeds.push_back(random_word(reg, rng, 4));
    auto got = close_under_product(seeds, true, reg);
    REQUIRE(std::holds_alternative<Closure>(got));
    const Closure& clo = std::get<Closure>(got);
    // close_under_product validates internally; check right heredity here
    auto tree = ancestor_tree(clo.band);
    CHECK(std::holds_alternative<AncestorTree>(tree));
  }
}

TEST_CASE("fresh letters rank after base letters and are stable") {
  AlphabetRegistry reg;
  const LetterId b9 = reg.base(9);
  const LetterId f1 = reg.fresh(2, Letter::kEmptyTag, 1);
  const LetterId f2 = reg.fresh(2, 3, 1);
  const LetterId b1 = reg.base(1);
  CHECK(reg.rank_less(b9, f1));
  CHECK(reg.rank_less(b1, b9));
  CHECK(reg.rank_less(f1, f2));
  CHECK(reg.fresh(2, 3, 1) == f2);       // interned
  CHECK(reg.fresh(2, 3, 2) != f2);       // round distinguishes
}
