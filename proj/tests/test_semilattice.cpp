#include <random>

#include "doctest.h"
#include "lrb/semilattice.hpp"
#include "support.hpp"

using namespace lrb;

namespace {

FiniteSemilattice chain(int m) {
  FiniteSemilattice sl;
  sl.m = m;
  sl.bottom = 0;
  sl.join.resize(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) sl.join[static_cast<std::size_t>(x) * m + y] = std::max(x, y);
  return sl;
}

FiniteSemilattice diamond() {
  // 0 < a, b < ab encoded as 0,1,2,3
  FiniteSemilattice sl;
  sl.m = 4;
  sl.bottom = 0;
  sl.join = {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3};
  return sl;
}

}  // namespace

TEST_CASE("semilattice order on a chain") {
  const FiniteSemilattice sl = chain(4);
  sl.validate_or_throw();
  CHECK(sl.leq(1, 2));
  CHECK_FALSE(sl.leq(2, 1));
  for (int x = 0; x < 4; ++x) CHECK(sl.leq(0, x));
}

TEST_CASE("order on an antichain with a top") {
  const FiniteSemilattice sl = diamond();
  sl.validate_or_throw();
  CHECK_FALSE(sl.leq(1, 2));
  CHECK_FALSE(sl.leq(2, 1));
  CHECK(sl.leq(1, 3));
}

TEST_CASE("nu on the four-chain") {
  const NuMap m = nu(chain(4));
  CHECK(m.image[0] == SemWord{});
  CHECK(m.image[1] == SemWord::of({0}));
  CHECK(m.image[2] == SemWord::of({0, 1}));
  CHECK(m.image[3] == SemWord::of({0, 1, 2}));
  // chain classes rank by height, generators follow
  CHECK(m.gen_of_class == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("nu on the diamond") {
  const FiniteSemilattice sl = diamond();
  const NuMap m = nu(sl);
  // evaluate the definition independently
  for (int x = 0; x < sl.m; ++x) {
    std::vector<int> expect;
    for (int t = 0; t < sl.m; ++t)
      if (!sl.leq(x, t)) expect.push_back(t);
    CHECK(m.image[static_cast<std::size_t>(x)] == SemWord::of(expect));
  }
  CHECK(m.image[1] == SemWord::of({0, 2}));
  CHECK(m.image[2] == SemWord::of({0, 1}));
  CHECK(m.image[3] == SemWord::of({0, 1, 2}));
  CHECK(sem_union(m.image[1], m.image[2]) == m.image[3]);
}

TEST_CASE("nu is an injective homomorphism on random semilattices") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const FiniteSemilattice sl = test::random_semilattice(rng, 8);
    sl.validate_or_throw();
    const NuMap m = nu(sl);  // nu() itself asserts both properties
    // letter-absence forces comparability
    for (int x = 0; x < sl.m; ++x)
      for (int y = 0; y < sl.m; ++y)
        if (!m.image[static_cast<std::size_t>(x)].contains(y)) CHECK(sl.leq(x, y));
    // difference-word comparisons force order of the lower elements
    for (int x = 0; x < sl.m; ++x)
      for (int xp = 0; xp < sl.m; ++xp) {
        if (x == xp || !sl.leq(x, xp)) continue;
        for (int y = 0; y < sl.m; ++y)
          for (int yp = 0; yp < sl.m; ++yp) {
            if (y == yp || !sl.leq(y, yp)) continue;
            const SemWord dx = sem_difference(m.image[static_cast<std::size_t>(xp)],
                                              m.image[static_cast<std::size_t>(x)]);
            const SemWord dy = sem_difference(m.image[static_cast<std::size_t>(yp)],
                                              m.image[static_cast<std::size_t>(y)]);
            if (sem_subset(dx, dy)) CHECK(sl.leq(y, x));
            if (dx == dy) {
              CHECK(x == y);
              CHECK(xp == yp);
            }
          }
      }
  }
}

TEST_CASE("difference of equal letter sets is empty") {
  const SemWord w = SemWord::of({2, 5, 7});
  CHECK(sem_difference(w, w).empty());
}
