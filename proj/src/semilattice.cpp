#include "lrb/semilattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrb {

void FiniteSemilattice::validate_or_throw() const {
  if (m <= 0 || static_cast<int>(join.size()) != m * m)
    throw std::invalid_argument("semilattice: bad table size");
  for (int x = 0; x < m; ++x) {
    if (join_of(x, x) != x) throw std::invalid_argument("semilattice: not idempotent");
    if (join_of(x, bottom) != x || join_of(bottom, x) != x)
      throw std::invalid_argument("semilattice: bottom is not neutral");
    for (int y = 0; y < m; ++y) {
      if (join_of(x, y) != join_of(y, x))
        throw std::invalid_argument("semilattice: not commutative");
      for (int z = 0; z < m; ++z) {
        if (join_of(join_of(x, y), z) != join_of(x, join_of(y, z)))
          throw std::invalid_argument("semilattice: not associative");
      }
    }
  }
}

std::vector<int> FiniteSemilattice::heights() const {
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  // count of elements below x grows along chains, so it is a valid
  // processing order for the longest-chain DP
  std::vector<int> below(static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (y != x && leq(y, x)) ++below[static_cast<std::size_t>(x)];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)];
  });
  std::vector<int> h(static_cast<std::size_t>(m), 0);
  for (int x : order) {
    int best = 0;
    for (int y = 0; y < m; ++y)
      if (y != x && leq(y, x)) best = std::max(best, h[static_cast<std::size_t>(y)] + 1);
    h[static_cast<std::size_t>(x)] = best;
  }
  return h;
}

NuMap nu(const FiniteSemilattice& sl) {
  NuMap out;
  out.image.resize(static_cast<std::size_t>(sl.m));
  for (int x = 0; x < sl.m; ++x) {
    std::vector<int> ls;
    for (int t = 0; t < sl.m; ++t)
      if (!sl.leq(x, t)) ls.push_back(t);
    out.image[static_cast<std::size_t>(x)] = SemWord::of(std::move(ls));
  }

  // injective join homomorphism, checked before use
  for (int x = 0; x < sl.m; ++x) {
    for (int y = 0; y < sl.m; ++y) {
      const SemWord joined = sem_union(out.image[static_cast<std::size_t>(x)],
                                       out.image[static_cast<std::size_t>(y)]);
      if (!(joined == out.image[static_cast<std::size_t>(sl.join_of(x, y))]))
        throw std::logic_error("nu: image is not a join homomorphism");
      if (x != y && out.image[static_cast<std::size_t>(x)] == out.image[static_cast<std::size_t>(y)])
        throw std::logic_error("nu: image is not injective");
    }
  }

  std::vector<int> h = sl.heights();
  std::vector<int> order(static_cast<std::size_t>(sl.m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (h[static_cast<std::size_t>(a)] != h[static_cast<std::size_t>(b)])
      return h[static_cast<std::size_t>(a)] < h[static_cast<std::size_t>(b)];
    return a < b;
  });
  out.rank_of_class.assign(static_cast<std::size_t>(sl.m), 0);
  out.gen_of_class.assign(static_cast<std::size_t>(sl.m), 0);
  for (int r = 0; r < sl.m; ++r) {
    out.rank_of_class[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    out.gen_of_class[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r + 1;
  }
  return out;
}

}  // namespace lrb
