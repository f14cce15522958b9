#include "lrb/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <variant>
#include <vector>

namespace lrb {

namespace {

// Invariant seed colors: order and support statistics that any isomorphism
// preserves. Plain multiset refinement is too coarse on bands (products give
// the identity/rest seed nothing to split), so these carry the real signal.
std::vector<int> seed_colors(const Band& band) {
  const int n = band.size();
  std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int downset = 0, upset = 0, mutual = 0;
    std::vector<int> row, col;
    for (int y = 0; y < n; ++y) {
      if (band.leq(y, x)) ++downset;
      if (band.leq(x, y)) ++upset;
      if (band.preceq(x, y) && band.preceq(y, x)) ++mutual;
      row.push_back(band.mul(x, y));
      col.push_back(band.mul(y, x));
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
    keys[static_cast<std::size_t>(x)] = {x == band.identity() ? 1 : 0, downset, upset, mutual,
                                         static_cast<int>(row.size()),
                                         static_cast<int>(col.size())};
  }
  std::map<std::vector<int>, int> rank;
  for (const auto& k : keys) rank.emplace(k, 0);
  int r = 0;
  for (auto& [k, id] : rank) id = r++;
  std::vector<int> color(keys.size());
  for (std::size_t x = 0; x < keys.size(); ++x) color[x] = rank[keys[x]];
  return color;
}

// Matches elements of a against b along a's breadth-first tree order.
// Candidates for x are unmatched elements of matching color whose tree
// parent is the image of x's parent; every product whose three participants
// are all matched is checked the moment that becomes true, so wrong branches
// die early even in heavily symmetric bands.
struct TreeMatcher {
  const Band& a;
  const Band& b;
  const std::vector<int>& order;  // a's bfs order
  const std::vector<int>& parent_a;
  const std::vector<int>& parent_b;
  std::vector<int> ca, cb;
  std::vector<int> f;        // a -> b
  std::vector<bool> used;    // b side
  std::vector<int> matched;  // a elements in assignment order
  // pairs of matched elements whose product is the (not yet matched) key;
  // once all factors of a product are matched its image is forced
  std::vector<std::vector<std::pair<int, int>>> pairs_into;

  bool consistent(int x, int y) const {
    for (int z : matched) {
      const int fz = f[static_cast<std::size_t>(z)];
      const int xz = a.mul(x, z);
      if (f[static_cast<std::size_t>(xz)] != -1 &&
          b.mul(y, fz) != f[static_cast<std::size_t>(xz)])
        return false;
      const int zx = a.mul(z, x);
      if (f[static_cast<std::size_t>(zx)] != -1 &&
          b.mul(fz, y) != f[static_cast<std::size_t>(zx)])
        return false;
    }
    for (auto [u, v] : pairs_into[static_cast<std::size_t>(x)])
      if (b.mul(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)]) != y)
        return false;
    return true;
  }

  void record(int x, std::vector<int>& log) {
    for (int z : matched) {
      const int xz = a.mul(x, z);
      pairs_into[static_cast<std::size_t>(xz)].emplace_back(x, z);
      log.push_back(xz);
      const int zx = a.mul(z, x);
      pairs_into[static_cast<std::size_t>(zx)].emplace_back(z, x);
      log.push_back(zx);
    }
  }

  void undo(const std::vector<int>& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it)
      pairs_into[static_cast<std::size_t>(*it)].pop_back();
  }

  bool attempt(std::size_t at, int x, int y) {
    if (!consistent(x, y)) return false;
    f[static_cast<std::size_t>(x)] = y;
    used[static_cast<std::size_t>(y)] = true;
    std::vector<int> log;
    record(x, log);
    matched.push_back(x);
    if (run(at + 1)) return true;
    matched.pop_back();
    undo(log);
    used[static_cast<std::size_t>(y)] = false;
    f[static_cast<std::size_t>(x)] = -1;
    return false;
  }

  bool run(std::size_t at) {
    if (at == order.size()) return true;
    const int x = order[at];
    if (x == a.identity()) return attempt(at, x, b.identity());
    // a product of matched elements has a forced image
    int forced = -1;
    for (auto [u, v] : pairs_into[static_cast<std::size_t>(x)]) {
      const int y = b.mul(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)]);
      if (forced == -1)
        forced = y;
      else if (forced != y)
        return false;
    }
    const int fp = f[static_cast<std::size_t>(parent_a[static_cast<std::size_t>(x)])];
    if (forced != -1) {
      if (used[static_cast<std::size_t>(forced)] ||
          cb[static_cast<std::size_t>(forced)] != ca[static_cast<std::size_t>(x)] ||
          parent_b[static_cast<std::size_t>(forced)] != fp)
        return false;
      return attempt(at, x, forced);
    }
    for (int y = 0; y < b.size(); ++y) {
      if (used[static_cast<std::size_t>(y)] || y == b.identity()) continue;
      if (cb[static_cast<std::size_t>(y)] != ca[static_cast<std::size_t>(x)]) continue;
      if (parent_b[static_cast<std::size_t>(y)] != fp) continue;
      if (attempt(at, x, y)) return true;
    }
    return false;
  }
};

// Generic fallback for bands whose Hasse diagram is not a tree: plain
// backtracking in index order with color filtering and the same incremental
// product checks. Only desk-size bands take this path.
bool generic_backtrack(const Band& a, const Band& b, const std::vector<int>& ca,
                       const std::vector<int>& cb, std::vector<int>& f, std::vector<bool>& used,
                       int x) {
  const int n = a.size();
  if (x == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[static_cast<std::size_t>(y)] ||
        ca[static_cast<std::size_t>(x)] != cb[static_cast<std::size_t>(y)])
      continue;
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      const int fz = f[static_cast<std::size_t>(z)];
      if (f[static_cast<std::size_t>(a.mul(x, z))] != -1 &&
          f[static_cast<std::size_t>(a.mul(x, z))] != b.mul(y, fz))
        ok = false;
      if (f[static_cast<std::size_t>(a.mul(z, x))] != -1 &&
          f[static_cast<std::size_t>(a.mul(z, x))] != b.mul(fz, y))
        ok = false;
      for (int w = 0; w < x && ok; ++w)
        if (a.mul(z, w) == x &&
            b.mul(fz, f[static_cast<std::size_t>(w)]) != y)
          ok = false;
    }
    if (!ok) continue;
    f[static_cast<std::size_t>(x)] = y;
    used[static_cast<std::size_t>(y)] = true;
    if (generic_backtrack(a, b, ca, cb, f, used, x + 1)) return true;
    f[static_cast<std::size_t>(x)] = -1;
    used[static_cast<std::size_t>(y)] = false;
  }
  return false;
}

bool full_check(const Band& a, const Band& b, const std::vector<int>& f) {
  for (int p = 0; p < a.size(); ++p)
    for (int q = 0; q < a.size(); ++q)
      if (f[static_cast<std::size_t>(a.mul(p, q))] !=
          b.mul(f[static_cast<std::size_t>(p)], f[static_cast<std::size_t>(q)]))
        return false;
  return true;
}

}  // namespace

bool bands_isomorphic(const Band& a, const Band& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> ca = seed_colors(a);
  std::vector<int> cb = seed_colors(b);
  std::vector<int> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;

  const auto tree_a = ancestor_tree(a);
  const auto tree_b = ancestor_tree(b);
  const bool rh_a = std::holds_alternative<AncestorTree>(tree_a);
  const bool rh_b = std::holds_alternative<AncestorTree>(tree_b);
  if (rh_a != rh_b) return false;

  if (rh_a) {
    const AncestorTree& ta = std::get<AncestorTree>(tree_a);
    const AncestorTree& tb = std::get<AncestorTree>(tree_b);
    TreeMatcher m{a,
                  b,
                  ta.bfs,
                  ta.parent,
                  tb.parent,
                  std::move(ca),
                  std::move(cb),
                  std::vector<int>(static_cast<std::size_t>(a.size()), -1),
                  std::vector<bool>(static_cast<std::size_t>(a.size()), false),
                  {},
                  std::vector<std::vector<std::pair<int, int>>>(
                      static_cast<std::size_t>(a.size()))};
    return m.run(0) && full_check(a, b, m.f);
  }
  std::vector<int> f(static_cast<std::size_t>(a.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(a.size()), false);
  return generic_backtrack(a, b, ca, cb, f, used, 0) && full_check(a, b, f);
}

}  // namespace lrb
