#include "lrb/local_order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace lrb {

namespace {

// +1: x forced before y; -1: y forced before x; 0: free. The two rules are
// properties of the pair alone, independent of the owner set.
int forced_direction(const SupportQuotient& quotient, const NuMap& numap,
                     const AncestorTree& tree, int x, int y) {
  auto first = [&](int u, int v) {
    if (sem_proper_subset(delta_nu(quotient, numap, tree, u),
                          delta_nu(quotient, numap, tree, v)))
      return true;
    const int su = quotient.class_of[static_cast<std::size_t>(u)];
    const int sav = quotient.class_of[static_cast<std::size_t>(
        tree.parent[static_cast<std::size_t>(v)])];
    return quotient.semilattice.leq(su, sav);
  };
  const bool xy = first(x, y);
  const bool yx = first(y, x);
  if (xy && yx) return 2;  // contradiction marker
  if (xy) return 1;
  if (yx) return -1;
  return 0;
}

}  // namespace

BaseConstraints base_constraints(const Band& band, const AncestorTree& tree,
                                 const SupportQuotient& quotient, const NuMap& numap,
                                 const std::vector<std::vector<int>>& ssets) {
  BaseConstraints out;
  out.forced.assign(static_cast<std::size_t>(band.size()), {});
  for (int b = 0; b < band.size(); ++b) {
    const auto& set = ssets[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        const int x = set[i], y = set[j];
        const int dir = forced_direction(quotient, numap, tree, x, y);
        if (dir == 2) {
          out.conflict = PairConflict{b, x, y};
          return out;
        }
        if (dir == 1) out.forced[static_cast<std::size_t>(b)].emplace_back(x, y);
        if (dir == -1) out.forced[static_cast<std::size_t>(b)].emplace_back(y, x);
      }
    }
  }
  return out;
}

std::optional<LloViolation> verify_local_linear_order(const Band& band, const AncestorTree& tree,
                                                      const SupportQuotient& quotient,
                                                      const NuMap& numap,
                                                      const std::vector<std::vector<int>>& ssets,
                                                      const LocalLinearOrder& llo) {
  const int n = band.size();
  const int e = band.identity();
  if (static_cast<int>(llo.order_of.size()) != n) return LloViolation{0, -1, -1, -1, -1};
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int b = 0; b < n; ++b) {
    if (b == e) continue;
    const auto& ord = llo.order_of[static_cast<std::size_t>(b)];
    std::vector<int> sorted = ord;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ssets[static_cast<std::size_t>(b)]) return LloViolation{0, b, -1, -1, -1};
    for (std::size_t i = 0; i < ord.size(); ++i)
      pos[static_cast<std::size_t>(b)][static_cast<std::size_t>(ord[i])] = static_cast<int>(i);
  }
  for (int b = 0; b < n; ++b) {
    if (b == e) continue;
    const auto& set = ssets[static_cast<std::size_t>(b)];
    for (int x : set) {
      for (int y : set) {
        if (x == y) continue;
        const int px = pos[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)];
        const int py = pos[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)];
        if (sem_proper_subset(delta_nu(quotient, numap, tree, x),
                              delta_nu(quotient, numap, tree, y)) &&
            px > py)
          return LloViolation{1, b, -1, x, y};
        const int sx = quotient.class_of[static_cast<std::size_t>(x)];
        const int say = quotient.class_of[static_cast<std::size_t>(
            tree.parent[static_cast<std::size_t>(y)])];
        if (quotient.semilattice.leq(sx, say) && px > py) return LloViolation{2, b, -1, x, y};
      }
    }
  }
  // restriction consistency across nested sets
  for (int b = 0; b < n; ++b) {
    if (b == e) continue;
    const auto& sb = ssets[static_cast<std::size_t>(b)];
    for (int c = 0; c < n; ++c) {
      if (c == e || c == b) continue;
      const auto& sc = ssets[static_cast<std::size_t>(c)];
      if (!std::includes(sc.begin(), sc.end(), sb.begin(), sb.end())) continue;
      for (int x : sb) {
        for (int y : sb) {
          if (x == y) continue;
          if (pos[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] <
                  pos[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)] &&
              pos[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] >
                  pos[static_cast<std::size_t>(c)][static_cast<std::size_t>(y)])
            return LloViolation{3, b, c, x, y};
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {

namespace {

struct GroupState {
  // rel[i*k+j]: 0 unknown, 1 i-before-j, 2 j-before-i (members indexed)
  std::vector<std::vector<signed char>> rel;
};

struct GroupInfo {
  std::vector<int> members;  // sorted
  std::vector<int> related;  // groups comparable by inclusion, sharing pairs
};

int member_index(const std::vector<int>& members, int x) {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return -1;
  return static_cast<int>(it - members.begin());
}

// Sets dir for pair (i, j) in group g and propagates transitivity plus
// inclusion coupling to a fixpoint. Returns false on contradiction.
bool set_and_propagate(const std::vector<GroupInfo>& groups, GroupState& st, int g0, int i0,
                       int j0, signed char dir0) {
  std::deque<std::tuple<int, int, int, signed char>> queue;
  auto push = [&](int g, int i, int j, signed char dir) -> bool {
    auto& rel = st.rel[static_cast<std::size_t>(g)];
    const std::size_t k = groups[static_cast<std::size_t>(g)].members.size();
    signed char& slot = rel[static_cast<std::size_t>(i) * k + j];
    signed char& mirror = rel[static_cast<std::size_t>(j) * k + i];
    const signed char flip = dir == 1 ? 2 : 1;
    if (slot != 0) return slot == dir;
    slot = dir;
    mirror = flip;
    queue.emplace_back(g, i, j, dir);
    return true;
  };
  if (!push(g0, i0, j0, dir0)) return false;
  while (!queue.empty()) {
    auto [g, i, j, dir] = queue.front();
    queue.pop_front();
    if (dir == 2) {
      std::swap(i, j);
      dir = 1;
    }
    const auto& grp = groups[static_cast<std::size_t>(g)];
    const std::size_t k = grp.members.size();
    const auto& rel = st.rel[static_cast<std::size_t>(g)];
    // i before j: close transitively inside the group
    for (std::size_t l = 0; l < k; ++l) {
      if (static_cast<int>(l) == i || static_cast<int>(l) == j) continue;
      if (rel[static_cast<std::size_t>(j) * k + l] == 1) {
        if (!push(g, i, static_cast<int>(l), 1)) return false;
      }
      if (rel[l * k + static_cast<std::size_t>(i)] == 1) {
        if (!push(g, static_cast<int>(l), j, 1)) return false;
      }
    }
    // same orientation in every inclusion-comparable group holding the pair
    const int x = grp.members[static_cast<std::size_t>(i)];
    const int y = grp.members[static_cast<std::size_t>(j)];
    for (int g2 : grp.related) {
      const auto& m2 = groups[static_cast<std::size_t>(g2)].members;
      const int i2 = member_index(m2, x);
      const int j2 = member_index(m2, y);
      if (i2 < 0 || j2 < 0) continue;
      if (!push(g2, i2, j2, 1)) return false;
    }
  }
  return true;
}

bool dfs(const std::vector<GroupInfo>& groups, GroupState st,
         std::optional<GroupState>& solution) {
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::size_t k = groups[g].members.size();
    const auto& rel = st.rel[g];
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (rel[i * k + j] != 0) continue;
        // lower element index first keeps results deterministic
        for (signed char dir : {static_cast<signed char>(1), static_cast<signed char>(2)}) {
          GroupState branch = st;
          if (!set_and_propagate(groups, branch, static_cast<int>(g), static_cast<int>(i),
                                 static_cast<int>(j), dir))
            continue;
          if (dfs(groups, std::move(branch), solution)) return true;
        }
        return false;
      }
    }
  }
  solution = std::move(st);
  return true;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> order_family_search(
    const std::vector<std::vector<int>>& sets, const std::function<int(int, int)>& forced) {
  // group equal set values; every owner maps onto one group
  std::map<std::vector<int>, int> group_of_set;
  std::vector<GroupInfo> groups;
  std::vector<int> owner_group(sets.size(), -1);
  for (std::size_t b = 0; b < sets.size(); ++b) {
    std::vector<int> v = sets[b];
    std::sort(v.begin(), v.end());
    if (v.empty()) continue;
    auto [it, fresh] = group_of_set.emplace(v, static_cast<int>(groups.size()));
    if (fresh) groups.push_back(GroupInfo{v, {}});
    owner_group[b] = it->second;
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t h = 0; h < groups.size(); ++h) {
      if (g == h) continue;
      const auto& a = groups[g].members;
      const auto& b = groups[h].members;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()) ||
          std::includes(a.begin(), a.end(), b.begin(), b.end()))
        groups[g].related.push_back(static_cast<int>(h));
    }
  }

  GroupState st;
  st.rel.resize(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g)
    st.rel[g].assign(groups[g].members.size() * groups[g].members.size(), 0);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& m = groups[g].members;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const int dir = forced(m[i], m[j]);
        if (dir == 0) continue;
        if (!set_and_propagate(groups, st, static_cast<int>(g), static_cast<int>(i),
                               static_cast<int>(j),
                               dir > 0 ? static_cast<signed char>(1) : static_cast<signed char>(2)))
          return std::nullopt;
      }
    }
  }

  std::optional<GroupState> solution;
  if (!dfs(groups, std::move(st), solution)) return std::nullopt;

  std::vector<std::vector<int>> out(sets.size());
  for (std::size_t b = 0; b < sets.size(); ++b) {
    if (owner_group[b] < 0) continue;
    const auto& grp = groups[static_cast<std::size_t>(owner_group[b])];
    const auto& rel = solution->rel[static_cast<std::size_t>(owner_group[b])];
    const std::size_t k = grp.members.size();
    std::vector<int> seq = grp.members;
    std::sort(seq.begin(), seq.end(), [&](int u, int v) {
      const int iu = member_index(grp.members, u);
      const int iv = member_index(grp.members, v);
      return rel[static_cast<std::size_t>(iu) * k + static_cast<std::size_t>(iv)] == 1;
    });
    out[b] = std::move(seq);
  }
  return out;
}

}  // namespace detail

LloSearch find_local_linear_order(const Band& band, const AncestorTree& tree,
                                  const SupportQuotient& quotient, const NuMap& numap,
                                  const std::vector<std::vector<int>>& ssets) {
  LloSearch out;
  const int n = band.size();
  const int e = band.identity();

  BaseConstraints base = base_constraints(band, tree, quotient, numap, ssets);
  if (base.conflict) {
    out.conflict = base.conflict;
    return out;
  }

  // fast path: one digraph over all forced pairs; restrictions of a single
  // topological order satisfy every condition at once
  std::set<std::pair<int, int>> edges;
  for (const auto& pairs : base.forced)
    for (auto [x, y] : pairs) edges.emplace(x, y);
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : edges) ++indeg[static_cast<std::size_t>(y)];
  std::set<int> avail;
  for (int v = 0; v < n; ++v)
    if (v != e && indeg[static_cast<std::size_t>(v)] == 0) avail.insert(v);
  std::vector<int> topo_pos(static_cast<std::size_t>(n), -1);
  int placed = 0;
  while (!avail.empty()) {
    const int v = *avail.begin();
    avail.erase(avail.begin());
    topo_pos[static_cast<std::size_t>(v)] = placed++;
    for (auto [x, y] : edges) {
      if (x != v) continue;
      if (--indeg[static_cast<std::size_t>(y)] == 0) avail.insert(y);
    }
  }
  if (placed == n - 1) {
    LocalLinearOrder llo;
    llo.order_of.assign(static_cast<std::size_t>(n), {});
    for (int b = 0; b < n; ++b) {
      if (b == e) continue;
      std::vector<int> seq = ssets[static_cast<std::size_t>(b)];
      std::sort(seq.begin(), seq.end(), [&](int u, int v) {
        return topo_pos[static_cast<std::size_t>(u)] < topo_pos[static_cast<std::size_t>(v)];
      });
      llo.order_of[static_cast<std::size_t>(b)] = std::move(seq);
    }
    if (verify_local_linear_order(band, tree, quotient, numap, ssets, llo))
      throw std::logic_error("find_local_linear_order: fast path produced an invalid family");
    out.llo = std::move(llo);
    out.fast_path = true;
    return out;
  }

  // complete fallback
  auto fd = [&](int x, int y) {
    const int dir = forced_direction(quotient, numap, tree, x, y);
    if (dir == 2)  // conflicts were ruled out before reaching the fallback
      throw std::logic_error("find_local_linear_order: conflicted pair reached the fallback");
    return dir;
  };
  auto family = detail::order_family_search(ssets, fd);
  if (!family) return out;
  LocalLinearOrder llo;
  llo.order_of = std::move(*family);
  llo.order_of.resize(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    if (b != e && llo.order_of[static_cast<std::size_t>(b)].empty())
      llo.order_of[static_cast<std::size_t>(b)] = ssets[static_cast<std::size_t>(b)];
  }
  if (verify_local_linear_order(band, tree, quotient, numap, ssets, llo))
    throw std::logic_error("find_local_linear_order: fallback produced an invalid family");
  out.llo = std::move(llo);
  return out;
}

LocalLinearOrder subband_local_order(const Band& band, const AncestorTree& tree,
                                     const std::vector<std::vector<int>>& ssets,
                                     const std::vector<FreeWord>& words,
                                     const AlphabetRegistry& reg) {
  const int n = band.size();
  const int e = band.identity();
  auto suffix = [&](int x) {
    return delta_word(words[static_cast<std::size_t>(x)],
                      words[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(x)])]);
  };
  LocalLinearOrder llo;
  llo.order_of.assign(static_cast<std::size_t>(n), {});
  for (int b = 0; b < n; ++b) {
    if (b == e) continue;
    const FreeWord& wb = words[static_cast<std::size_t>(b)];
    auto before = [&](int x, int y) {
      const FreeWord dx = suffix(x);
      const FreeWord dy = suffix(y);
      if (letter_set(dx) != letter_set(dy)) {
        const bool xy = separator(dx, dy, wb).has_value();
        const bool yx = separator(dy, dx, wb).has_value();
        if (xy == yx)
          throw std::logic_error("subband_local_order: separator test undecided");
        return xy;
      }
      return canonical_compare(words[static_cast<std::size_t>(y)],
                               words[static_cast<std::size_t>(x)], reg) < 0;
    };
    std::vector<int> seq = ssets[static_cast<std::size_t>(b)];
    // insertion sort plus a full pairwise check; an inconsistent comparator
    // must surface instead of corrupting the order
    for (std::size_t i = 1; i < seq.size(); ++i) {
      std::size_t j = i;
      while (j > 0 && before(seq[j], seq[j - 1])) {
        std::swap(seq[j], seq[j - 1]);
        --j;
      }
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        if (!before(seq[i], seq[j]) || before(seq[j], seq[i]))
          throw std::logic_error("subband_local_order: comparator is not a linear order");
      }
    }
    llo.order_of[static_cast<std::size_t>(b)] = std::move(seq);
  }
  return llo;
}

}  // namespace lrb
