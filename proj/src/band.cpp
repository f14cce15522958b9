#include "lrb/band.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace lrb {

std::variant<Band, std::vector<AxiomViolation>> Band::validate(std::vector<int> table, int n,
                                                               int identity,
                                                               std::vector<std::string> labels) {
  std::vector<AxiomViolation> bad;
  if (n <= 0 || static_cast<int>(table.size()) != n * n || identity < 0 || identity >= n) {
    bad.push_back({AxiomViolation::Law::Entry, -1, -1, -1});
    return bad;
  }
  auto at = [&](int x, int y) { return table[static_cast<std::size_t>(x) * n + y]; };
  for (int x = 0; x < n && bad.empty(); ++x)
    for (int y = 0; y < n; ++y)
      if (at(x, y) < 0 || at(x, y) >= n) {
        bad.push_back({AxiomViolation::Law::Entry, x, y, -1});
        return bad;  // cannot scan the other laws with entries out of range
      }
  for (int x = 0; x < n; ++x) {
    if (at(identity, x) != x || at(x, identity) != x)
      bad.push_back({AxiomViolation::Law::Identity, x, -1, -1});
    if (at(x, x) != x) bad.push_back({AxiomViolation::Law::Idempotency, x, -1, -1});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (at(at(x, y), x) != at(x, y))
        bad.push_back({AxiomViolation::Law::LeftRegularity, x, y, -1});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          bad.push_back({AxiomViolation::Law::Associativity, x, y, z});
  if (!bad.empty()) return bad;

  if (labels.empty()) {
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      labels.push_back(i == identity ? std::string("e") : "s" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("bad label count");
  return Band(std::move(table), n, identity, std::move(labels));
}

std::variant<AncestorTree, NotRightHereditaryWitness> ancestor_tree(const Band& band) {
  const int n = band.size();
  const int e = band.identity();
  AncestorTree tree;
  tree.parent.assign(static_cast<std::size_t>(n), -1);
  tree.children.assign(static_cast<std::size_t>(n), {});
  tree.depth.assign(static_cast<std::size_t>(n), 0);

  for (int s = 0; s < n; ++s) {
    if (s == e) continue;
    // lower covers: maximal elements strictly below s
    std::vector<int> covers;
    for (int p = 0; p < n; ++p) {
      if (p == s || !band.leq(p, s)) continue;
      bool maximal = true;
      for (int z = 0; z < n; ++z) {
        if (z != p && z != s && band.leq(p, z) && band.leq(z, s)) {
          maximal = false;
          break;
        }
      }
      if (maximal) covers.push_back(p);
    }
    if (covers.size() != 1)
      return NotRightHereditaryWitness{s, covers.empty() ? -1 : covers[0],
                                       covers.size() > 1 ? covers[1] : -1};
    tree.parent[static_cast<std::size_t>(s)] = covers[0];
    tree.children[static_cast<std::size_t>(covers[0])].push_back(s);
  }
  for (auto& cs : tree.children) std::sort(cs.begin(), cs.end());

  std::queue<int> q;
  q.push(e);
  int seen = 0;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    tree.bfs.push_back(c);
    ++seen;
    for (int child : tree.children[static_cast<std::size_t>(c)]) {
      tree.depth[static_cast<std::size_t>(child)] = tree.depth[static_cast<std::size_t>(c)] + 1;
      q.push(child);
    }
  }
  if (seen != n) throw std::logic_error("ancestor_tree: Hasse diagram disconnected from identity");
  return tree;
}

SupportQuotient support_quotient(const Band& band) {
  const int n = band.size();
  SupportQuotient q;
  q.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (q.class_of[static_cast<std::size_t>(x)] != -1) continue;
    int id = static_cast<int>(q.classes.size());
    q.classes.push_back({});
    for (int y = x; y < n; ++y) {
      if (q.class_of[static_cast<std::size_t>(y)] == -1 && band.preceq(x, y) &&
          band.preceq(y, x)) {
        q.class_of[static_cast<std::size_t>(y)] = id;
        q.classes.back().push_back(y);
      }
    }
  }
  const int m = static_cast<int>(q.classes.size());
  q.semilattice.m = m;
  q.semilattice.bottom = q.class_of[static_cast<std::size_t>(band.identity())];
  q.semilattice.join.assign(static_cast<std::size_t>(m) * m, -1);
  // the join is induced by any representatives; independence is an axiom
  // consequence but asserted anyway
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cx = q.class_of[static_cast<std::size_t>(x)];
      int cy = q.class_of[static_cast<std::size_t>(y)];
      int cz = q.class_of[static_cast<std::size_t>(band.mul(x, y))];
      int& slot = q.semilattice.join[static_cast<std::size_t>(cx) * m + cy];
      if (slot == -1)
        slot = cz;
      else if (slot != cz)
        throw std::logic_error("support_quotient: join not well defined");
    }
  q.semilattice.validate_or_throw();
  return q;
}

std::vector<std::vector<int>> s_sets(const Band& band, const AncestorTree& tree) {
  const int n = band.size();
  const int e = band.identity();
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    if (c == e) continue;
    for (int s = 0; s < n; ++s) {
      if (s == e) continue;
      const int a = tree.parent[static_cast<std::size_t>(s)];
      if (!band.sim(c, s, a)) continue;
      bool first_at_c = true;
      for (int cp = 0; cp < n && first_at_c; ++cp) {
        if (cp != c && band.leq(cp, c) && band.sim(cp, s, a)) first_at_c = false;
      }
      if (first_at_c) sets[static_cast<std::size_t>(c)].push_back(s);
    }
  }
  return sets;
}

SemWord delta_nu(const SupportQuotient& quotient, const NuMap& numap, const AncestorTree& tree,
                 int s) {
  if (tree.parent[static_cast<std::size_t>(s)] < 0)
    throw std::invalid_argument("delta_nu: undefined for the identity");
  const int cs = quotient.class_of[static_cast<std::size_t>(s)];
  const int ca =
      quotient.class_of[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(s)])];
  return sem_difference(numap.image[static_cast<std::size_t>(cs)],
                        numap.image[static_cast<std::size_t>(ca)]);
}

}  // namespace lrb
