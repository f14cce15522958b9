#include "lrb/embedder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lrb {

namespace {

[[noreturn]] void fault(const std::string& what) { throw std::logic_error("lrb: " + what); }

bool comparable(const FreeWord& a, const FreeWord& b) { return fw_leq(a, b) || fw_leq(b, a); }

std::optional<EmbedFailure> check_homomorphism(const ElementMap& map, const Band& band) {
  for (int x = 0; x < band.size(); ++x)
    for (int y = 0; y < band.size(); ++y) {
      const FreeWord prod = fw_product(map.image[static_cast<std::size_t>(x)],
                                       map.image[static_cast<std::size_t>(y)]);
      if (!(prod == map.image[static_cast<std::size_t>(band.mul(x, y))]))
        return EmbedFailure{EmbedFailure::Kind::NotHomomorphism, x, y};
    }
  return std::nullopt;
}

}  // namespace

Schedule chi(const Band&, const AncestorTree& tree,
             const std::vector<std::vector<int>>&, const LocalLinearOrder& llo, int c) {
  std::vector<int> chain;  // ancestors of c from the root down, excluding the identity
  for (int v = c; tree.parent[static_cast<std::size_t>(v)] >= 0;
       v = tree.parent[static_cast<std::size_t>(v)])
    chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  Schedule out;
  std::set<int> seen;
  for (int owner : chain) {
    for (int y : llo.order_of[static_cast<std::size_t>(owner)]) {
      if (!seen.insert(y).second)
        fault("chi: element repeats across owners on one ancestor chain");
      out.entries.emplace_back(y, owner);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> kernel(const ElementMap& map) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(map.image.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (map.image[static_cast<std::size_t>(i)] == map.image[static_cast<std::size_t>(j)])
        out.emplace_back(i, j);
  return out;
}

ElementMap build_h(const Band& band, const AncestorTree& tree, const SupportQuotient& quotient,
                   const NuMap& numap, const std::vector<std::vector<int>>&,
                   const LocalLinearOrder& llo) {
  ElementMap map;
  map.image.assign(static_cast<std::size_t>(band.size()), FreeWord{});
  std::vector<LetterId> letter_of(static_cast<std::size_t>(quotient.semilattice.m));
  for (int t = 0; t < quotient.semilattice.m; ++t)
    letter_of[static_cast<std::size_t>(t)] =
        map.registry.base(numap.gen_of_class[static_cast<std::size_t>(t)]);

  for (int c : tree.bfs) {
    if (c == band.identity()) continue;
    FreeWord w = map.image[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(c)])];
    for (int y : llo.order_of[static_cast<std::size_t>(c)]) {
      const SemWord d = delta_nu(quotient, numap, tree, y);
      w = fw_product(w, to_sorted_word(d, letter_of, map.registry));
    }
    map.image[static_cast<std::size_t>(c)] = std::move(w);
  }

  if (check_homomorphism(map, band))
    fault("build_h: not a homomorphism (invalid local linear order)");
  for (int c = 0; c < band.size(); ++c) {
    std::vector<LetterId> have = letter_set(map.image[static_cast<std::size_t>(c)]);
    std::vector<LetterId> want;
    for (int t :
         numap.image[static_cast<std::size_t>(quotient.class_of[static_cast<std::size_t>(c)])]
             .letters)
      want.push_back(letter_of[static_cast<std::size_t>(t)]);
    std::sort(want.begin(), want.end());
    if (have != want) fault("build_h: image letters disagree with the nu support");
  }
  for (int a = 0; a < band.size(); ++a)
    for (int b = 0; b < band.size(); ++b)
      if (band.leq(a, b) && !fw_leq(map.image[static_cast<std::size_t>(a)],
                                    map.image[static_cast<std::size_t>(b)]))
        fault("build_h: order not preserved");
  return map;
}

ElementMap modification(const ElementMap& map, const Band& band, const AncestorTree& tree,
                        int c) {
  const int n = band.size();
  const auto& descendants = tree.children[static_cast<std::size_t>(c)];
  if (descendants.empty()) fault("modification: element has no descendants");

  // letters occurring in some image but not in image(c)
  std::set<LetterId> in_c(map.image[static_cast<std::size_t>(c)].letters.begin(),
                          map.image[static_cast<std::size_t>(c)].letters.end());
  std::set<LetterId> replaced;
  for (const FreeWord& w : map.image)
    for (LetterId a : w.letters)
      if (!in_c.count(a)) replaced.insert(a);

  ElementMap next = map;
  next.rounds = map.rounds + 1;
  const int round = next.rounds;

  const LetterId t_empty = next.registry.fresh(c, Letter::kEmptyTag, round);
  std::vector<LetterId> t_of(descendants.size());
  for (std::size_t i = 0; i < descendants.size(); ++i)
    t_of[i] = next.registry.fresh(c, descendants[i], round);
  std::vector<LetterId> t_prime;  // t^empty then the descendant letters in index order
  t_prime.push_back(t_empty);
  for (LetterId t : t_of) t_prime.push_back(t);

  // bucket of every element: index into descendants, or empty (-2); -1 = untouched
  std::vector<int> bucket(static_cast<std::size_t>(n), -1);
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  for (int s = 0; s < n; ++s)
    for (LetterId a : map.image[static_cast<std::size_t>(s)].letters)
      if (replaced.count(a)) touched[static_cast<std::size_t>(s)] = true;
  for (std::size_t i = 0; i < descendants.size(); ++i) {
    const int b = descendants[i];
    for (int s = 0; s < n; ++s) {
      bool member = false;
      for (int y = 0; y < n && !member; ++y)
        if (band.leq(b, y) && band.mul(c, s) == band.mul(y, s)) member = true;
      if (!member) continue;
      if (bucket[static_cast<std::size_t>(s)] != -1)
        fault("modification: descendant classes are not disjoint");
      if (!touched[static_cast<std::size_t>(s)])
        fault("modification: descendant class member carries no replaced letter");
      bucket[static_cast<std::size_t>(s)] = static_cast<int>(i);
    }
  }
  for (int s = 0; s < n; ++s)
    if (touched[static_cast<std::size_t>(s)] && bucket[static_cast<std::size_t>(s)] == -1)
      bucket[static_cast<std::size_t>(s)] = -2;

  for (int s = 0; s < n; ++s) {
    if (!touched[static_cast<std::size_t>(s)]) continue;
    const LetterId tag =
        bucket[static_cast<std::size_t>(s)] == -2
            ? t_empty
            : t_of[static_cast<std::size_t>(bucket[static_cast<std::size_t>(s)])];
    FreeWord rewritten;
    auto append = [&](LetterId a) {
      if (!rewritten.contains(a)) rewritten.letters.push_back(a);
    };
    for (LetterId a : map.image[static_cast<std::size_t>(s)].letters) {
      append(a);
      if (replaced.count(a)) {
        append(tag);
        for (LetterId t : t_prime) append(t);
      }
    }
    next.image[static_cast<std::size_t>(s)] = std::move(rewritten);
  }

  if (check_homomorphism(next, band)) fault("modification: result is not a homomorphism");
  for (std::size_t i = 0; i < descendants.size(); ++i)
    for (std::size_t j = i + 1; j < descendants.size(); ++j)
      if (comparable(next.image[static_cast<std::size_t>(descendants[i])],
                     next.image[static_cast<std::size_t>(descendants[j])]))
        fault("modification: descendant images stayed comparable");
  const auto ker_before = kernel(map);
  const auto ker_after = kernel(next);
  if (!std::includes(ker_before.begin(), ker_before.end(), ker_after.begin(), ker_after.end()) ||
      ker_after.size() >= ker_before.size())
    fault("modification: kernel did not strictly shrink");
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!comparable(map.image[static_cast<std::size_t>(x)],
                      map.image[static_cast<std::size_t>(y)]) &&
          comparable(next.image[static_cast<std::size_t>(x)],
                     next.image[static_cast<std::size_t>(y)]))
        fault("modification: incomparable images became comparable");
  return next;
}

ElementMap run_embedding_algorithm(const Band& band, const AncestorTree& tree,
                                   const SupportQuotient& quotient, const NuMap& numap,
                                   const std::vector<std::vector<int>>& ssets,
                                   const LocalLinearOrder& llo, std::vector<RoundTrace>* trace) {
  ElementMap map = build_h(band, tree, quotient, numap, ssets, llo);
  if (trace) trace->push_back(RoundTrace{0, -1, map.image, kernel(map)});
  const int bound = static_cast<int>(kernel(map).size()) + 1;
  for (;;) {
    int pick = -1;
    for (int c : tree.bfs) {
      const auto& ch = tree.children[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < ch.size() && pick < 0; ++i)
        for (std::size_t j = i + 1; j < ch.size() && pick < 0; ++j)
          if (comparable(map.image[static_cast<std::size_t>(ch[i])],
                         map.image[static_cast<std::size_t>(ch[j])]))
            pick = c;
      if (pick >= 0) break;
    }
    if (pick < 0) break;
    map = modification(map, band, tree, pick);
    if (map.rounds > bound) fault("run_embedding_algorithm: round bound exceeded");
    if (trace) trace->push_back(RoundTrace{map.rounds, pick, map.image, kernel(map)});
  }
  return map;
}

std::optional<EmbedFailure> verify_embedding(const ElementMap& map, const Band& band) {
  if (auto bad = check_homomorphism(map, band)) return bad;
  const auto ker = kernel(map);
  if (!ker.empty())
    return EmbedFailure{EmbedFailure::Kind::NotInjective, ker.front().first, ker.front().second};
  return std::nullopt;
}

Verdict decide_embeddable(const Band& band) {
  Verdict v{Verdict::Kind::Embeddable, {}, std::nullopt, std::nullopt,
            std::nullopt, std::nullopt, 0,  0,           false};
  auto tree_or = ancestor_tree(band);
  if (std::holds_alternative<NotRightHereditaryWitness>(tree_or)) {
    v.kind = Verdict::Kind::NotRightHereditary;
    v.witness = std::get<NotRightHereditaryWitness>(tree_or);
    return v;
  }
  const AncestorTree& tree = std::get<AncestorTree>(tree_or);
  const SupportQuotient quotient = support_quotient(band);
  const NuMap numap = nu(quotient.semilattice);
  const auto sets = s_sets(band, tree);
  LloSearch search = find_local_linear_order(band, tree, quotient, numap, sets);
  if (!search.llo) {
    v.kind = Verdict::Kind::NoLocalLinearOrder;
    v.order_conflict = search.conflict;
    return v;
  }
  v.llo_fast_path = search.fast_path;
  ElementMap map = run_embedding_algorithm(band, tree, quotient, numap, sets, *search.llo);
  if (auto bad = verify_embedding(map, band))
    throw std::logic_error("decide_embeddable: refined map failed verification");
  v.rounds = map.rounds;
  std::set<LetterId> used;
  for (const FreeWord& w : map.image) used.insert(w.letters.begin(), w.letters.end());
  v.rank = static_cast<int>(used.size());
  v.llo = std::move(*search.llo);
  v.map = std::move(map);
  return v;
}

Verdict decide_embeddable(std::vector<int> table, int n, int identity,
                          std::vector<std::string> labels) {
  auto checked = Band::validate(std::move(table), n, identity, std::move(labels));
  if (std::holds_alternative<std::vector<AxiomViolation>>(checked)) {
    Verdict v{Verdict::Kind::NotLrb,
              std::get<std::vector<AxiomViolation>>(std::move(checked)),
              std::nullopt,
              std::nullopt,
              std::nullopt,
              std::nullopt,
              0,
              0,
              false};
    return v;
  }
  return decide_embeddable(std::get<Band>(checked));
}

}  // namespace lrb
