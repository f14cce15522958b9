#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrb/band.hpp"
#include "lrb/io.hpp"
#include "lrb/local_order.hpp"
#include "lrb/semilattice.hpp"
#include "lrb/words.hpp"

namespace lrb::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(LRB_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses and realizes a fixture; returns the table data without validating.
inline RealizedTable load_fixture_table(const std::string& name) {
  auto parsed = parse_band_document(slurp(fixture_path(name)));
  if (!std::holds_alternative<BandDocument>(parsed))
    throw std::runtime_error("fixture parse failed: " + name);
  auto realized = realize(std::get<BandDocument>(parsed));
  if (!std::holds_alternative<RealizedTable>(realized))
    throw std::runtime_error("fixture realize failed: " + name);
  return std::get<RealizedTable>(realized);
}

/// Loads and validates a fixture band; throws if it is not a valid band.
inline Band load_fixture(const std::string& name) {
  RealizedTable rt = load_fixture_table(name);
  auto checked = Band::validate(rt.table, rt.n, rt.identity, rt.labels);
  if (!std::holds_alternative<Band>(checked))
    throw std::runtime_error("fixture is not a valid band: " + name);
  return std::get<Band>(checked);
}

inline int index_of(const Band& band, const std::string& label) {
  for (int i = 0; i < band.size(); ++i)
    if (band.label(i) == label) return i;
  throw std::runtime_error("no element labelled " + label);
}

inline FreeWord word(AlphabetRegistry& reg, std::initializer_list<int> gens) {
  FreeWord w;
  for (int g : gens) w.letters.push_back(reg.base(g));
  return w;
}

inline FreeWord random_word(AlphabetRegistry& reg, std::mt19937_64& rng, int max_gen) {
  std::vector<int> pool(static_cast<std::size_t>(max_gen));
  for (int g = 1; g <= max_gen; ++g) pool[static_cast<std::size_t>(g - 1)] = g;
  std::shuffle(pool.begin(), pool.end(), rng);
  const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gen));
  FreeWord w;
  for (int i = 0; i < len; ++i) w.letters.push_back(reg.base(pool[static_cast<std::size_t>(i)]));
  return w;
}

/// Random finite join semilattice: the union closure of the principal ideals
/// of a random partial order, elements re-encoded as a join table. Rejects
/// draws larger than max_size.
inline FiniteSemilattice random_semilattice(std::mt19937_64& rng, int max_size) {
  for (;;) {
    const int k = 1 + static_cast<int>(rng() % 4);
    // random DAG reachability as a partial order
    std::vector<std::vector<bool>> below(static_cast<std::size_t>(k),
                                         std::vector<bool>(static_cast<std::size_t>(k), false));
    for (int i = 0; i < k; ++i) below[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (rng() % 2)
          for (int l = 0; l < k; ++l)
            if (below[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)])
              below[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] = true;
    // principal ideals as bitmasks, closed under union, with the empty set
    std::vector<unsigned> family{0u};
    auto add = [&](unsigned m) {
      if (std::find(family.begin(), family.end(), m) == family.end()) family.push_back(m);
    };
    for (int j = 0; j < k; ++j) {
      unsigned m = 0;
      for (int i = 0; i < k; ++i)
        if (below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) m |= 1u << i;
      add(m);
    }
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j) add(family[i] | family[j]);
    if (static_cast<int>(family.size()) > max_size) continue;
    std::sort(family.begin(), family.end());
    const int m = static_cast<int>(family.size());
    FiniteSemilattice sl;
    sl.m = m;
    sl.bottom = 0;
    sl.join.resize(static_cast<std::size_t>(m) * m);
    auto index_of = [&](unsigned v) {
      return static_cast<int>(std::lower_bound(family.begin(), family.end(), v) - family.begin());
    };
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        sl.join[static_cast<std::size_t>(x) * m + y] =
            index_of(family[static_cast<std::size_t>(x)] | family[static_cast<std::size_t>(y)]);
    return sl;
  }
}

/// Exhaustive enumeration of all order families satisfying the two
/// containment rules plus restriction consistency, filtered through the
/// definition-level verifier. Independent of the search in the library.
inline bool brute_force_llo_exists(const Band& band, const AncestorTree& tree,
                                   const SupportQuotient& quotient, const NuMap& numap,
                                   const std::vector<std::vector<int>>& ssets) {
  // distinct set values; equal sets must share an order anyway
  std::vector<std::vector<int>> values;
  std::vector<int> group_of(static_cast<std::size_t>(band.size()), -1);
  for (int b = 0; b < band.size(); ++b) {
    if (b == band.identity()) continue;
    const auto& s = ssets[static_cast<std::size_t>(b)];
    auto it = std::find(values.begin(), values.end(), s);
    if (it == values.end()) {
      values.push_back(s);
      it = values.end() - 1;
    }
    group_of[static_cast<std::size_t>(b)] = static_cast<int>(it - values.begin());
  }
  std::vector<std::vector<int>> perm(values.size());
  for (std::size_t g = 0; g < values.size(); ++g) perm[g] = values[g];

  std::function<bool(std::size_t)> rec = [&](std::size_t g) -> bool {
    if (g == values.size()) {
      LocalLinearOrder llo;
      llo.order_of.assign(static_cast<std::size_t>(band.size()), {});
      for (int b = 0; b < band.size(); ++b)
        if (b != band.identity())
          llo.order_of[static_cast<std::size_t>(b)] =
              perm[static_cast<std::size_t>(group_of[static_cast<std::size_t>(b)])];
      return !verify_local_linear_order(band, tree, quotient, numap, ssets, llo).has_value();
    }
    std::vector<int> p = values[g];
    std::sort(p.begin(), p.end());
    do {
      perm[g] = p;
      if (rec(g + 1)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  };
  return rec(0);
}

}  // namespace lrb::test
