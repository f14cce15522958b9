#include "lrb/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lrb/closure.hpp"
#include "lrb/embedder.hpp"
#include "lrb/isomorphism.hpp"
#include "lrb/local_order.hpp"
#include "lrb/qvar.hpp"

namespace lrb {

namespace {

// DFS over the free cells of the inner table with forced-cell propagation:
// setting xy = v forces (v)x = v and x(v) = v, and every fully determined
// associativity triple is checked on the spot.
struct TableSearch {
  int k;
  int n;  // k + 1, identity at 0
  std::vector<int> t;
  const std::function<void(const std::vector<int>&)>* emit;

  int get(int x, int y) const { return t[static_cast<std::size_t>(x) * n + y]; }
  void set(int x, int y, int v) { t[static_cast<std::size_t>(x) * n + y] = v; }

  bool assign(int x, int y, int v, std::vector<std::pair<int, int>>& log) {
    const int cur = get(x, y);
    if (cur != -1) return cur == v;
    set(x, y, v);
    log.emplace_back(x, y);
    // left regularity (xy)x = xy and absorption x(xy) = xy
    if (!assign(v, x, v, log)) return false;
    if (!assign(x, v, v, log)) return false;
    // associativity on every triple this cell completes
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = get(a, b);
        if (ab == -1) continue;
        for (int c = 0; c < n; ++c) {
          const int bc = get(b, c);
          if (bc == -1) continue;
          const int left = get(ab, c);
          const int right = get(a, bc);
          if (left != -1 && right != -1 && left != right) return false;
        }
      }
    }
    return true;
  }

  void dfs(int cell) {
    const int cells = k * k;
    while (cell < cells) {
      const int x = cell / k + 1;
      const int y = cell % k + 1;
      if (get(x, y) == -1) break;
      ++cell;
    }
    if (cell == cells) {
      (*emit)(t);
      return;
    }
    const int x = cell / k + 1;
    const int y = cell % k + 1;
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> log;
      if (assign(x, y, v, log)) dfs(cell + 1);
      for (auto [a, b] : log) set(a, b, -1);
    }
  }
};

}  // namespace

void enumerate_lrb_tables(int k, const std::function<void(const std::vector<int>&)>& fn) {
  const int n = k + 1;
  auto emit = std::function<void(const std::vector<int>&)>([&](const std::vector<int>& t) {
    // completed tables satisfy the local checks; run the full validator to
    // be safe before handing them out
    auto checked = Band::validate(t, n, 0);
    if (std::holds_alternative<Band>(checked)) fn(t);
  });
  TableSearch s;
  s.k = k;
  s.n = n;
  s.t.assign(static_cast<std::size_t>(n) * n, -1);
  s.emit = &emit;
  for (int x = 0; x < n; ++x) {
    s.set(0, x, x);
    s.set(x, 0, x);
    s.set(x, x, x);
  }
  s.dfs(0);
}

void census(int max_nonidentity, const std::function<void(const CensusRecord&)>& fn) {
  for (int k = 0; k <= max_nonidentity; ++k) {
    long index = 0;
    enumerate_lrb_tables(k, [&](const std::vector<int>& table) {
      CensusRecord rec;
      rec.k = k;
      rec.index = index++;
      std::ostringstream digits;
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) digits << table[static_cast<std::size_t>(i) * (k + 1) + j];
      rec.table = digits.str();
      Verdict v = decide_embeddable(table, k + 1, 0);
      switch (v.kind) {
        case Verdict::Kind::NotLrb: rec.verdict = "not-lrb"; break;
        case Verdict::Kind::NotRightHereditary: rec.verdict = "not-right-hereditary"; break;
        case Verdict::Kind::NoLocalLinearOrder: rec.verdict = "no-local-linear-order"; break;
        case Verdict::Kind::Embeddable: rec.verdict = "embeddable"; break;
      }
      if (v.kind == Verdict::Kind::Embeddable) {
        rec.rounds = v.rounds;
        rec.rank = v.rank;
        rec.llo_fast_path = v.llo_fast_path;
      }
      auto checked = Band::validate(table, k + 1, 0);
      rec.qvar = qvar_membership(std::get<Band>(checked)).member;
      fn(rec);
    });
  }
}

FuzzSummary fuzz_subbands(std::uint64_t seed, int count, int max_generators, int max_seeds,
                          std::size_t cap, std::ostream* log) {
  FuzzSummary summary;
  summary.cases = count;
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i));
    AlphabetRegistry reg;
    std::vector<int> gens(static_cast<std::size_t>(max_generators));
    for (int g = 1; g <= max_generators; ++g) gens[static_cast<std::size_t>(g - 1)] = g;

    const int nseeds = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_seeds));
    std::vector<FreeWord> seeds;
    for (int s = 0; s < nseeds; ++s) {
      std::vector<int> pool = gens;
      std::shuffle(pool.begin(), pool.end(), rng);
      const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_generators));
      FreeWord w;
      for (int l = 0; l < len; ++l) w.letters.push_back(reg.base(pool[static_cast<std::size_t>(l)]));
      seeds.push_back(std::move(w));
    }

    auto fail = [&](const std::string& what) {
      summary.failures.push_back({seed, i, what});
      if (log) *log << "fuzz case " << i << " (seed " << seed << "): " << what << '\n';
    };

    auto closed = close_under_product(seeds, true, reg, cap);
    if (std::holds_alternative<ClosureError>(closed)) {
      ++summary.skipped;
      if (log) *log << "fuzz case " << i << ": closure cap exceeded, skipped\n";
      continue;
    }
    Closure clo = std::get<Closure>(std::move(closed));

    try {
      auto tree_or = ancestor_tree(clo.band);
      if (std::holds_alternative<NotRightHereditaryWitness>(tree_or)) {
        fail("closure is not right hereditary");
        continue;
      }
      const AncestorTree& tree = std::get<AncestorTree>(tree_or);
      const auto sets = s_sets(clo.band, tree);
      const SupportQuotient quotient = support_quotient(clo.band);
      const NuMap numap = nu(quotient.semilattice);

      LocalLinearOrder canonical = subband_local_order(clo.band, tree, sets, clo.words, reg);
      if (auto bad =
              verify_local_linear_order(clo.band, tree, quotient, numap, sets, canonical)) {
        fail("suffix-word local order failed verification (condition " +
             std::to_string(bad->condition) + ")");
        continue;
      }

      Verdict v = decide_embeddable(clo.band);
      if (v.kind != Verdict::Kind::Embeddable) {
        fail("decision pipeline rejected a subband of the free band");
        continue;
      }

      auto back = close_under_product(v.map->image, true, v.map->registry, cap * 4);
      if (std::holds_alternative<ClosureError>(back)) {
        fail("witness closure exceeded cap");
        continue;
      }
      const Closure& image = std::get<Closure>(back);
      if (!bands_isomorphic(image.band, clo.band)) {
        fail("witness closure is not isomorphic to the input band");
        continue;
      }

      // the witness closure is itself a subband of the free band, so its
      // canonical suffix-word order must verify as well
      auto image_tree_or = ancestor_tree(image.band);
      if (std::holds_alternative<NotRightHereditaryWitness>(image_tree_or)) {
        fail("witness closure is not right hereditary");
        continue;
      }
      const AncestorTree& image_tree = std::get<AncestorTree>(image_tree_or);
      const auto image_sets = s_sets(image.band, image_tree);
      const SupportQuotient image_quotient = support_quotient(image.band);
      const NuMap image_numap = nu(image_quotient.semilattice);
      const LocalLinearOrder image_llo = subband_local_order(
          image.band, image_tree, image_sets, image.words, v.map->registry);
      if (verify_local_linear_order(image.band, image_tree, image_quotient, image_numap,
                                    image_sets, image_llo)) {
        fail("suffix-word order of the witness closure failed verification");
        continue;
      }

      if (!qvar_membership(clo.band, clo.words).member) {
        fail("embeddable band failed quasi-variety membership");
        continue;
      }
    } catch (const std::exception& ex) {
      fail(std::string("exception: ") + ex.what());
      continue;
    }
    ++summary.passed;
  }
  return summary;
}

}  // namespace lrb
