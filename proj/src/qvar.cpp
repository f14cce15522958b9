#include "lrb/qvar.hpp"

#include <algorithm>

namespace lrb {

int h3_mul(int a, int b) { return a == kH3Zero ? b : a; }

char h3_name(int a) { return a == kH3Plus ? '+' : a == kH3Minus ? '-' : '0'; }

namespace {

bool is_separating_hom(const Band& band, const std::vector<int>& f, int s1, int s2) {
  if (f[static_cast<std::size_t>(s1)] == f[static_cast<std::size_t>(s2)]) return false;
  for (int x = 0; x < band.size(); ++x)
    for (int y = 0; y < band.size(); ++y)
      if (f[static_cast<std::size_t>(band.mul(x, y))] !=
          h3_mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

// Assign elements one by one; whenever both factors of a product are known
// the product's value is forced, so conflicts surface early.
bool search(const Band& band, const std::vector<int>& order, std::size_t at, std::vector<int>& f,
            int s1, int s2) {
  const int n = band.size();
  if (at == order.size()) return is_separating_hom(band, f, s1, s2);
  const int v = order[at];
  if (f[static_cast<std::size_t>(v)] != -1) return search(band, order, at + 1, f, s1, s2);
  for (int val = 0; val < 3; ++val) {
    std::vector<int> g = f;
    g[static_cast<std::size_t>(v)] = val;
    bool ok = true;
    // propagate forced products to a fixpoint
    for (bool changed = true; changed && ok;) {
      changed = false;
      for (int x = 0; x < n && ok; ++x) {
        if (g[static_cast<std::size_t>(x)] == -1) continue;
        for (int y = 0; y < n && ok; ++y) {
          if (g[static_cast<std::size_t>(y)] == -1) continue;
          const int want = h3_mul(g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)]);
          int& slot = g[static_cast<std::size_t>(band.mul(x, y))];
          if (slot == -1) {
            slot = want;
            changed = true;
          } else if (slot != want) {
            ok = false;
          }
        }
      }
    }
    if (ok && g[static_cast<std::size_t>(s1)] != -1 && g[static_cast<std::size_t>(s2)] != -1 &&
        g[static_cast<std::size_t>(s1)] == g[static_cast<std::size_t>(s2)])
      ok = false;
    if (ok && search(band, order, at + 1, g, s1, s2)) {
      f = std::move(g);
      return true;
    }
  }
  return false;
}

std::optional<std::vector<int>> separate_by_search(const Band& band, int s1, int s2) {
  std::vector<int> order{s1, s2};
  for (int v = 0; v < band.size(); ++v)
    if (v != s1 && v != s2) order.push_back(v);
  std::vector<int> f(static_cast<std::size_t>(band.size()), -1);
  if (search(band, order, 0, f, s1, s2)) return f;
  return std::nullopt;
}

// Evaluate a per-letter assignment along a word: the first letter with a
// non-neutral value decides, otherwise neutral.
int eval_word(const FreeWord& w, const std::vector<int>& letter_val) {
  for (LetterId a : w.letters) {
    const int v = letter_val[static_cast<std::size_t>(a)];
    if (v != kH3Zero) return v;
  }
  return kH3Zero;
}

std::optional<std::vector<int>> separate_by_words(const Band& band,
                                                  const std::vector<FreeWord>& words, int s1,
                                                  int s2) {
  const FreeWord& w1 = words[static_cast<std::size_t>(s1)];
  const FreeWord& w2 = words[static_cast<std::size_t>(s2)];
  if (w1 == w2) return std::nullopt;
  int max_letter = -1;
  for (const FreeWord& w : words)
    for (LetterId a : w.letters) max_letter = std::max(max_letter, a);
  std::vector<int> letter_val(static_cast<std::size_t>(max_letter + 1), kH3Zero);
  const auto set1 = letter_set(w1);
  const auto set2 = letter_set(w2);
  if (set1 != set2) {
    std::vector<LetterId> diff;
    std::set_symmetric_difference(set1.begin(), set1.end(), set2.begin(), set2.end(),
                                  std::back_inserter(diff));
    letter_val[static_cast<std::size_t>(diff.front())] = kH3Minus;
  } else {
    std::size_t i = 0;
    while (w1.letters[i] == w2.letters[i]) ++i;
    letter_val[static_cast<std::size_t>(w1.letters[i])] = kH3Plus;
    letter_val[static_cast<std::size_t>(w2.letters[i])] = kH3Minus;
  }
  std::vector<int> f;
  f.reserve(words.size());
  for (const FreeWord& w : words) f.push_back(eval_word(w, letter_val));
  if (!is_separating_hom(band, f, s1, s2)) return std::nullopt;
  return f;
}

QvarResult run(const Band& band, const std::vector<FreeWord>* hints) {
  QvarResult out;
  for (int s1 = 0; s1 < band.size(); ++s1) {
    for (int s2 = s1 + 1; s2 < band.size(); ++s2) {
      std::optional<std::vector<int>> f;
      if (hints) f = separate_by_words(band, *hints, s1, s2);
      if (!f) f = separate_by_search(band, s1, s2);
      if (!f || !is_separating_hom(band, *f, s1, s2)) {
        out.member = false;
        out.witness = std::make_pair(s1, s2);
        out.certificates.clear();
        return out;
      }
      out.certificates.push_back(QvarCertificate{s1, s2, std::move(*f)});
    }
  }
  out.member = true;
  return out;
}

}  // namespace

QvarResult qvar_membership(const Band& band) { return run(band, nullptr); }

QvarResult qvar_membership(const Band& band, const std::vector<FreeWord>& hint_words) {
  return run(band, &hint_words);
}

}  // namespace lrb
