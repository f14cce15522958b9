#include "lrb/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrb {

namespace {
constexpr std::int64_t kFreshRankBase = std::int64_t{1} << 32;
}

LetterId AlphabetRegistry::base(int gen) {
  if (gen < 1) throw std::invalid_argument("base letter index must be >= 1");
  auto key = std::make_tuple(0, gen, 0, 0);
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;
  LetterId id = static_cast<LetterId>(letters_.size());
  letters_.push_back(Letter{Letter::Kind::Base, gen, -1, -1, 0});
  rank_.push_back(gen);
  intern_.emplace(key, id);
  return id;
}

LetterId AlphabetRegistry::fresh(int owner, int tag, int round) {
  auto key = std::make_tuple(1, owner, tag, round);
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;
  LetterId id = static_cast<LetterId>(letters_.size());
  letters_.push_back(Letter{Letter::Kind::Fresh, 0, owner, tag, round});
  rank_.push_back(kFreshRankBase + fresh_seq_++);
  intern_.emplace(key, id);
  return id;
}

bool FreeWord::contains(LetterId a) const {
  return std::find(letters.begin(), letters.end(), a) != letters.end();
}

SemWord SemWord::of(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return SemWord{std::move(xs)};
}

bool SemWord::contains(int a) const {
  return std::binary_search(letters.begin(), letters.end(), a);
}

SemWord sem_union(const SemWord& a, const SemWord& b) {
  SemWord out;
  std::set_union(a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end(),
                 std::back_inserter(out.letters));
  return out;
}

SemWord sem_difference(const SemWord& a, const SemWord& b) {
  SemWord out;
  std::set_difference(a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end(),
                      std::back_inserter(out.letters));
  return out;
}

bool sem_subset(const SemWord& a, const SemWord& b) {
  return std::includes(b.letters.begin(), b.letters.end(), a.letters.begin(), a.letters.end());
}

bool sem_proper_subset(const SemWord& a, const SemWord& b) {
  return a.letters.size() < b.letters.size() && sem_subset(a, b);
}

FreeWord fw_product(const FreeWord& w1, const FreeWord& w2) {
  FreeWord out = w1;
  for (LetterId a : w2.letters) {
    if (!out.contains(a)) out.letters.push_back(a);
  }
  return out;
}

bool fw_leq(const FreeWord& w1, const FreeWord& w2) {
  if (w1.size() > w2.size()) return false;
  return std::equal(w1.letters.begin(), w1.letters.end(), w2.letters.begin());
}

bool fw_preceq(const FreeWord& w1, const FreeWord& w2) {
  for (LetterId a : w1.letters) {
    if (!w2.contains(a)) return false;
  }
  return true;
}

std::vector<LetterId> letter_set(const FreeWord& w) {
  std::vector<LetterId> s = w.letters;
  std::sort(s.begin(), s.end());
  return s;
}

int canonical_compare(const FreeWord& a, const FreeWord& b, const AlphabetRegistry& reg) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  auto rank_sorted = [&](const FreeWord& w) {
    std::vector<LetterId> s = w.letters;
    std::sort(s.begin(), s.end(), [&](LetterId x, LetterId y) { return reg.rank_less(x, y); });
    return s;
  };
  std::vector<LetterId> sa = rank_sorted(a), sb = rank_sorted(b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] != sb[i]) return reg.rank_less(sa[i], sb[i]) ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.letters[i] != b.letters[i])
      return reg.rank_less(a.letters[i], b.letters[i]) ? -1 : 1;
  }
  return 0;
}

FreeWord to_sorted_word(const SemWord& s, const std::vector<LetterId>& letter_of,
                        const AlphabetRegistry& reg) {
  FreeWord out;
  for (int a : s.letters) out.letters.push_back(letter_of.at(static_cast<std::size_t>(a)));
  std::sort(out.letters.begin(), out.letters.end(),
            [&](LetterId x, LetterId y) { return reg.rank_less(x, y); });
  for (std::size_t i = 1; i < out.letters.size(); ++i) {
    if (out.letters[i] == out.letters[i - 1])
      throw std::invalid_argument("letter mapping is not injective on the word");
  }
  return out;
}

FreeWord delta_word(const FreeWord& x, const FreeWord& parent) {
  if (parent.size() >= x.size() || !fw_leq(parent, x))
    throw std::invalid_argument("delta_word: parent is not a proper prefix");
  FreeWord out;
  out.letters.assign(x.letters.begin() + static_cast<std::ptrdiff_t>(parent.size()),
                     x.letters.end());
  return out;
}

std::optional<LetterId> separator(const FreeWord& dx, const FreeWord& dy, const FreeWord& b) {
  std::vector<LetterId> sx = letter_set(dx), sy = letter_set(dy);
  if (sx == sy) throw std::invalid_argument("separator: identical letter sets");
  auto in = [](const std::vector<LetterId>& s, LetterId a) {
    return std::binary_search(s.begin(), s.end(), a);
  };
  for (LetterId a : dx.letters) {
    if (!b.contains(a)) throw std::invalid_argument("separator: letter of dx missing from b");
  }
  for (LetterId a : dy.letters) {
    if (!b.contains(a)) throw std::invalid_argument("separator: letter of dy missing from b");
  }
  // Last position in b of any letter from dx \ dy; a separator must occur
  // strictly after every such position.
  std::ptrdiff_t last_dx = -1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    LetterId a = b.letters[i];
    if (in(sx, a) && !in(sy, a)) last_dx = static_cast<std::ptrdiff_t>(i);
  }
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(b.size()) - 1; i > last_dx; --i) {
    LetterId a = b.letters[static_cast<std::size_t>(i)];
    if (in(sy, a) && !in(sx, a)) return a;
  }
  return std::nullopt;
}

}  // namespace lrb
