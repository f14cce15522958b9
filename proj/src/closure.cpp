#include "lrb/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrb {

std::variant<Closure, ClosureError> close_under_product(
    std::vector<FreeWord> seeds, bool adjoin_identity, const AlphabetRegistry& reg,
    std::size_t cap, const std::function<std::string(const FreeWord&)>& labeler) {
  std::vector<FreeWord> words;
  auto add = [&](const FreeWord& w) {
    if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
  };
  if (adjoin_identity) add(FreeWord{});
  for (const FreeWord& w : seeds) add(w);

  // fixpoint: each pass multiplies every pair with at least one word that
  // was new in the previous pass
  std::size_t processed = 0;
  while (processed < words.size()) {
    const std::size_t upto = words.size();
    for (std::size_t i = 0; i < upto; ++i) {
      for (std::size_t j = 0; j < upto; ++j) {
        if (i < processed && j < processed) continue;
        add(fw_product(words[i], words[j]));
        if (words.size() > cap)
          return ClosureError{ClosureError::Kind::CapExceeded, words.size()};
      }
    }
    processed = upto;
  }
  bool has_identity = std::find(words.begin(), words.end(), FreeWord{}) != words.end();
  if (!has_identity) return ClosureError{ClosureError::Kind::NoIdentity, words.size()};

  std::sort(words.begin(), words.end(), [&](const FreeWord& a, const FreeWord& b) {
    return canonical_compare(a, b, reg) < 0;
  });
  const int n = static_cast<int>(words.size());
  auto index_of = [&](const FreeWord& w) {
    auto it = std::find(words.begin(), words.end(), w);
    return static_cast<int>(it - words.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = index_of(
          fw_product(words[static_cast<std::size_t>(i)], words[static_cast<std::size_t>(j)]));

  std::vector<std::string> labels;
  for (const FreeWord& w : words) {
    if (labeler) {
      labels.push_back(labeler(w));
    } else if (w.empty()) {
      labels.push_back("e");
    } else {
      std::string s;
      for (LetterId a : w.letters) {
        const Letter& l = reg.letter(a);
        if (l.kind == Letter::Kind::Base)
          s += "a" + std::to_string(l.gen);
        else
          s += "t" + std::to_string(a);
      }
      labels.push_back(s);
    }
  }
  auto validated = Band::validate(std::move(table), n, 0, std::move(labels));
  if (std::holds_alternative<std::vector<AxiomViolation>>(validated))
    throw std::logic_error("close_under_product: closure failed band axioms");
  return Closure{std::get<Band>(std::move(validated)), std::move(words)};
}

}  // namespace lrb
