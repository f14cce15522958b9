#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lrb/band.hpp"
#include "lrb/words.hpp"

namespace lrb {

/// The three-element left regular band separating quasi-variety members:
/// two left zeros and a neutral element.
enum : int { kH3Plus = 0, kH3Minus = 1, kH3Zero = 2 };
int h3_mul(int a, int b);
char h3_name(int a);

/// One separating homomorphism into the three-element band.
struct QvarCertificate {
  int s1;
  int s2;
  std::vector<int> hom;  // element -> H3 value
};

struct QvarResult {
  bool member = false;
  std::optional<std::pair<int, int>> witness;  // inseparable pair, when not a member
  std::vector<QvarCertificate> certificates;   // one per pair, when a member
};

/// Membership in the quasi-variety of the free band: every pair of distinct
/// elements must admit a homomorphism to the three-element band separating
/// it (homomorphisms need not preserve the identity). Each certificate is
/// re-verified before it is returned.
QvarResult qvar_membership(const Band& band);

/// Same decision, but separating homomorphisms are first constructed from
/// witness words (per-letter assignments evaluated along each word) and the
/// backtracking search is only a fallback.
QvarResult qvar_membership(const Band& band, const std::vector<FreeWord>& hint_words);

}  // namespace lrb
