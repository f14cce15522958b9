#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lrb/band.hpp"
#include "lrb/words.hpp"

namespace lrb {

/// A family of linear orders, one per nonidentity element b, over the sets
/// S_b. order_of[b] is a permutation of S_b; the identity's slot is empty.
struct LocalLinearOrder {
  std::vector<std::vector<int>> order_of;
};

/// A pair forced both ways inside some S_b; no order family can exist.
struct PairConflict {
  int b;
  int x;
  int y;
};

/// The pairs forced by the two containment rules, per owner b:
///  (1) delta_nu(x) strictly contained in delta_nu(y) puts x first;
///  (2) support(x) below support(ancestor(y)) puts x first.
struct BaseConstraints {
  std::vector<std::vector<std::pair<int, int>>> forced;
  std::optional<PairConflict> conflict;
};

BaseConstraints base_constraints(const Band& band, const AncestorTree& tree,
                                 const SupportQuotient& quotient, const NuMap& numap,
                                 const std::vector<std::vector<int>>& ssets);

/// First violated condition of a proposed family, or nullopt when valid.
/// condition: 0 = order_of[b] not a permutation of S_b, 1/2 = containment
/// rules above, 3 = restriction consistency (then c is the superset owner).
struct LloViolation {
  int condition;
  int b;
  int c;
  int x;
  int y;
};

std::optional<LloViolation> verify_local_linear_order(const Band& band, const AncestorTree& tree,
                                                      const SupportQuotient& quotient,
                                                      const NuMap& numap,
                                                      const std::vector<std::vector<int>>& ssets,
                                                      const LocalLinearOrder& llo);

/// Search result. fast_path reports whether the single-digraph shortcut
/// decided; otherwise the complete backtracking search ran.
struct LloSearch {
  std::optional<LocalLinearOrder> llo;
  bool fast_path = false;
  std::optional<PairConflict> conflict;
};

/// Two tiers. Fast path: union all forced pairs into one digraph on the
/// nonidentity elements; if acyclic, restrictions of any topological order
/// satisfy all three conditions. Complete fallback: exhaustive backtracking
/// over per-set orientations with inclusion coupling, so an empty result
/// means no family exists. Free pairs break ties by element index.
LloSearch find_local_linear_order(const Band& band, const AncestorTree& tree,
                                  const SupportQuotient& quotient, const NuMap& numap,
                                  const std::vector<std::vector<int>>& ssets);

/// The canonical local linear order of a finite subband of the free band,
/// built from suffix words: distinct suffix letter sets are ordered by the
/// separator test on the word of b, equal ones by reverse canonical order.
/// Throws std::logic_error if the pairwise comparator is undecided or
/// inconsistent (non-subband input).
LocalLinearOrder subband_local_order(const Band& band, const AncestorTree& tree,
                                     const std::vector<std::vector<int>>& ssets,
                                     const std::vector<FreeWord>& words,
                                     const AlphabetRegistry& reg);

namespace detail {

/// Complete search for a family of linear orders over an arbitrary family of
/// sets: one order per owner, respecting forced(x, y) (+1 x first, -1 y
/// first, 0 free) and restriction consistency along set inclusions.
/// Exposed for direct testing of the fallback machinery.
std::optional<std::vector<std::vector<int>>> order_family_search(
    const std::vector<std::vector<int>>& sets, const std::function<int(int, int)>& forced);

}  // namespace detail

}  // namespace lrb
