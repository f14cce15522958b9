#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lrb/band.hpp"
#include "lrb/local_order.hpp"
#include "lrb/words.hpp"

namespace lrb {

/// The flattening of the recursive vector chi(c): along the ancestor chain
/// of c, each owner's S-set in its local order. entries are (element, owner).
struct Schedule {
  std::vector<std::pair<int, int>> entries;
};

/// chi(c). Throws std::logic_error if an element repeats across owners on
/// one chain (inconsistent S-sets).
Schedule chi(const Band& band, const AncestorTree& tree,
             const std::vector<std::vector<int>>& ssets, const LocalLinearOrder& llo, int c);

/// The (partial) embedding: band element -> free word, with the alphabet
/// that owns the letters and the number of refinement rounds applied so far.
struct ElementMap {
  std::vector<FreeWord> image;
  AlphabetRegistry registry;
  int rounds = 0;
};

/// All unordered pairs of distinct elements with equal images, sorted.
std::vector<std::pair<int, int>> kernel(const ElementMap& map);

/// The base homomorphism: image(c) extends image(ancestor(c)) by the sorted
/// difference words of S_c in local order, computed bottom-up over the tree.
/// Verified before return: homomorphism on all pairs, image letter sets
/// equal to the nu image of the support, and order preservation. A failure
/// throws std::logic_error (it signals an invalid local linear order).
ElementMap build_h(const Band& band, const AncestorTree& tree, const SupportQuotient& quotient,
                   const NuMap& numap, const std::vector<std::vector<int>>& ssets,
                   const LocalLinearOrder& llo);

/// One refinement round at c: mints fresh letters tagged by c's descendants,
/// splits the elements seeing new letters into per-descendant classes, and
/// rewrites their images so that descendant images become incomparable.
/// Asserts the class disjointness, the homomorphism property, descendant
/// incomparability, strict kernel shrinkage and preservation of existing
/// incomparabilities; any failure throws std::logic_error.
ElementMap modification(const ElementMap& map, const Band& band, const AncestorTree& tree, int c);

struct RoundTrace {
  int round;
  int c;
  std::vector<FreeWord> images;
  std::vector<std::pair<int, int>> kernel;
};

/// Starts from build_h and applies modification at the breadth-first-least
/// element with two distinct descendants carrying comparable images, until
/// none is left. The kernel chain strictly decreases, so the round count is
/// bounded by the initial kernel size.
ElementMap run_embedding_algorithm(const Band& band, const AncestorTree& tree,
                                   const SupportQuotient& quotient, const NuMap& numap,
                                   const std::vector<std::vector<int>>& ssets,
                                   const LocalLinearOrder& llo,
                                   std::vector<RoundTrace>* trace = nullptr);

struct EmbedFailure {
  enum class Kind { NotHomomorphism, NotInjective };
  Kind kind;
  int x;
  int y;
};

/// Exhaustive check that the map is an injective homomorphism; reports the
/// first counterexample.
std::optional<EmbedFailure> verify_embedding(const ElementMap& map, const Band& band);

/// Outcome of the full decision procedure.
struct Verdict {
  enum class Kind { NotLrb, NotRightHereditary, NoLocalLinearOrder, Embeddable };
  Kind kind;
  std::vector<AxiomViolation> violations;           // NotLrb
  std::optional<NotRightHereditaryWitness> witness;  // NotRightHereditary
  std::optional<PairConflict> order_conflict;        // NoLocalLinearOrder, when pair-forced
  // Embeddable:
  std::optional<ElementMap> map;
  std::optional<LocalLinearOrder> llo;
  int rounds = 0;
  int rank = 0;  // distinct letters used by the final images
  bool llo_fast_path = false;
};

/// validate -> ancestor tree -> support quotient -> nu -> S-sets -> local
/// linear order -> base homomorphism -> refinement -> verification.
Verdict decide_embeddable(const Band& band);
Verdict decide_embeddable(std::vector<int> table, int n, int identity,
                          std::vector<std::string> labels = {});

}  // namespace lrb
