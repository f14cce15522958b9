#pragma once

#include <vector>

#include "lrb/words.hpp"

namespace lrb {

/// A finite join semilattice given by its join table. `bottom` is the
/// neutral element (the class of the band identity).
struct FiniteSemilattice {
  int m = 0;
  int bottom = 0;
  std::vector<int> join;  // row-major m*m

  int join_of(int x, int y) const { return join[static_cast<std::size_t>(x) * m + y]; }
  /// x is below y iff y u x = y.
  bool leq(int x, int y) const { return join_of(y, x) == y; }

  /// Throws std::invalid_argument unless join is associative, commutative,
  /// idempotent and bottom is neutral.
  void validate_or_throw() const;

  /// Height of x: length of the longest chain from bottom up to x.
  std::vector<int> heights() const;
};

/// The canonical embedding of a finite join semilattice into the free
/// semilattice on letters indexed by its own elements: the image of x is
/// the set of letters for all t with x not below t.
///
/// rank_of_class orders classes by ascending height (ties by id); that
/// rank fixes the generator order of the induced free-band letters,
/// gen_of_class[t] = rank_of_class[t] + 1.
struct NuMap {
  std::vector<SemWord> image;
  std::vector<int> rank_of_class;
  std::vector<int> gen_of_class;
};

/// Builds the embedding and verifies it is an injective join homomorphism
/// before returning. Throws std::logic_error if verification fails (which
/// signals an invalid semilattice).
NuMap nu(const FiniteSemilattice& sl);

}  // namespace lrb
