#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lrb/semilattice.hpp"
#include "lrb/words.hpp"

namespace lrb {

/// One failed axiom instance found while validating a multiplication table.
struct AxiomViolation {
  enum class Law { Entry, Identity, Idempotency, LeftRegularity, Associativity };
  Law law;
  int x = -1;
  int y = -1;
  int z = -1;
};

/// A finite left regular band with designated identity, as a multiplication
/// table. Immutable after construction; construct through validate().
class Band {
 public:
  /// Checks all axioms (valid entries, identity laws, x^2 = x, xyx = xy,
  /// associativity) and returns either the band or every violated instance.
  static std::variant<Band, std::vector<AxiomViolation>> validate(
      std::vector<int> table, int n, int identity, std::vector<std::string> labels = {});

  int size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }

  /// x <= y iff xy = y (prefix order on free bands).
  bool leq(int x, int y) const { return mul(x, y) == y; }
  /// x precedes y iff yx = y (support order; reflexive, transitive).
  bool preceq(int x, int y) const { return mul(y, x) == y; }
  /// x ~ y at c iff xc = yc.
  bool sim(int c, int x, int y) const { return mul(x, c) == mul(y, c); }

  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }

 private:
  Band(std::vector<int> table, int n, int identity, std::vector<std::string> labels)
      : n_(n), identity_(identity), table_(std::move(table)), labels_(std::move(labels)) {}

  int n_;
  int identity_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

/// The Hasse tree of the prefix order of a right hereditary band: every
/// nonidentity element has a unique lower cover (its ancestor).
struct AncestorTree {
  std::vector<int> parent;                  // parent[identity] == -1
  std::vector<std::vector<int>> children;   // sorted by element index
  std::vector<int> depth;
  std::vector<int> bfs;                     // breadth-first order from the identity
};

/// Witness that the Hasse diagram is not a tree: an element with two
/// incomparable lower covers.
struct NotRightHereditaryWitness {
  int element;
  int cover1;
  int cover2;
};

std::variant<AncestorTree, NotRightHereditaryWitness> ancestor_tree(const Band& band);

/// The quotient of a band by mutual support order, with its join table.
/// Classes are numbered by smallest member; class 'bottom' is the identity's.
struct SupportQuotient {
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;  // members, sorted
  FiniteSemilattice semilattice;
};

SupportQuotient support_quotient(const Band& band);

/// For each nonidentity c, the set of elements s whose identification with
/// their ancestor first happens at c: s ~ a(s) at c and at no c' strictly
/// below c. Indexed by element; the identity's slot stays empty.
std::vector<std::vector<int>> s_sets(const Band& band, const AncestorTree& tree);

/// The difference word of s: nu(support(s)) minus nu(support(ancestor(s))).
/// Throws std::invalid_argument for the identity.
SemWord delta_nu(const SupportQuotient& quotient, const NuMap& numap, const AncestorTree& tree,
                 int s);

}  // namespace lrb
