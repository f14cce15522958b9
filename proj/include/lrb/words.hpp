#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace lrb {

using LetterId = int;

/// A letter of the free band alphabet.
///
/// Base letters are the ordinary generators a1, a2, ...; fresh letters are
/// minted during embedding refinement and carry (owner, tag, round) so that
/// repeated refinements at the same element never collide.
struct Letter {
  enum class Kind { Base, Fresh };
  static constexpr int kEmptyTag = -1;

  Kind kind = Kind::Base;
  int gen = 0;     // Base: 1-based generator index
  int owner = -1;  // Fresh: band element that owns the refinement
  int tag = -1;    // Fresh: descendant element, or kEmptyTag
  int round = 0;   // Fresh: refinement round (1-based)
};

/// Interns letters and fixes the strict total order used when sorting
/// letters into words: all base letters rank below all fresh letters, base
/// letters by generator index, fresh letters in creation order.
class AlphabetRegistry {
 public:
  LetterId base(int gen);
  LetterId fresh(int owner, int tag, int round);

  const Letter& letter(LetterId id) const { return letters_.at(static_cast<std::size_t>(id)); }
  bool rank_less(LetterId a, LetterId b) const {
    return rank_.at(static_cast<std::size_t>(a)) < rank_.at(static_cast<std::size_t>(b));
  }
  int size() const { return static_cast<int>(letters_.size()); }

 private:
  std::vector<Letter> letters_;
  std::vector<std::int64_t> rank_;
  std::map<std::tuple<int, int, int, int>, LetterId> intern_;
  int fresh_seq_ = 0;
};

/// A word of the free left regular band: an ordered sequence of pairwise
/// distinct letters.
struct FreeWord {
  std::vector<LetterId> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool contains(LetterId a) const;
  bool operator==(const FreeWord&) const = default;
};

/// A word of the free semilattice: a finite set of letters. Letters here are
/// plain ints whose meaning is contextual (semilattice class ids).
struct SemWord {
  std::vector<int> letters;  // sorted, no duplicates

  static SemWord of(std::vector<int> xs);
  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool contains(int a) const;
  bool operator==(const SemWord&) const = default;
};

SemWord sem_union(const SemWord& a, const SemWord& b);
SemWord sem_difference(const SemWord& a, const SemWord& b);
bool sem_subset(const SemWord& a, const SemWord& b);
bool sem_proper_subset(const SemWord& a, const SemWord& b);

/// Product in the free left regular band: concatenation of w1 with the
/// letters of w2 not already seen.
FreeWord fw_product(const FreeWord& w1, const FreeWord& w2);

/// Prefix order: w1 <= w2 iff w1 is a prefix of w2.
bool fw_leq(const FreeWord& w1, const FreeWord& w2);

/// Support order: w1 precedes w2 iff every letter of w1 occurs in w2.
bool fw_preceq(const FreeWord& w1, const FreeWord& w2);

/// Sorted letter set of a word.
std::vector<LetterId> letter_set(const FreeWord& w);

/// Deterministic total order on free words: first by letter-set size, then
/// by the rank-sorted letter sets, then by the letter sequences themselves.
/// Strict letter-set containment implies "less". Returns -1, 0 or +1.
int canonical_compare(const FreeWord& a, const FreeWord& b, const AlphabetRegistry& reg);

/// Maps a semilattice word into the free band: images of its letters,
/// sorted ascending by registry rank. letter_of[s] gives the free-band
/// letter for semilattice letter s and must be injective on the word.
FreeWord to_sorted_word(const SemWord& s, const std::vector<LetterId>& letter_of,
                        const AlphabetRegistry& reg);

/// The suffix d with x = parent . d; requires parent to be a proper prefix
/// of x. Throws std::invalid_argument otherwise.
FreeWord delta_word(const FreeWord& x, const FreeWord& parent);

/// The separator letter deciding the order of two suffix words inside b:
/// the last letter a of b lying in dy \ dx such that no letter of dx \ dy
/// occurs after a in b. Requires distinct letter sets, all letters of
/// dx and dy occurring in b. nullopt when no such letter exists.
std::optional<LetterId> separator(const FreeWord& dx, const FreeWord& dy, const FreeWord& b);

}  // namespace lrb
