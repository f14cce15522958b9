#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "lrb/band.hpp"
#include "lrb/words.hpp"

namespace lrb {

/// A finite subband of the free band presented abstractly: the band plus the
/// witness word of each element (ordered like the band's element indices).
struct Closure {
  Band band;
  std::vector<FreeWord> words;
};

struct ClosureError {
  enum class Kind { CapExceeded, NoIdentity };
  Kind kind;
  std::size_t reached = 0;
};

/// Closes the given words under the free-band product. The empty word is
/// included when adjoin_identity is set (or already generated); without an
/// identity the result cannot be presented as a Band and NoIdentity is
/// returned. Elements are indexed in canonical word order with the empty
/// word first.
std::variant<Closure, ClosureError> close_under_product(
    std::vector<FreeWord> seeds, bool adjoin_identity, const AlphabetRegistry& reg,
    std::size_t cap = 512,
    const std::function<std::string(const FreeWord&)>& labeler = nullptr);

}  // namespace lrb
