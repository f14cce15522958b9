#pragma once

#include "lrb/band.hpp"

namespace lrb {

/// Backtracking isomorphism test with color-refinement pruning. Intended for
/// the desk-scale bands this project works with.
bool bands_isomorphic(const Band& a, const Band& b);

}  // namespace lrb
