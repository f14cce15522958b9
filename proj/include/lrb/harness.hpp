#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "lrb/band.hpp"

namespace lrb {

/// Enumerates every multiplication table on k nonidentity elements (identity
/// adjoined at index 0) satisfying all band axioms, in lexicographic cell
/// order. The callback receives the full (k+1)^2 table.
void enumerate_lrb_tables(int k, const std::function<void(const std::vector<int>&)>& fn);

struct CensusRecord {
  int k = 0;
  long index = 0;             // per-size counter
  std::string table;          // inner k*k table as digits
  std::string verdict;
  int rounds = -1;
  int rank = -1;
  bool llo_fast_path = false;
  bool qvar = false;
};

/// Classifies every band with up to max_nonidentity nonidentity elements.
void census(int max_nonidentity, const std::function<void(const CensusRecord&)>& fn);

struct FuzzFailure {
  std::uint64_t seed = 0;
  int index = 0;
  std::string what;
};

struct FuzzSummary {
  int cases = 0;
  int passed = 0;
  int skipped = 0;
  std::vector<FuzzFailure> failures;
};

/// Random finite subbands of a free band: closes random words, builds the
/// canonical suffix-word local order and verifies it, runs the abstract
/// decision pipeline, checks the witness closure is isomorphic to the input
/// and that quasi-variety membership holds. Closure-cap overruns are skipped
/// and logged, not failed. Case i is reproducible from (seed, i) alone.
FuzzSummary fuzz_subbands(std::uint64_t seed, int count, int max_generators, int max_seeds,
                          std::size_t cap = 512, std::ostream* log = nullptr);

}  // namespace lrb
