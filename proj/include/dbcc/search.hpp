#pragma once

#include <cstdint>
#include <optional>

#include "dbcc/cyclic_string.hpp"
#include "dbcc/space.hpp"

namespace dbcc {

struct SearchOptions {
    /// Largest length to try; defaults to 16 for Hamming spaces and 10 for
    /// permutation spaces.
    std::optional<std::uint64_t> M_max;
    /// Permutation mode only: search strings over {1..budget} with repeats
    /// (tied windows cover nothing) instead of permutations of {1..M}.
    std::optional<int> symbol_budget;
    /// Keep only rotation-minimal strings. Sound: rotating a string permutes
    /// its cyclic window set.
    bool rotation_canonical = true;
    /// Hamming: keep only strings whose first symbol occurrences appear in
    /// increasing order (sound: alphabet bijections are isometries acting on
    /// windows and space alike). Budgeted permutation mode: require the used
    /// value set to be {1..t} (sound: order-preserving compaction).
    bool relabel_canonical = true;
    /// Abandon a prefix once covered + K * windows_left < |Pi|.
    bool coverage_prune = true;
    int workers = 1;
    Limits limits{};
};

/// Result of the exhaustive minimal-length search. When found, the witness
/// is the lexicographically smallest covering string of length M_opt and no
/// shorter length admits one.
struct SearchResult {
    SpaceDescriptor space;
    std::uint64_t M_max = 0;
    bool found = false;
    std::uint64_t M_opt = 0;
    std::optional<CyclicString> witness;
    std::uint64_t nodes_explored = 0;
    std::optional<int> symbol_budget;
};

/// Smallest M in [1, M_max] admitting a covering string, by increasing-M
/// exhaustive search. "Not found" is a definite verdict for the range, not
/// an error.
SearchResult optimal_length(const SpaceDescriptor& space, const SearchOptions& options = {});

} // namespace dbcc
