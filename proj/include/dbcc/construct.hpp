#pragma once

#include <cstdint>
#include <vector>

#include "dbcc/coverage.hpp"
#include "dbcc/cyclic_string.hpp"
#include "dbcc/space.hpp"

namespace dbcc {

/// Outcome of the randomized construction. The final code is the patched
/// string, so final length = 2*base_length + n*patched_classes exactly, and
/// report.is_covering is always true.
struct ConstructionResult {
    SpaceDescriptor space;
    CyclicString code;
    CoverageReport report; // post-patch
    std::uint64_t base_length = 0; // M of the accepted random string
    std::uint64_t patched_classes = 0;
    std::uint64_t seed = 0;
    int attempts = 0;
    double C = 0;            // the C in effect for the accepted attempt
    double length_ratio = 0; // final length / (|Pi| ln n / K), the audit figure
};

struct ConstructOptions {
    double C = 4.0;
    int max_attempts = 16;
    /// An attempt is patched (accepted) when its uncovered census is at most
    /// patch_slack * ceil(|Pi|/n); otherwise C doubles and the attempt is
    /// retried with fresh randomness.
    double patch_slack = 2.0;
    /// Permutation mode draws a random permutation of {1..M} by default
    /// (same window-class distribution as i.i.d. reals, and tie-free).
    /// Set this to sample i.i.d. uniform reals instead.
    bool real_payload = false;
    int workers = 1;
    Limits limits{};
};

/// A uniformly random string for the space: M i.i.d. symbols from {0..q-1}
/// in Hamming mode, a uniformly random permutation of {1..M} in permutation
/// mode. Deterministic given the seed.
CyclicString random_string(const SpaceDescriptor& space, std::uint64_t M, std::uint64_t seed);

/// Permutation-mode alternative: M i.i.d. uniform doubles in [0, 1).
CyclicString random_real_string(std::uint64_t M, std::uint64_t seed);

/// A word whose class is exactly `rank`: the word itself in Hamming mode,
/// the one-line notation in permutation mode.
std::vector<std::int64_t> representative(const SpaceDescriptor& space, std::uint64_t rank);

/// S' = S ++ S ++ rep(c_1) ++ ... ++ rep(c_u). The doubled copy keeps every
/// cyclic window of S alive inside S', and class c_j appears verbatim as the
/// window at offset 2M + (j-1)n.
CyclicString patch(const CyclicString& s, const SpaceDescriptor& space,
                   const std::vector<std::uint64_t>& uncovered_classes);

/// Full pipeline: M = ceil(C |Pi| ln n / K), then random_string -> verify ->
/// patch, retrying with doubled C while the census is too large. The result
/// always verifies; attempts exhaustion throws AttemptsExhausted.
ConstructionResult construct(const SpaceDescriptor& space, std::uint64_t seed,
                             const ConstructOptions& options = {});

} // namespace dbcc
