#pragma once

#include <cstdint>
#include <vector>

#include "dbcc/cyclic_string.hpp"
#include "dbcc/space.hpp"

namespace dbcc {

/// Exact verdict for one (S, space) query. uncovered holds ascending class
/// ranks and may be truncated for reporting; uncovered_total is always exact.
struct CoverageReport {
    SpaceDescriptor space;
    std::uint64_t length = 0; // M
    std::uint64_t covered_count = 0;
    std::uint64_t uncovered_total = 0;
    std::vector<std::uint64_t> uncovered;
    bool uncovered_truncated = false;
    bool is_covering = false;
};

struct VerifyOptions {
    int workers = 1;
    std::uint64_t uncovered_limit = 65536;
    Limits limits{};
};

/// Marks, for every window class of S, every class in its radius-R ball, and
/// reports the exact coverage census. Deterministic and bit-identical for
/// any worker count: marking a shared bitmap is idempotent.
CoverageReport verify(const CyclicString& s, const SpaceDescriptor& space,
                      const VerifyOptions& options = {});

/// The full, untruncated uncovered-class list in ascending rank order.
std::vector<std::uint64_t> uncovered(const CyclicString& s, const SpaceDescriptor& space,
                                     int workers = 1, const Limits& limits = {});

} // namespace dbcc
