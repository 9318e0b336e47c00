#include "dbcc/coverage.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <limits>
#include <unordered_map>

#include "dbcc/parallel.hpp"

namespace dbcc {

namespace {

constexpr std::uint64_t kBallCacheMaxClasses = 1ull << 20;

// One worker's window scan. Windows are split into fixed chunks; each worker
// classifies its windows and ORs ball members into the shared bitmap.
class MarkWorker {
public:
    MarkWorker(const CyclicString& s, const SpaceDescriptor& space, const Limits& limits,
               std::uint64_t class_count, std::vector<std::uint64_t>& bitmap)
        : classifier_(s, space), space_(space), limits_(limits),
          cache_enabled_(class_count <= kBallCacheMaxClasses), bitmap_(bitmap) {}

    void mark_window(std::size_t i) {
        const auto cls = classifier_.class_at(i);
        if (!cls)
            return; // tied window covers nothing
        for (std::uint64_t member : ball(*cls)) {
            std::atomic_ref<std::uint64_t> word(bitmap_[member >> 6]);
            word.fetch_or(1ull << (member & 63), std::memory_order_relaxed);
        }
    }

private:
    const std::vector<std::uint64_t>& ball(std::uint64_t rank) {
        if (!cache_enabled_) {
            scratch_ball_ = ball_enumerate(space_, rank, limits_);
            return scratch_ball_;
        }
        auto it = cache_.find(rank);
        if (it == cache_.end())
            it = cache_.emplace(rank, ball_enumerate(space_, rank, limits_)).first;
        return it->second;
    }

    WindowClassifier classifier_;
    SpaceDescriptor space_;
    Limits limits_;
    bool cache_enabled_;
    std::vector<std::uint64_t>& bitmap_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> cache_;
    std::vector<std::uint64_t> scratch_ball_;
};

} // namespace

CoverageReport verify(const CyclicString& s, const SpaceDescriptor& space,
                      const VerifyOptions& options) {
    const std::uint64_t class_count = space.class_count_checked(options.limits);
    const std::uint64_t m = s.length();

    std::vector<std::uint64_t> bitmap((class_count + 63) / 64, 0);

    const int workers = options.workers > 1 ? options.workers : 1;
    const std::uint64_t chunk = (m + static_cast<std::uint64_t>(workers) - 1) /
                                static_cast<std::uint64_t>(workers);
    parallel_for(static_cast<std::uint64_t>(workers), workers, [&](std::uint64_t w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(m, begin + chunk);
        if (begin >= end)
            return;
        MarkWorker worker(s, space, options.limits, class_count, bitmap);
        for (std::uint64_t i = begin; i < end; ++i)
            worker.mark_window(i);
    });

    CoverageReport report;
    report.space = space;
    report.length = m;
    for (std::uint64_t word : bitmap)
        report.covered_count += static_cast<std::uint64_t>(std::popcount(word));
    report.uncovered_total = class_count - report.covered_count;
    report.is_covering = report.uncovered_total == 0;
    // counting bound: M windows mark at most M*K classes
    assert(!report.is_covering || m * ball_size_u64(space) >= class_count);
    for (std::uint64_t r = 0; r < class_count && !report.uncovered_truncated; ++r) {
        if (bitmap[r >> 6] & (1ull << (r & 63)))
            continue;
        if (report.uncovered.size() >= options.uncovered_limit) {
            report.uncovered_truncated = true;
            break;
        }
        report.uncovered.push_back(r);
    }
    return report;
}

std::vector<std::uint64_t> uncovered(const CyclicString& s, const SpaceDescriptor& space,
                                     int workers, const Limits& limits) {
    VerifyOptions options;
    options.workers = workers;
    options.uncovered_limit = std::numeric_limits<std::uint64_t>::max();
    options.limits = limits;
    return verify(s, space, options).uncovered;
}

} // namespace dbcc
