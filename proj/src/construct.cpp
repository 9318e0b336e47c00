#include "dbcc/construct.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dbcc/rng.hpp"

namespace dbcc {

CyclicString random_string(const SpaceDescriptor& space, std::uint64_t M, std::uint64_t seed) {
    if (M < 1)
        throw std::invalid_argument("random_string: M must be >= 1");
    Rng rng(seed);
    std::vector<std::int64_t> payload;
    payload.reserve(M);
    if (space.is_hamming()) {
        for (std::uint64_t i = 0; i < M; ++i)
            payload.push_back(static_cast<std::int64_t>(
                rng.bounded(static_cast<std::uint64_t>(space.q))));
    } else {
        payload.resize(M);
        std::iota(payload.begin(), payload.end(), std::int64_t{1});
        rng.shuffle(payload);
    }
    return CyclicString(std::move(payload));
}

CyclicString random_real_string(std::uint64_t M, std::uint64_t seed) {
    if (M < 1)
        throw std::invalid_argument("random_real_string: M must be >= 1");
    Rng rng(seed);
    std::vector<double> payload;
    payload.reserve(M);
    for (std::uint64_t i = 0; i < M; ++i)
        payload.push_back(rng.real01());
    return CyclicString(std::move(payload));
}

std::vector<std::int64_t> representative(const SpaceDescriptor& space, std::uint64_t rank) {
    std::vector<std::int64_t> word;
    word.reserve(static_cast<std::size_t>(space.n));
    if (space.is_hamming()) {
        const HammingWord w = unrank_word(space, rank);
        word.assign(w.symbols.begin(), w.symbols.end());
    } else {
        const Permutation p = unrank_permutation(space, rank);
        word.assign(p.image().begin(), p.image().end());
    }
    return word;
}

CyclicString patch(const CyclicString& s, const SpaceDescriptor& space,
                   const std::vector<std::uint64_t>& uncovered_classes) {
    if (s.is_real()) {
        std::vector<double> out(s.reals().begin(), s.reals().end());
        out.insert(out.end(), s.reals().begin(), s.reals().end());
        for (std::uint64_t rank : uncovered_classes)
            for (std::int64_t v : representative(space, rank))
                out.push_back(static_cast<double>(v));
        return CyclicString(std::move(out));
    }
    std::vector<std::int64_t> out(s.symbols().begin(), s.symbols().end());
    out.insert(out.end(), s.symbols().begin(), s.symbols().end());
    for (std::uint64_t rank : uncovered_classes)
        for (std::int64_t v : representative(space, rank))
            out.push_back(v);
    return CyclicString(std::move(out));
}

ConstructionResult construct(const SpaceDescriptor& space, std::uint64_t seed,
                             const ConstructOptions& options) {
    if (options.C <= 0)
        throw std::invalid_argument("construct: C must be positive");
    if (options.max_attempts < 1)
        throw std::invalid_argument("construct: max_attempts must be >= 1");
    if (options.real_payload && space.is_hamming())
        throw std::invalid_argument("construct: real payload applies to permutation mode only");

    const std::uint64_t class_count = space.class_count_checked(options.limits);
    const std::uint64_t ball = ball_size_u64(space);
    const std::uint64_t per_class_budget =
        (class_count + static_cast<std::uint64_t>(space.n) - 1) /
        static_cast<std::uint64_t>(space.n); // ceil(|Pi|/n)
    const double census_threshold = options.patch_slack * static_cast<double>(per_class_budget);

    VerifyOptions verify_options;
    verify_options.workers = options.workers;
    verify_options.uncovered_limit = std::numeric_limits<std::uint64_t>::max();
    verify_options.limits = options.limits;

    std::uint64_t best_census = std::numeric_limits<std::uint64_t>::max();
    double C = options.C;
    for (int attempt = 1; attempt <= options.max_attempts; ++attempt, C *= 2) {
        const double target = C * static_cast<double>(class_count) *
                              std::log(static_cast<double>(space.n)) /
                              static_cast<double>(ball);
        const std::uint64_t M = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(std::ceil(target)));

        const std::uint64_t attempt_seed = derive_seed(seed, static_cast<std::uint64_t>(attempt));
        CyclicString s = options.real_payload ? random_real_string(M, attempt_seed)
                                              : random_string(space, M, attempt_seed);
        CoverageReport base = verify(s, space, verify_options);
        best_census = std::min(best_census, base.uncovered_total);
        if (static_cast<double>(base.uncovered_total) > census_threshold)
            continue;

        CyclicString patched = patch(s, space, base.uncovered);
        CoverageReport final_report = verify(patched, space, verify_options);
        // patching cannot lose coverage; a gap here is a library bug
        if (!final_report.is_covering)
            throw std::logic_error("construct: patched string failed verification");
        const std::uint64_t final_length =
            2 * M + static_cast<std::uint64_t>(space.n) * base.uncovered_total;
        assert(patched.length() == final_length);

        const double scale = static_cast<double>(class_count) *
                             std::log(static_cast<double>(space.n)) /
                             static_cast<double>(ball);
        ConstructionResult result{space,
                                  std::move(patched),
                                  std::move(final_report),
                                  M,
                                  base.uncovered_total,
                                  seed,
                                  attempt,
                                  C,
                                  scale > 0 ? static_cast<double>(final_length) / scale : 0.0};
        return result;
    }
    throw AttemptsExhausted("construct: no attempt met the patch budget after " +
                                std::to_string(options.max_attempts) +
                                " tries (best uncovered census: " +
                                std::to_string(best_census) + ")",
                            best_census);
}

} // namespace dbcc
