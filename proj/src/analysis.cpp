#include "dbcc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <unordered_map>

#include "dbcc/parallel.hpp"
#include "dbcc/rng.hpp"

namespace dbcc {

BoundsReport bounds(const SpaceDescriptor& space, double C) {
    if (C <= 0)
        throw std::invalid_argument("bounds: C must be positive");
    BoundsReport report;
    report.space = space;
    report.class_count = space.class_count();
    report.ball_size = ball_size_exact(space);
    report.lower = ceil_div(report.class_count, report.ball_size);
    report.C = C;
    const double log_n = std::log(static_cast<double>(space.n));
    report.upper_target = C * log_n * big_ratio(report.class_count, report.ball_size);

    BigInt denom = space.is_hamming()
                       ? binomial(static_cast<unsigned>(space.n), static_cast<unsigned>(space.R))
                       : ipow(BigInt(space.n), 2 * static_cast<unsigned>(space.R));
    if (denom == 0) {
        report.asymptotic_lower = std::numeric_limits<double>::infinity();
        report.asymptotic_upper = std::numeric_limits<double>::infinity();
    } else {
        report.asymptotic_lower = big_ratio(report.class_count, denom);
        report.asymptotic_upper = report.asymptotic_lower * log_n;
    }
    return report;
}

namespace {

// Draws the string Lambda of length n+k, returns |ball(pi1) /\ ball(pi2)|
// where pi1, pi2 are the classes of the windows at offsets 0 and k. Ball
// ranks come from a per-worker memo keyed by class rank.
class OverlapSampler {
public:
    OverlapSampler(const SpaceDescriptor& space, int k, const Limits& limits)
        : space_(space), k_(k), limits_(limits),
          lambda_(static_cast<std::size_t>(space.n + k)) {}

    // exhaustive enumeration: decode tuple index -> Lambda
    std::uint64_t intersection_at_index(std::uint64_t index) {
        if (space_.is_hamming()) {
            std::uint64_t rest = index;
            for (int i = space_.n + k_ - 1; i >= 0; --i) {
                lambda_[static_cast<std::size_t>(i)] =
                    static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(space_.q));
                rest /= static_cast<std::uint64_t>(space_.q);
            }
        } else {
            const Permutation p = lehmer_unrank(index, space_.n + k_);
            std::copy(p.image().begin(), p.image().end(), lambda_.begin());
        }
        return intersection();
    }

    std::uint64_t intersection_sampled(Rng& rng) {
        if (space_.is_hamming()) {
            for (auto& v : lambda_)
                v = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(space_.q)));
        } else {
            std::iota(lambda_.begin(), lambda_.end(), std::int64_t{1});
            rng.shuffle(lambda_);
        }
        return intersection();
    }

private:
    std::uint64_t window_class(int offset, bool& ok) {
        std::span<const std::int64_t> w(lambda_.data() + offset,
                                        static_cast<std::size_t>(space_.n));
        if (space_.is_hamming()) {
            std::uint64_t idx = 0;
            for (std::int64_t s : w)
                idx = idx * static_cast<std::uint64_t>(space_.q) + static_cast<std::uint64_t>(s);
            ok = true;
            return idx;
        }
        auto rank = order_type_rank(w, scratch_);
        ok = rank.has_value();
        return ok ? *rank : 0;
    }

    std::uint64_t intersection() {
        bool ok1 = false, ok2 = false;
        const std::uint64_t r1 = window_class(0, ok1);
        const std::uint64_t r2 = window_class(k_, ok2);
        if (!ok1 || !ok2)
            return 0; // tied windows have no class
        const auto& b1 = ball(r1);
        const auto& b2 = ball(r2);
        std::uint64_t count = 0;
        auto i1 = b1.begin();
        auto i2 = b2.begin();
        while (i1 != b1.end() && i2 != b2.end()) {
            if (*i1 < *i2)
                ++i1;
            else if (*i2 < *i1)
                ++i2;
            else {
                ++count;
                ++i1;
                ++i2;
            }
        }
        return count;
    }

    const std::vector<std::uint64_t>& ball(std::uint64_t rank) {
        auto it = cache_.find(rank);
        if (it == cache_.end())
            it = cache_.emplace(rank, ball_enumerate(space_, rank, limits_)).first;
        return it->second;
    }

    SpaceDescriptor space_;
    int k_;
    Limits limits_;
    std::vector<std::int64_t> lambda_;
    std::vector<int> scratch_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> cache_;
};

void check_overlap_args(const SpaceDescriptor& space, int k) {
    if (k < 1)
        throw std::invalid_argument("overlap: k must be >= 1");
    if (!space.is_hamming() && space.n + k > 20)
        throw OverflowError("overlap: n + k > 20 is not rankable in permutation mode");
}

constexpr std::uint64_t kChunkSamples = 4096;

} // namespace

OverlapEstimate overlap_expectation(const SpaceDescriptor& space, int k,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers, const Limits& limits) {
    check_overlap_args(space, k);
    if (samples < 1)
        throw std::invalid_argument("overlap: samples must be >= 1");

    const std::uint64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
    std::vector<unsigned __int128> chunk_sum(chunks, 0);
    std::vector<unsigned __int128> chunk_sumsq(chunks, 0);
    parallel_for(chunks, workers, [&](std::uint64_t c) {
        const std::uint64_t begin = c * kChunkSamples;
        const std::uint64_t end = std::min(samples, begin + kChunkSamples);
        OverlapSampler sampler(space, k, limits);
        Rng rng(derive_seed(seed, (static_cast<std::uint64_t>(k) << 32) + c));
        unsigned __int128 sum = 0, sumsq = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t v = sampler.intersection_sampled(rng);
            sum += v;
            sumsq += static_cast<unsigned __int128>(v) * v;
        }
        chunk_sum[c] = sum;
        chunk_sumsq[c] = sumsq;
    });

    unsigned __int128 sum = 0, sumsq = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        sum += chunk_sum[c];
        sumsq += chunk_sumsq[c];
    }
    const double n = static_cast<double>(samples);
    const double mean = static_cast<double>(sum) / n;
    double se = 0;
    if (samples > 1) {
        const double var =
            std::max(0.0, (static_cast<double>(sumsq) - n * mean * mean) / (n - 1));
        se = std::sqrt(var / n);
    }
    return OverlapEstimate{k, mean, se, samples, false};
}

OverlapEstimate overlap_expectation_exhaustive(const SpaceDescriptor& space, int k,
                                               int workers, const Limits& limits) {
    check_overlap_args(space, k);
    const BigInt total_big =
        space.is_hamming() ? ipow(BigInt(space.q), static_cast<unsigned>(space.n + k))
                           : factorial(static_cast<unsigned>(space.n + k));
    if (total_big > limits.max_exhaustive)
        throw ResourceError("exhaustive overlap needs " + total_big.str() +
                            " enumerations, above the cap of " +
                            std::to_string(limits.max_exhaustive));
    const std::uint64_t total = total_big.convert_to<std::uint64_t>();

    const std::uint64_t chunk_len = 16384;
    const std::uint64_t chunks = (total + chunk_len - 1) / chunk_len;
    std::vector<unsigned __int128> chunk_sum(chunks, 0);
    parallel_for(chunks, workers, [&](std::uint64_t c) {
        const std::uint64_t begin = c * chunk_len;
        const std::uint64_t end = std::min(total, begin + chunk_len);
        OverlapSampler sampler(space, k, limits);
        unsigned __int128 sum = 0;
        for (std::uint64_t i = begin; i < end; ++i)
            sum += sampler.intersection_at_index(i);
        chunk_sum[c] = sum;
    });
    unsigned __int128 sum = 0;
    for (std::uint64_t c = 0; c < chunks; ++c)
        sum += chunk_sum[c];
    const double mean = static_cast<double>(sum) / static_cast<double>(total);
    return OverlapEstimate{k, mean, 0.0, total, true};
}

namespace {

OverlapStats make_stats(const SpaceDescriptor& space, std::vector<OverlapEstimate> per_k) {
    OverlapStats stats;
    stats.space = space;
    stats.per_k = std::move(per_k);
    for (const auto& e : stats.per_k)
        stats.sum += e.estimate;
    stats.ball_size = ball_size_u64(space);
    stats.ratio = stats.sum / static_cast<double>(stats.ball_size);
    return stats;
}

} // namespace

OverlapStats hypothesis_ratio(const SpaceDescriptor& space, std::uint64_t samples,
                              std::uint64_t seed, int workers, const Limits& limits) {
    if (samples < 1)
        throw std::invalid_argument("hypothesis_ratio: samples must be >= 1");
    std::vector<OverlapEstimate> per_k;
    for (int k = 1; k <= space.n - 1; ++k)
        per_k.push_back(overlap_expectation(space, k, samples, seed, workers, limits));
    return make_stats(space, std::move(per_k));
}

OverlapStats hypothesis_ratio_exhaustive(const SpaceDescriptor& space, int workers,
                                         const Limits& limits) {
    std::vector<OverlapEstimate> per_k;
    for (int k = 1; k <= space.n - 1; ++k)
        per_k.push_back(overlap_expectation_exhaustive(space, k, workers, limits));
    return make_stats(space, std::move(per_k));
}

double janson_bound(const JansonInputs& in) {
    if (in.mu < 0 || in.Delta < 0 || in.delta < 0)
        throw std::invalid_argument("janson_bound: inputs must be nonnegative");
    const double inf = std::numeric_limits<double>::infinity();
    const double t1 = in.Delta > 0 ? in.mu * in.mu / (8 * in.Delta) : inf;
    const double t2 = in.mu / 2;
    const double t3 = in.delta > 0 ? in.mu / (6 * in.delta) : inf;
    const double exponent = std::min({t1, t2, t3});
    return std::clamp(std::exp(-exponent), 0.0, 1.0);
}

namespace {

JansonInputs janson_from_overlaps(const SpaceDescriptor& space, std::uint64_t M,
                                  const std::vector<OverlapEstimate>& per_k) {
    const BigInt classes = space.class_count();
    const BigInt K = ball_size_exact(space);
    JansonInputs in;
    in.mu = static_cast<double>(M) * big_ratio(K, classes);
    double overlap_sum = 0;
    for (const auto& e : per_k)
        overlap_sum += e.estimate;
    in.Delta = 2.0 * static_cast<double>(M) * overlap_sum * big_ratio(1, classes);
    in.delta = 2.0 * space.n * big_ratio(K, classes);
    return in;
}

} // namespace

JansonInputs janson_inputs_estimate(const SpaceDescriptor& space, std::uint64_t M,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers, const Limits& limits) {
    if (M < 1)
        throw std::invalid_argument("janson_inputs: M must be >= 1");
    std::vector<OverlapEstimate> per_k;
    for (int k = 1; k <= space.n; ++k)
        per_k.push_back(overlap_expectation(space, k, samples, seed, workers, limits));
    return janson_from_overlaps(space, M, per_k);
}

JansonInputs janson_inputs_exhaustive(const SpaceDescriptor& space, std::uint64_t M,
                                      int workers, const Limits& limits) {
    if (M < 1)
        throw std::invalid_argument("janson_inputs: M must be >= 1");
    std::vector<OverlapEstimate> per_k;
    for (int k = 1; k <= space.n; ++k)
        per_k.push_back(overlap_expectation_exhaustive(space, k, workers, limits));
    return janson_from_overlaps(space, M, per_k);
}

double cayley_ball_asymptotic(int n, int R) {
    if (n < 1 || R < 0)
        throw std::invalid_argument("cayley_ball_asymptotic: bad arguments");
    double denom = std::pow(2.0, R) * std::tgamma(static_cast<double>(R) + 1.0);
    return std::pow(static_cast<double>(n), 2.0 * R) / denom;
}

} // namespace dbcc
