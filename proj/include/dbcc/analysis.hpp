#pragma once

#include <cstdint>
#include <vector>

#include "dbcc/bigint.hpp"
#include "dbcc/space.hpp"

namespace dbcc {

/// Length bounds for a space: the exact counting lower bound, the length
/// target the randomized construction aims at, and the closed asymptotic
/// forms (q^n / C(n,R) for Hamming, n! / n^{2R} for permutations, each with
/// and without the log-n factor). Asymptotic doubles overflow to infinity.
struct BoundsReport {
    SpaceDescriptor space;
    BigInt class_count; // |Pi|
    BigInt ball_size;   // K, exact
    BigInt lower;       // ceil(|Pi| / K)
    double C = 0;
    double upper_target = 0;     // C |Pi| ln n / K
    double asymptotic_lower = 0; // |Pi| / (family denominator)
    double asymptotic_upper = 0; // same, times ln n
};

/// One estimate of E(T_k), the expected intersection of the balls around
/// the classes of two n-windows at offset k in one random string.
struct OverlapEstimate {
    int k = 0;
    double estimate = 0;
    double std_error = 0; // 0 in exhaustive mode
    std::uint64_t samples = 0;
    bool exhaustive = false;
};

/// Per-k overlap estimates for k = 1..n-1 plus their sum divided by K -
/// the quantity that must stay small for the construction to work.
struct OverlapStats {
    SpaceDescriptor space;
    std::vector<OverlapEstimate> per_k;
    double sum = 0;
    std::uint64_t ball_size = 0; // K
    double ratio = 0;            // sum / K
};

/// The three quantities the dependency-graph probability bound consumes.
struct JansonInputs {
    double mu = 0;
    double Delta = 0;
    double delta = 0;
};

BoundsReport bounds(const SpaceDescriptor& space, double C);

/// Monte Carlo estimate of E(T_k) from `samples` draws. Deterministic for a
/// fixed seed independent of worker count (fixed chunked sub-seeds).
/// k >= n is allowed (windows then share no symbols).
OverlapEstimate overlap_expectation(const SpaceDescriptor& space, int k,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers = 1, const Limits& limits = {});

/// Exact E(T_k) by full enumeration of the (n+k)-strings; requires the
/// enumeration count to be within limits.max_exhaustive.
OverlapEstimate overlap_expectation_exhaustive(const SpaceDescriptor& space, int k,
                                               int workers = 1, const Limits& limits = {});

OverlapStats hypothesis_ratio(const SpaceDescriptor& space, std::uint64_t samples,
                              std::uint64_t seed, int workers = 1, const Limits& limits = {});

OverlapStats hypothesis_ratio_exhaustive(const SpaceDescriptor& space, int workers = 1,
                                         const Limits& limits = {});

/// exp(-min(mu^2/(8 Delta), mu/2, mu/(6 delta))), clamped to [0, 1]. A zero
/// Delta or delta sends its term to infinity.
double janson_bound(const JansonInputs& inputs);

/// mu = M K / |Pi| and delta = 2 n K / |Pi| exactly; Delta = 2 (M/|Pi|) times
/// the sum of E(T_k) for k = 1..n, estimated by sampling.
JansonInputs janson_inputs_estimate(const SpaceDescriptor& space, std::uint64_t M,
                                    std::uint64_t samples, std::uint64_t seed,
                                    int workers = 1, const Limits& limits = {});

/// Same, with the overlap sum computed exhaustively.
JansonInputs janson_inputs_exhaustive(const SpaceDescriptor& space, std::uint64_t M,
                                      int workers = 1, const Limits& limits = {});

/// n^{2R} / (2^R R!), the closed approximation to the permutation ball size.
double cayley_ball_asymptotic(int n, int R);

} // namespace dbcc
