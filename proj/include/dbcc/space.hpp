#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dbcc/bigint.hpp"
#include "dbcc/hamming.hpp"
#include "dbcc/permutation.hpp"

namespace dbcc {

enum class SpaceKind { hamming, permutation };

/// Enumeration caps. Exceeding one raises ResourceError, never silent
/// truncation. The CLI can override via environment variables.
struct Limits {
    std::uint64_t max_perm_classes = 3628800;       // 10!
    std::uint64_t max_hamming_classes = 1ull << 26;
    std::uint64_t max_exhaustive = 1ull << 22;      // full-enumeration overlap mode
    std::uint64_t max_search_nodes = 1ull << 30;
};

/// One of the two concrete cover spaces: q-ary words of length n under the
/// Hamming metric, or order types (permutations) of length-n windows under
/// transposition distance. R is the covering radius. Classes are addressed
/// by rank: base-q index for words, Lehmer rank for permutations.
struct SpaceDescriptor {
    SpaceKind kind;
    int q; // alphabet size; meaningful for hamming only
    int n; // window length
    int R; // covering radius

    static SpaceDescriptor hamming(int q, int n, int R);
    static SpaceDescriptor permutation(int n, int R);

    bool is_hamming() const noexcept { return kind == SpaceKind::hamming; }

    /// |Pi|: q^n or n!.
    BigInt class_count() const;

    /// |Pi| as u64, checked against the kind's enumeration cap.
    std::uint64_t class_count_checked(const Limits& limits = {}) const;

    bool operator==(const SpaceDescriptor&) const = default;
};

/// Exact common ball size K. Hamming: sum over k <= R of C(n,k)(q-1)^k.
/// Permutation: sum over j <= R of c(n, n-j) with c the unsigned Stirling
/// numbers of the first kind (permutations at transposition distance j have
/// exactly n-j cycles).
BigInt ball_size_exact(const SpaceDescriptor& space);

/// K as u64; throws OverflowError when the exact value does not fit.
std::uint64_t ball_size_u64(const SpaceDescriptor& space);

/// Unsigned Stirling number of the first kind c(n, n-j), computed along the
/// diagonal recurrence c(m, m-j) = c(m-1, m-1-j) + (m-1) c(m-1, m-j).
BigInt stirling_first_diagonal(int n, int j);

/// The exact set {y : d(center, y) <= R} as ascending class ranks.
/// |Pi| must be within the enumeration cap.
std::vector<std::uint64_t> ball_enumerate(const SpaceDescriptor& space,
                                          std::uint64_t center_rank,
                                          const Limits& limits = {});

/// Repeated ball generation for one space. Precomputes the distance-<=R
/// group elements in permutation mode (every ball is then the translate
/// {g o sigma}, no per-ball search) and memoizes per-class results on
/// small spaces. One instance per worker; not thread-safe.
class BallEnumerator {
public:
    explicit BallEnumerator(const SpaceDescriptor& space, const Limits& limits = {});

    /// Ascending ranks of the radius-R ball about `center_rank`. The
    /// reference is invalidated by the next call unless the space is small
    /// enough to memoize.
    const std::vector<std::uint64_t>& ball(std::uint64_t center_rank);

private:
    const std::vector<std::uint64_t>& fill(std::uint64_t center_rank,
                                           std::vector<std::uint64_t>& out) const;

    SpaceDescriptor space_;
    Limits limits_;
    std::uint64_t class_count_;
    bool memoize_;
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> cache_;
    std::vector<std::uint64_t> scratch_;
    std::vector<std::vector<int>> translators_; // permutation mode, may be empty
};

/// Rank <-> concrete class conversions (Lehmer / base-q index).
std::uint64_t rank_class(const SpaceDescriptor& space, const Permutation& p);
std::uint64_t rank_class(const SpaceDescriptor& space, const HammingWord& w);
Permutation unrank_permutation(const SpaceDescriptor& space, std::uint64_t rank);
HammingWord unrank_word(const SpaceDescriptor& space, std::uint64_t rank);

/// Distance between two classes given by rank (Cayley or Hamming).
int class_distance(const SpaceDescriptor& space, std::uint64_t a, std::uint64_t b);

/// Human-readable class label ("2341", "0110").
std::string class_label(const SpaceDescriptor& space, std::uint64_t rank);

} // namespace dbcc
