#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dbcc {

/// A permutation of {1..n} in one-line notation. Doubles as an order-type
/// class label: the order type of a tie-free real tuple is the permutation
/// assigning each position the rank of its value (smallest = 1).
class Permutation {
public:
    /// Validates that `one_line` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(image_.size()); }

    /// Value at 0-based position i (a number in 1..n).
    int operator[](int i) const noexcept { return image_[static_cast<std::size_t>(i)]; }

    const std::vector<int>& image() const noexcept { return image_; }

    Permutation inverse() const;

    /// Functional composition: (*this)(other(i)), `other` applied first.
    Permutation compose(const Permutation& other) const;

    int cycle_count() const;

    bool operator==(const Permutation&) const = default;

    /// "2341" for n < 10, comma-separated otherwise.
    std::string to_string() const;

private:
    std::vector<int> image_;
};

/// Minimal number of transpositions turning `a` into `b`; computed as
/// n minus the cycle count of a o b^-1.
int cayley_distance(const Permutation& a, const Permutation& b);

/// Lexicographic (Lehmer-code) rank in [0, n!). Requires n <= 20.
std::uint64_t lehmer_rank(const Permutation& p);

/// Rank of a raw one-line vector assumed to be a valid permutation of
/// {1..n}; the unvalidated fast path for generation loops.
std::uint64_t lehmer_rank(std::span<const int> one_line);

/// Inverse of lehmer_rank. Requires n <= 20 and rank < n!.
Permutation lehmer_unrank(std::uint64_t rank, int n);

/// Order type of a tuple: position i receives the rank of x_i among the
/// tuple's values (smallest = 1). Tuples with a repeated value have no
/// order type and yield nullopt.
std::optional<Permutation> order_type(std::span<const double> window);
std::optional<Permutation> order_type(std::span<const std::int64_t> window);

/// Order type as a Lehmer rank, skipping the Permutation object. The scratch
/// buffer avoids per-call allocation in window-scanning loops.
std::optional<std::uint64_t> order_type_rank(std::span<const double> window,
                                             std::vector<int>& scratch);
std::optional<std::uint64_t> order_type_rank(std::span<const std::int64_t> window,
                                             std::vector<int>& scratch);

} // namespace dbcc
