#include "dbcc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dbcc/errors.hpp"

namespace dbcc {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
    const int n = size();
    if (n == 0)
        throw std::invalid_argument("permutation must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : image_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value out of range: " + std::to_string(v));
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("permutation repeats value " + std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i)
        inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)] - 1)] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw DimensionError("compose: mismatched permutation sizes");
    std::vector<int> out(image_.size());
    for (int i = 0; i < size(); ++i)
        out[static_cast<std::size_t>(i)] =
            image_[static_cast<std::size_t>(other[i] - 1)];
    return Permutation(std::move(out));
}

int Permutation::cycle_count() const {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)])
            continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = image_[static_cast<std::size_t>(j)] - 1;
        }
    }
    return cycles;
}

std::string Permutation::to_string() const {
    std::string s;
    const bool compact = size() < 10;
    for (int i = 0; i < size(); ++i) {
        if (!compact && i > 0)
            s += ',';
        s += std::to_string((*this)[i]);
    }
    return s;
}

int cayley_distance(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw DimensionError("cayley_distance: mismatched permutation sizes");
    return a.size() - a.compose(b.inverse()).cycle_count();
}

namespace {

constexpr int kMaxRankN = 20; // 21! exceeds 64 bits

const std::uint64_t* factorial_table() {
    static const std::uint64_t table[] = {
        1ull,
        1ull,
        2ull,
        6ull,
        24ull,
        120ull,
        720ull,
        5040ull,
        40320ull,
        362880ull,
        3628800ull,
        39916800ull,
        479001600ull,
        6227020800ull,
        87178291200ull,
        1307674368000ull,
        20922789888000ull,
        355687428096000ull,
        6402373705728000ull,
        121645100408832000ull,
        2432902008176640000ull,
    };
    return table;
}

// Rank of a one-line vector over values 1..n, destroying nothing.
std::uint64_t rank_one_line(const std::vector<int>& img) {
    const int n = static_cast<int>(img.size());
    if (n > kMaxRankN)
        throw OverflowError("lehmer_rank: n > 20 does not fit in 64 bits");
    const std::uint64_t* fact = factorial_table();
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (img[static_cast<std::size_t>(j)] < img[static_cast<std::size_t>(i)])
                ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * fact[n - 1 - i];
    }
    return rank;
}

} // namespace

std::uint64_t lehmer_rank(const Permutation& p) {
    return rank_one_line(p.image());
}

Permutation lehmer_unrank(std::uint64_t rank, int n) {
    if (n < 1 || n > kMaxRankN)
        throw OverflowError("lehmer_unrank: n must be in [1, 20]");
    const std::uint64_t* fact = factorial_table();
    if (rank >= fact[n])
        throw std::out_of_range("lehmer_unrank: rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        std::uint64_t f = fact[i];
        std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        img.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(img));
}

namespace {

// Shared rank-vector computation; writes ranks (1-based) into scratch and
// returns false on a tie.
template <class T>
bool rank_vector(std::span<const T> window, std::vector<int>& scratch) {
    const std::size_t n = window.size();
    scratch.resize(n);
    // order[j] = index of the j-th smallest value
    static thread_local std::vector<int> order;
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return window[static_cast<std::size_t>(a)] < window[static_cast<std::size_t>(b)];
    });
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (window[static_cast<std::size_t>(order[j])] ==
            window[static_cast<std::size_t>(order[j + 1])])
            return false;
    for (std::size_t j = 0; j < n; ++j)
        scratch[static_cast<std::size_t>(order[j])] = static_cast<int>(j) + 1;
    return true;
}

template <class T>
std::optional<Permutation> order_type_impl(std::span<const T> window) {
    if (window.empty())
        throw std::invalid_argument("order_type: empty window");
    std::vector<int> ranks;
    if (!rank_vector(window, ranks))
        return std::nullopt;
    return Permutation(std::move(ranks));
}

template <class T>
std::optional<std::uint64_t> order_type_rank_impl(std::span<const T> window,
                                                  std::vector<int>& scratch) {
    if (window.empty())
        throw std::invalid_argument("order_type_rank: empty window");
    if (!rank_vector(window, scratch))
        return std::nullopt;
    return rank_one_line(scratch);
}

} // namespace

std::optional<Permutation> order_type(std::span<const double> window) {
    return order_type_impl(window);
}

std::optional<Permutation> order_type(std::span<const std::int64_t> window) {
    return order_type_impl(window);
}

std::optional<std::uint64_t> order_type_rank(std::span<const double> window,
                                             std::vector<int>& scratch) {
    return order_type_rank_impl(window, scratch);
}

std::optional<std::uint64_t> order_type_rank(std::span<const std::int64_t> window,
                                             std::vector<int>& scratch) {
    return order_type_rank_impl(window, scratch);
}

} // namespace dbcc
