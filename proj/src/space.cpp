#include "dbcc/space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dbcc {

SpaceDescriptor SpaceDescriptor::hamming(int q, int n, int R) {
    if (q < 1)
        throw std::invalid_argument("hamming space: q must be >= 1");
    if (n < 1)
        throw std::invalid_argument("hamming space: n must be >= 1");
    if (R < 0)
        throw std::invalid_argument("hamming space: R must be >= 0");
    return SpaceDescriptor{SpaceKind::hamming, q, n, R};
}

SpaceDescriptor SpaceDescriptor::permutation(int n, int R) {
    if (n < 1)
        throw std::invalid_argument("permutation space: n must be >= 1");
    if (R < 0)
        throw std::invalid_argument("permutation space: R must be >= 0");
    return SpaceDescriptor{SpaceKind::permutation, 0, n, R};
}

BigInt SpaceDescriptor::class_count() const {
    if (is_hamming())
        return ipow(BigInt(q), static_cast<unsigned>(n));
    return factorial(static_cast<unsigned>(n));
}

std::uint64_t SpaceDescriptor::class_count_checked(const Limits& limits) const {
    const BigInt count = class_count();
    const std::uint64_t cap =
        is_hamming() ? limits.max_hamming_classes : limits.max_perm_classes;
    if (count > cap)
        throw ResourceError("class count " + count.str() + " exceeds enumeration cap " +
                            std::to_string(cap));
    return count.convert_to<std::uint64_t>();
}

BigInt stirling_first_diagonal(int n, int j) {
    if (n < 1 || j < 0)
        throw std::invalid_argument("stirling_first_diagonal: bad arguments");
    if (j >= n)
        return 0; // c(n, k) = 0 for k < 1
    // diag[i] = c(m, m-i), rolled forward from m = 1
    std::vector<BigInt> diag(static_cast<std::size_t>(j) + 1);
    diag[0] = 1;
    for (int m = 2; m <= n; ++m)
        for (int i = std::min(j, m - 1); i >= 1; --i)
            diag[static_cast<std::size_t>(i)] =
                diag[static_cast<std::size_t>(i)] +
                BigInt(m - 1) * diag[static_cast<std::size_t>(i - 1)];
    return diag[static_cast<std::size_t>(j)];
}

BigInt ball_size_exact(const SpaceDescriptor& space) {
    BigInt total = 0;
    if (space.is_hamming()) {
        const unsigned n = static_cast<unsigned>(space.n);
        const unsigned kmax = std::min<unsigned>(static_cast<unsigned>(space.R), n);
        for (unsigned k = 0; k <= kmax; ++k)
            total += binomial(n, k) * ipow(BigInt(space.q - 1), k);
    } else {
        const int jmax = std::min(space.R, space.n - 1);
        for (int j = 0; j <= jmax; ++j)
            total += stirling_first_diagonal(space.n, j);
    }
    return total;
}

std::uint64_t ball_size_u64(const SpaceDescriptor& space) {
    return to_u64(ball_size_exact(space), "ball size");
}

namespace {

// All words within distance R of the center, generated by substituting
// symbols in at most R positions; ranks emitted relative to the center's.
void hamming_ball_rec(const std::vector<std::int64_t>& center,
                      const std::vector<std::uint64_t>& weight, int q, int pos,
                      int changes_left, std::uint64_t rank, std::vector<std::uint64_t>& out) {
    out.push_back(rank);
    if (changes_left == 0)
        return;
    const int n = static_cast<int>(center.size());
    for (int p = pos; p < n; ++p) {
        const std::uint64_t base = rank - static_cast<std::uint64_t>(center[static_cast<std::size_t>(p)]) *
                                              weight[static_cast<std::size_t>(p)];
        for (std::int64_t s = 0; s < q; ++s) {
            if (s == center[static_cast<std::size_t>(p)])
                continue;
            hamming_ball_rec(center, weight, q, p + 1, changes_left - 1,
                             base + static_cast<std::uint64_t>(s) * weight[static_cast<std::size_t>(p)],
                             out);
        }
    }
}

std::vector<std::uint64_t> hamming_ball(const SpaceDescriptor& space, std::uint64_t center_rank) {
    const HammingWord center = unrank_word(space, center_rank);
    std::vector<std::uint64_t> weight(static_cast<std::size_t>(space.n));
    std::uint64_t w = 1;
    for (int i = space.n - 1; i >= 0; --i) {
        weight[static_cast<std::size_t>(i)] = w;
        if (i > 0)
            w *= static_cast<std::uint64_t>(space.q);
    }
    std::vector<std::uint64_t> out;
    hamming_ball_rec(center.symbols, weight, space.q, 0,
                     std::min(space.R, space.n), center_rank, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Breadth-first closure under left multiplication by transpositions: the
// neighbors of sigma are (a b) o sigma for all value pairs a < b, i.e. sigma
// with the positions of values a and b swapped.
std::vector<std::uint64_t> permutation_ball(const SpaceDescriptor& space,
                                            std::uint64_t center_rank) {
    const int n = space.n;
    std::set<std::uint64_t> seen{center_rank};
    std::vector<std::vector<int>> frontier{unrank_permutation(space, center_rank).image()};
    for (int step = 0; step < std::min(space.R, n - 1); ++step) {
        std::vector<std::vector<int>> next;
        for (const auto& img : frontier) {
            std::vector<int> pos(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                pos[static_cast<std::size_t>(img[static_cast<std::size_t>(i)] - 1)] = i;
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    std::vector<int> swapped = img;
                    std::swap(swapped[static_cast<std::size_t>(pos[static_cast<std::size_t>(a)])],
                              swapped[static_cast<std::size_t>(pos[static_cast<std::size_t>(b)])]);
                    std::uint64_t r = rank_class(space, Permutation(swapped));
                    if (seen.insert(r).second)
                        next.push_back(std::move(swapped));
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<std::uint64_t>(seen.begin(), seen.end());
}

} // namespace

std::vector<std::uint64_t> ball_enumerate(const SpaceDescriptor& space,
                                          std::uint64_t center_rank, const Limits& limits) {
    const std::uint64_t count = space.class_count_checked(limits);
    if (center_rank >= count)
        throw std::out_of_range("ball_enumerate: center rank out of range");
    return space.is_hamming() ? hamming_ball(space, center_rank)
                              : permutation_ball(space, center_rank);
}

namespace {

constexpr std::uint64_t kBallMemoMaxClasses = 1ull << 20;
constexpr std::uint64_t kTranslatorMaxEntries = 1ull << 23; // K * n ints

} // namespace

BallEnumerator::BallEnumerator(const SpaceDescriptor& space, const Limits& limits)
    : space_(space), limits_(limits), class_count_(space.class_count_checked(limits)),
      memoize_(class_count_ <= kBallMemoMaxClasses) {
    if (!space_.is_hamming()) {
        const BigInt k = ball_size_exact(space_);
        if (k * space_.n <= kTranslatorMaxEntries) {
            // group elements within distance R of the identity; every ball
            // is their left-translate
            const std::uint64_t identity = 0;
            translators_.reserve(k.convert_to<std::size_t>());
            for (std::uint64_t g : permutation_ball(space_, identity))
                translators_.push_back(lehmer_unrank(g, space_.n).image());
        }
    }
}

const std::vector<std::uint64_t>& BallEnumerator::fill(std::uint64_t center_rank,
                                                       std::vector<std::uint64_t>& out) const {
    if (!space_.is_hamming() && !translators_.empty()) {
        const std::vector<int> sigma = lehmer_unrank(center_rank, space_.n).image();
        std::vector<int> product(sigma.size());
        out.clear();
        out.reserve(translators_.size());
        for (const auto& g : translators_) {
            for (std::size_t i = 0; i < sigma.size(); ++i)
                product[i] = g[static_cast<std::size_t>(sigma[i] - 1)];
            out.push_back(lehmer_rank(Permutation(product)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    out = ball_enumerate(space_, center_rank, limits_);
    return out;
}

const std::vector<std::uint64_t>& BallEnumerator::ball(std::uint64_t center_rank) {
    if (center_rank >= class_count_)
        throw std::out_of_range("ball: center rank out of range");
    if (!memoize_)
        return fill(center_rank, scratch_);
    auto it = cache_.find(center_rank);
    if (it == cache_.end()) {
        std::vector<std::uint64_t> fresh;
        fill(center_rank, fresh);
        it = cache_.emplace(center_rank, std::move(fresh)).first;
    }
    return it->second;
}

std::uint64_t rank_class(const SpaceDescriptor& space, const Permutation& p) {
    if (space.is_hamming())
        throw DimensionError("rank_class: permutation given for a Hamming space");
    if (p.size() != space.n)
        throw DimensionError("rank_class: permutation size does not match space");
    return lehmer_rank(p);
}

std::uint64_t rank_class(const SpaceDescriptor& space, const HammingWord& w) {
    if (!space.is_hamming())
        throw DimensionError("rank_class: word given for a permutation space");
    if (w.n() != space.n || w.q != space.q)
        throw DimensionError("rank_class: word does not match space");
    return hamming_index(w);
}

Permutation unrank_permutation(const SpaceDescriptor& space, std::uint64_t rank) {
    if (space.is_hamming())
        throw DimensionError("unrank_permutation: not a permutation space");
    return lehmer_unrank(rank, space.n);
}

HammingWord unrank_word(const SpaceDescriptor& space, std::uint64_t rank) {
    if (!space.is_hamming())
        throw DimensionError("unrank_word: not a Hamming space");
    return hamming_unindex(rank, space.q, space.n);
}

int class_distance(const SpaceDescriptor& space, std::uint64_t a, std::uint64_t b) {
    if (space.is_hamming())
        return hamming_distance(unrank_word(space, a), unrank_word(space, b));
    return cayley_distance(unrank_permutation(space, a), unrank_permutation(space, b));
}

std::string class_label(const SpaceDescriptor& space, std::uint64_t rank) {
    return space.is_hamming() ? unrank_word(space, rank).to_string()
                              : unrank_permutation(space, rank).to_string();
}

} // namespace dbcc
