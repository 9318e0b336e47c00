#include "dbcc/hamming.hpp"

#include <limits>
#include <stdexcept>

#include "dbcc/errors.hpp"

namespace dbcc {

HammingWord::HammingWord(std::vector<std::int64_t> syms, int alphabet)
    : symbols(std::move(syms)), q(alphabet) {
    if (q < 1)
        throw std::invalid_argument("alphabet size must be >= 1");
    if (symbols.empty())
        throw std::invalid_argument("word must be nonempty");
    for (std::int64_t s : symbols)
        if (s < 0 || s >= q)
            throw std::invalid_argument("symbol out of alphabet: " + std::to_string(s));
}

std::string HammingWord::to_string() const {
    std::string s;
    for (int i = 0; i < n(); ++i) {
        if (q > 10 && i > 0)
            s += ',';
        s += std::to_string(symbols[static_cast<std::size_t>(i)]);
    }
    return s;
}

int hamming_distance(const HammingWord& u, const HammingWord& v) {
    if (u.n() != v.n() || u.q != v.q)
        throw DimensionError("hamming_distance: mismatched length or alphabet");
    int d = 0;
    for (int i = 0; i < u.n(); ++i)
        if (u.symbols[static_cast<std::size_t>(i)] != v.symbols[static_cast<std::size_t>(i)])
            ++d;
    return d;
}

std::uint64_t hamming_index(const HammingWord& w) {
    std::uint64_t idx = 0;
    constexpr std::uint64_t maxv = std::numeric_limits<std::uint64_t>::max();
    for (std::int64_t s : w.symbols) {
        std::uint64_t uq = static_cast<std::uint64_t>(w.q);
        if (idx > (maxv - static_cast<std::uint64_t>(s)) / uq)
            throw OverflowError("hamming_index: q^n exceeds 64 bits");
        idx = idx * uq + static_cast<std::uint64_t>(s);
    }
    return idx;
}

HammingWord hamming_unindex(std::uint64_t index, int q, int n) {
    if (q < 1 || n < 1)
        throw std::invalid_argument("hamming_unindex: bad dimensions");
    std::vector<std::int64_t> syms(static_cast<std::size_t>(n));
    std::uint64_t rest = index;
    for (int i = n - 1; i >= 0; --i) {
        syms[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(q));
        rest /= static_cast<std::uint64_t>(q);
    }
    if (rest != 0)
        throw std::out_of_range("hamming_unindex: index out of range");
    return HammingWord(std::move(syms), q);
}

} // namespace dbcc
