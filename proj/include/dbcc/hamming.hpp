#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dbcc {

/// A length-n word over the alphabet {0..q-1}.
struct HammingWord {
    /// Validates every symbol against the alphabet.
    HammingWord(std::vector<std::int64_t> symbols, int q);

    int n() const noexcept { return static_cast<int>(symbols.size()); }

    bool operator==(const HammingWord&) const = default;

    /// "0110" for q <= 10, comma-separated otherwise.
    std::string to_string() const;

    std::vector<std::int64_t> symbols;
    int q;
};

/// Number of positions where the words differ.
int hamming_distance(const HammingWord& u, const HammingWord& v);

/// Base-q positional index, most significant symbol first; the word's rank
/// in lexicographic order. Requires q^n to fit in 64 bits.
std::uint64_t hamming_index(const HammingWord& w);

/// Inverse of hamming_index.
HammingWord hamming_unindex(std::uint64_t index, int q, int n);

} // namespace dbcc
