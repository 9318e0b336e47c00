#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dbcc/space.hpp"

namespace dbcc {

/// A cyclic string: the candidate code S of length M, holding either integer
/// symbols (q-ary words, or integers standing in for reals in permutation
/// mode) or raw reals. Window indices are always reduced modulo M, so M < n
/// is legal - indices just cycle more than once.
class CyclicString {
public:
    explicit CyclicString(std::vector<std::int64_t> symbols);
    explicit CyclicString(std::vector<double> reals);

    std::size_t length() const noexcept; // M
    bool is_real() const noexcept { return std::holds_alternative<std::vector<double>>(payload_); }

    /// True when all M payload values are pairwise distinct.
    bool all_distinct() const noexcept { return all_distinct_; }

    std::span<const std::int64_t> symbols() const; // throws on real payload
    std::span<const double> reals() const;         // throws on integer payload

    /// Rotation by t: element i of the result is element (i+t) mod M.
    CyclicString rotated(std::size_t t) const;

    CyclicString concat(const CyclicString& other) const;

private:
    std::variant<std::vector<std::int64_t>, std::vector<double>> payload_;
    bool all_distinct_;
};

/// The window (s_i, s_{i+1 mod M}, ..., s_{i+n-1 mod M}). Requires 0 <= i < M
/// and a matching payload type.
std::vector<std::int64_t> window_ints(const CyclicString& s, int n, std::size_t i);
std::vector<double> window_reals(const CyclicString& s, int n, std::size_t i);

/// Computes window classes for one (string, space) pair, reusing scratch
/// buffers across calls. Hamming windows are their own class; permutation
/// windows map to their order type, or nullopt on a tie.
class WindowClassifier {
public:
    WindowClassifier(const CyclicString& s, const SpaceDescriptor& space);

    std::optional<std::uint64_t> class_at(std::size_t i);

    std::size_t length() const noexcept { return length_; }

private:
    const CyclicString& s_;
    SpaceDescriptor space_;
    std::size_t length_;
    std::vector<std::int64_t> int_window_;
    std::vector<double> real_window_;
    std::vector<int> scratch_;
};

/// Entry i is the class of window i (nullopt on a permutation-mode tie);
/// always exactly M entries.
std::vector<std::optional<std::uint64_t>> window_classes(const CyclicString& s,
                                                         const SpaceDescriptor& space);

/// Text format. Integer payloads over symbols 0..9 print one character per
/// symbol; anything else prints comma-separated values. Reals print with 17
/// significant digits, enough to round-trip a double exactly.
std::string format_cyclic_string(const CyclicString& s);

/// Parses both text forms. A token containing '.', 'e', 'E', "inf" or "nan"
/// makes the payload real; otherwise integers. A comma-free string is read
/// one digit per character.
CyclicString parse_cyclic_string(const std::string& text);

} // namespace dbcc
