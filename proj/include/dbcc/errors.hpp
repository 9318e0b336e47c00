#pragma once

#include <stdexcept>
#include <string>

namespace dbcc {

/// Mismatched dimensions or alphabets between two operands.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured enumeration or search cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact integer result does not fit the requested fixed-width type.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// The randomized construction ran out of attempts; carries the best census seen.
class AttemptsExhausted : public std::runtime_error {
public:
    AttemptsExhausted(const std::string& what, std::uint64_t best_uncovered)
        : std::runtime_error(what), best_uncovered_(best_uncovered) {}

    std::uint64_t best_uncovered() const noexcept { return best_uncovered_; }

private:
    std::uint64_t best_uncovered_;
};

} // namespace dbcc
