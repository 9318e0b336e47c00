#pragma once

// Exact integer arithmetic for class counts, ball sizes and bound reports.
// Everything here is exact; conversions to fixed-width or floating types are
// explicit and guarded.

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dbcc/errors.hpp"

namespace dbcc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1)
            r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    return (a + b - 1) / b;
}

/// Checked narrowing; the `what` string names the quantity in the error.
inline std::uint64_t to_u64(const BigInt& v, const char* what) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        throw OverflowError(std::string(what) + " does not fit in 64 bits: " + v.str());
    return v.convert_to<std::uint64_t>();
}

/// num/den as a double; overflows to infinity instead of trapping.
inline double big_ratio(const BigInt& num, const BigInt& den) {
    boost::multiprecision::cpp_rational r(num, den);
    return r.convert_to<double>();
}

} // namespace dbcc
