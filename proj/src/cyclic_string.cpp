#include "dbcc/cyclic_string.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "dbcc/errors.hpp"

namespace dbcc {

namespace {

template <class T>
bool pairwise_distinct(const std::vector<T>& v) {
    std::vector<T> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace

CyclicString::CyclicString(std::vector<std::int64_t> symbols)
    : payload_(std::move(symbols)) {
    if (length() == 0)
        throw std::invalid_argument("cyclic string must have length >= 1");
    all_distinct_ = pairwise_distinct(std::get<0>(payload_));
}

CyclicString::CyclicString(std::vector<double> reals) : payload_(std::move(reals)) {
    if (length() == 0)
        throw std::invalid_argument("cyclic string must have length >= 1");
    all_distinct_ = pairwise_distinct(std::get<1>(payload_));
}

std::size_t CyclicString::length() const noexcept {
    return std::visit([](const auto& v) { return v.size(); }, payload_);
}

std::span<const std::int64_t> CyclicString::symbols() const {
    if (is_real())
        throw DimensionError("cyclic string holds reals, not symbols");
    return std::get<0>(payload_);
}

std::span<const double> CyclicString::reals() const {
    if (!is_real())
        throw DimensionError("cyclic string holds symbols, not reals");
    return std::get<1>(payload_);
}

CyclicString CyclicString::rotated(std::size_t t) const {
    const std::size_t m = length();
    t %= m;
    return std::visit(
        [&](const auto& v) {
            auto rot = v;
            std::rotate_copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(t), v.end(),
                             rot.begin());
            return CyclicString(std::move(rot));
        },
        payload_);
}

CyclicString CyclicString::concat(const CyclicString& other) const {
    if (is_real() != other.is_real())
        throw DimensionError("concat: mixed payload types");
    return std::visit(
        [&](const auto& v) {
            auto joined = v;
            using Vec = std::decay_t<decltype(v)>;
            const Vec& tail = std::get<Vec>(other.payload_);
            joined.insert(joined.end(), tail.begin(), tail.end());
            return CyclicString(std::move(joined));
        },
        payload_);
}

namespace {

template <class T>
std::vector<T> window_impl(std::span<const T> payload, int n, std::size_t i) {
    const std::size_t m = payload.size();
    if (i >= m)
        throw std::out_of_range("window index out of range");
    if (n < 1)
        throw std::invalid_argument("window length must be >= 1");
    std::vector<T> w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        w[static_cast<std::size_t>(j)] = payload[(i + static_cast<std::size_t>(j)) % m];
    return w;
}

} // namespace

std::vector<std::int64_t> window_ints(const CyclicString& s, int n, std::size_t i) {
    return window_impl(s.symbols(), n, i);
}

std::vector<double> window_reals(const CyclicString& s, int n, std::size_t i) {
    return window_impl(s.reals(), n, i);
}

WindowClassifier::WindowClassifier(const CyclicString& s, const SpaceDescriptor& space)
    : s_(s), space_(space), length_(s.length()) {
    if (space_.is_hamming()) {
        if (s.is_real())
            throw DimensionError("Hamming space requires an integer payload");
        for (std::int64_t v : s.symbols())
            if (v < 0 || v >= space_.q)
                throw DimensionError("payload symbol out of alphabet: " + std::to_string(v));
    }
    int_window_.resize(static_cast<std::size_t>(space_.n));
    real_window_.resize(static_cast<std::size_t>(space_.n));
}

std::optional<std::uint64_t> WindowClassifier::class_at(std::size_t i) {
    if (i >= length_)
        throw std::out_of_range("window index out of range");
    const int n = space_.n;
    if (s_.is_real()) {
        std::span<const double> payload = s_.reals();
        for (int j = 0; j < n; ++j)
            real_window_[static_cast<std::size_t>(j)] =
                payload[(i + static_cast<std::size_t>(j)) % length_];
        return order_type_rank(std::span<const double>(real_window_), scratch_);
    }
    std::span<const std::int64_t> payload = s_.symbols();
    for (int j = 0; j < n; ++j)
        int_window_[static_cast<std::size_t>(j)] =
            payload[(i + static_cast<std::size_t>(j)) % length_];
    if (space_.is_hamming()) {
        std::uint64_t idx = 0;
        for (int j = 0; j < n; ++j)
            idx = idx * static_cast<std::uint64_t>(space_.q) +
                  static_cast<std::uint64_t>(int_window_[static_cast<std::size_t>(j)]);
        return idx;
    }
    return order_type_rank(std::span<const std::int64_t>(int_window_), scratch_);
}

std::vector<std::optional<std::uint64_t>> window_classes(const CyclicString& s,
                                                         const SpaceDescriptor& space) {
    WindowClassifier classifier(s, space);
    std::vector<std::optional<std::uint64_t>> classes;
    classes.reserve(s.length());
    for (std::size_t i = 0; i < s.length(); ++i)
        classes.push_back(classifier.class_at(i));
    return classes;
}

std::string format_cyclic_string(const CyclicString& s) {
    std::string out;
    if (s.is_real()) {
        char buf[64];
        for (std::size_t i = 0; i < s.length(); ++i) {
            if (i > 0)
                out += ',';
            std::snprintf(buf, sizeof buf, "%.17g", s.reals()[i]);
            out += buf;
        }
        return out;
    }
    std::span<const std::int64_t> syms = s.symbols();
    const bool compact =
        std::all_of(syms.begin(), syms.end(), [](std::int64_t v) { return v >= 0 && v <= 9; });
    for (std::size_t i = 0; i < syms.size(); ++i) {
        if (!compact && i > 0)
            out += ',';
        out += std::to_string(syms[i]);
    }
    return out;
}

CyclicString parse_cyclic_string(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty cyclic string");
    if (text.find(',') == std::string::npos &&
        std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        std::vector<std::int64_t> syms;
        syms.reserve(text.size());
        for (char c : text)
            syms.push_back(c - '0');
        return CyclicString(std::move(syms));
    }
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos)
            comma = text.size();
        std::string tok = text.substr(start, comma - start);
        const std::size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty token in cyclic string");
        tok = tok.substr(a, tok.find_last_not_of(" \t") - a + 1);
        tokens.push_back(tok);
        start = comma + 1;
    }
    const bool real = std::any_of(tokens.begin(), tokens.end(), [](const std::string& t) {
        return t.find_first_of(".eE") != std::string::npos || t.find("inf") != std::string::npos ||
               t.find("nan") != std::string::npos;
    });
    if (real) {
        std::vector<double> vals;
        for (const std::string& t : tokens) {
            double v = 0;
            auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || p != t.data() + t.size())
                throw std::invalid_argument("bad real literal: " + t);
            vals.push_back(v);
        }
        return CyclicString(std::move(vals));
    }
    std::vector<std::int64_t> vals;
    for (const std::string& t : tokens) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size())
            throw std::invalid_argument("bad integer literal: " + t);
        vals.push_back(v);
    }
    return CyclicString(std::move(vals));
}

} // namespace dbcc
