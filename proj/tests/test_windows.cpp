#include <doctest.h>

#include <optional>
#include <vector>

#include "dbcc/cyclic_string.hpp"
#include "dbcc/rng.hpp"

using namespace dbcc;

namespace {

CyclicString ints(std::vector<std::int64_t> v) { return CyclicString(std::move(v)); }

std::vector<std::uint64_t> ranks_of(const std::vector<std::optional<std::uint64_t>>& classes) {
    std::vector<std::uint64_t> out;
    for (const auto& c : classes) {
        REQUIRE(c.has_value());
        out.push_back(*c);
    }
    return out;
}

} // namespace

TEST_CASE("window extraction with wrap-around") {
    const CyclicString s = ints({1, 3, 4, 5, 2, 6});
    CHECK(window_ints(s, 4, 1) == std::vector<std::int64_t>{3, 4, 5, 2});
    CHECK(window_ints(s, 4, 4) == std::vector<std::int64_t>{2, 6, 1, 3});

    const CyclicString bits = ints({0, 1});
    CHECK(window_ints(bits, 2, 1) == std::vector<std::int64_t>{1, 0});

    // M < n: indices cycle more than once
    const CyclicString one = ints({0});
    CHECK(window_ints(one, 3, 0) == std::vector<std::int64_t>{0, 0, 0});

    CHECK_THROWS_AS(window_ints(bits, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(window_reals(bits, 2, 0), DimensionError);
}

TEST_CASE("window classes of the running example string") {
    const CyclicString s = ints({1, 3, 4, 5, 2, 6});
    const SpaceDescriptor space = SpaceDescriptor::permutation(4, 1);
    const auto classes = window_classes(s, space);
    REQUIRE(classes.size() == 6);

    // Frozen from direct rank computation: six distinct order types. Note
    // that 2314 appears exactly once (third window); the fifth window
    // (2,6,1,3) ranks to 2413 - value 2 is the 2nd smallest of {1,2,3,6},
    // 6 the 4th, 1 the 1st, 3 the 3rd - and is sometimes mistakenly listed
    // as a second 2314. The covering verdict holds either way.
    const std::vector<std::vector<int>> expected{{1, 2, 3, 4}, {2, 3, 4, 1}, {2, 3, 1, 4},
                                                 {3, 2, 4, 1}, {2, 4, 1, 3}, {4, 1, 2, 3}};
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(unrank_permutation(space, *classes[i]).image() == expected[i]);
}

TEST_CASE("window classes in hamming mode reproduce the de Bruijn property") {
    const CyclicString s = ints({0, 0, 1, 1});
    const SpaceDescriptor space = SpaceDescriptor::hamming(2, 2, 0);
    CHECK(ranks_of(window_classes(s, space)) == std::vector<std::uint64_t>{0, 1, 3, 2});
}

TEST_CASE("tied windows yield no class") {
    const CyclicString s(std::vector<double>{1.0, 1.0, 2.0, 3.0});
    const SpaceDescriptor space = SpaceDescriptor::permutation(2, 0);
    const auto classes = window_classes(s, space);
    REQUIRE(classes.size() == 4);
    CHECK(!classes[0].has_value()); // (1.0, 1.0)
    CHECK(unrank_permutation(space, *classes[1]).image() == std::vector<int>{1, 2});
    CHECK(unrank_permutation(space, *classes[2]).image() == std::vector<int>{1, 2});
    CHECK(unrank_permutation(space, *classes[3]).image() == std::vector<int>{2, 1});
    CHECK(!s.all_distinct());
}

TEST_CASE("window classes always has length M and respects rotation") {
    Rng rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + rng.bounded(12);
        std::vector<std::int64_t> payload(m);
        for (auto& v : payload)
            v = static_cast<std::int64_t>(rng.bounded(3));
        const CyclicString s = ints(payload);
        const SpaceDescriptor space =
            SpaceDescriptor::hamming(3, 1 + static_cast<int>(rng.bounded(4)), 0);
        const auto base = window_classes(s, space);
        CHECK(base.size() == m);

        const std::size_t t = rng.bounded(m);
        const auto rotated = window_classes(s.rotated(t), space);
        for (std::size_t i = 0; i < m; ++i)
            CHECK(rotated[i] == base[(i + t) % m]);
    }
}

TEST_CASE("all-distinct payload never produces a tie in permutation mode") {
    Rng rng(321);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 2 + rng.bounded(10);
        std::vector<std::int64_t> payload(m);
        for (std::size_t i = 0; i < m; ++i)
            payload[i] = static_cast<std::int64_t>(i) + 1;
        rng.shuffle(payload);
        const CyclicString s = ints(payload);
        REQUIRE(s.all_distinct());
        const int n = 1 + static_cast<int>(rng.bounded(std::min<std::size_t>(m, 6)));
        for (const auto& c : window_classes(s, SpaceDescriptor::permutation(n, 0)))
            CHECK(c.has_value());
    }
}

TEST_CASE("text format round trips") {
    // q-ary compact form
    const CyclicString bits = ints({0, 1, 1, 0, 2});
    CHECK(format_cyclic_string(bits) == "01102");
    CHECK(parse_cyclic_string("01102").symbols()[4] == 2);

    // comma form for symbols beyond one digit
    const CyclicString wide = ints({3, 11, 0});
    CHECK(format_cyclic_string(wide) == "3,11,0");
    const CyclicString wide2 = parse_cyclic_string(format_cyclic_string(wide));
    CHECK(std::vector<std::int64_t>(wide2.symbols().begin(), wide2.symbols().end()) ==
          std::vector<std::int64_t>{3, 11, 0});

    // doubles round-trip bit-exactly through 17 significant digits
    Rng rng(9);
    std::vector<double> reals(16);
    for (auto& v : reals)
        v = rng.real01();
    const CyclicString rs(reals);
    const CyclicString parsed = parse_cyclic_string(format_cyclic_string(rs));
    REQUIRE(parsed.is_real());
    for (std::size_t i = 0; i < reals.size(); ++i)
        CHECK(parsed.reals()[i] == reals[i]);

    CHECK_THROWS_AS(parse_cyclic_string(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyclic_string("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyclic_string("1,x,2"), std::invalid_argument);
}

TEST_CASE("payload and space kinds must match") {
    const CyclicString rs(std::vector<double>{0.5, 0.25});
    CHECK_THROWS_AS(window_classes(rs, SpaceDescriptor::hamming(2, 2, 0)), DimensionError);
    const CyclicString over = ints({0, 5});
    CHECK_THROWS_AS(window_classes(over, SpaceDescriptor::hamming(2, 2, 0)), DimensionError);
}
