#include "cantornet/bitstream.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cantornet;

TEST_CASE("canonical form reduces the cycle to its primitive root") {
    auto s = canonical_stream({}, {0, 1, 0, 1});
    CHECK(s.cycle == Bits{0, 1});
    CHECK(s.prefix.empty());
}

TEST_CASE("canonical form absorbs prefix bits into cycle rotations") {
    // 1,(0,1)^inf reads as (1,0)^inf.
    auto s = canonical_stream({1}, {0, 1});
    CHECK(s.prefix.empty());
    CHECK(s.cycle == Bits{1, 0});

    // 0,1,1,(1)^inf collapses to prefix 0, cycle 1... then absorbs nothing more.
    auto t = canonical_stream({0, 1, 1}, {1});
    CHECK(t.prefix == Bits{0});
    CHECK(t.cycle == Bits{1});
}

TEST_CASE("canonical form rejects empty cycles and non-bits") {
    CHECK_THROWS_AS(canonical_stream({0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_stream({2}, {0}), std::invalid_argument);
}

TEST_CASE("expansions of the endpoints") {
    auto zero = expansions(Rational(0));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == all_zeros_stream());

    auto one = expansions(Rational(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == all_ones_stream());
}

TEST_CASE("interior dyadic rationals have exactly two expansions") {
    auto half = expansions(Rational(1, 2));
    REQUIRE(half.size() == 2);
    CHECK(half[0] == BitStream{{1}, {0}});
    CHECK(half[1] == BitStream{{0}, {1}});

    auto three_quarters = expansions(Rational(3, 4));
    REQUIRE(three_quarters.size() == 2);
    CHECK(three_quarters[0] == BitStream{{1, 1}, {0}});
    CHECK(three_quarters[1] == BitStream{{1, 0}, {1}});
}

TEST_CASE("non-dyadic rationals have one eventually periodic expansion") {
    auto third = expansions(Rational(1, 3));
    REQUIRE(third.size() == 1);
    CHECK(third[0] == BitStream{{}, {0, 1}});

    auto sixth = expansions(Rational(1, 6));
    REQUIRE(sixth.size() == 1);
    CHECK(sixth[0] == BitStream{{0}, {0, 1}});
}

TEST_CASE("expansions rejects values outside the unit interval") {
    CHECK_THROWS_AS(expansions(Rational(-1, 2)), std::domain_error);
    CHECK_THROWS_AS(expansions(Rational(3, 2)), std::domain_error);
}

TEST_CASE("value_of on known streams") {
    CHECK(value_of(BitStream{{}, {1}}) == 1);
    CHECK(value_of(BitStream{{}, {0, 1}}) == Rational(1, 3));
    CHECK(value_of(canonical_stream({1, 0}, {0})) == Rational(1, 2));
}

TEST_CASE("truncate unrolls prefix then cycle") {
    CHECK(truncate(BitStream{{}, {0, 1}}, 5) == Bits{0, 1, 0, 1, 0});
    CHECK(truncate(BitStream{{1}, {0}}, 3) == Bits{1, 0, 0});
    CHECK(truncate(BitStream{{1}, {0}}, 0).empty());
}

TEST_CASE("round trip value_of(expansions(y)) == y for q <= 128") {
    for (int q = 1; q <= 128; ++q)
        for (int p = 0; p <= q; ++p) {
            const Rational y(p, q);
            const auto streams = expansions(y);
            for (const auto& s : streams) CHECK(value_of(s) == y);
            const bool dyadic = is_dyadic_interior(y);
            CHECK(streams.size() == (dyadic ? 2u : 1u));
        }
}

TEST_CASE("expansions are canonical: re-canonicalizing is the identity") {
    for (int q = 1; q <= 64; ++q)
        for (int p = 0; p <= q; ++p)
            for (const auto& s : expansions(Rational(p, q)))
                CHECK(canonical_stream(s.prefix, s.cycle) == s);
}
