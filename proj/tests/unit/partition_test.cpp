#include <doctest.h>

#include "xherm/partition.hpp"

using namespace xherm;

TEST_CASE("gap sequence of a partition") {
    CHECK(gap_sequence({1, 3}) == GapSequence{1, 4});
    CHECK(gap_sequence({0, 0, 0, 1, 1, 2, 2}) == GapSequence{0, 1, 2, 4, 5, 7, 8});
    CHECK(gap_sequence(Partition{}) == GapSequence{});
}

TEST_CASE("partition from gaps") {
    CHECK(partition_from_gaps({1, 2}) == Partition{1, 1});
    CHECK(partition_from_gaps({1, 2, 5, 6}) == Partition{1, 1, 3, 3});
    CHECK(partition_from_gaps({0, 1, 2, 4, 5, 7, 8}) == Partition{0, 0, 0, 1, 1, 2, 2});
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(Partition({2, 1}), InvalidPartition);
    CHECK_THROWS_AS(Partition({-1, 2}), InvalidPartition);
    CHECK_THROWS_AS(GapSequence({1, 1}), InvalidPartition);
    CHECK_THROWS_AS(GapSequence({3, 2}), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("1,,2"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("1,a"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("3,1"), InvalidPartition);
}

TEST_CASE("parse accepts comma separated parts") {
    CHECK(parse_partition("1,1,3,3") == Partition{1, 1, 3, 3});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("2") == Partition{2});
}

TEST_CASE("double partition") {
    CHECK(double_partition({1, 3}) == Partition{1, 1, 3, 3});
    CHECK(double_partition({1}) == Partition{1, 1});
    CHECK(double_partition(Partition{}) == Partition{});
    const Partition d = double_partition({2, 2, 5});
    CHECK(d.weight() == 18);
    CHECK(d.length() == 6);
}

TEST_CASE("Adler predicate") {
    CHECK(is_adler({1, 1, 3, 3}));
    CHECK_FALSE(is_adler({1}));
    CHECK(is_adler({0, 0, 1, 1}));
    CHECK(is_adler(Partition{}));
    CHECK_FALSE(is_adler({2}));
}

TEST_CASE("p_lambda is non-negative on 0..10 for (0,0,1,1)") {
    const ExactPoly p = p_lambda({0, 0, 1, 1});
    for (int n = 0; n <= 10; ++n) CHECK(p.eval(Rational(n)) >= 0);
}

TEST_CASE("normalize_adler strips the initial block") {
    CHECK(normalize_adler({0, 0, 1, 1}) == Partition{1, 1});
    CHECK(normalize_adler({1, 1, 3, 3}) == Partition{1, 1, 3, 3});
    CHECK(normalize_adler(Partition{}) == Partition{});
    CHECK(normalize_adler({0, 0, 0}) == Partition{});
    CHECK_THROWS_AS(normalize_adler({1}), InvalidPartition);
}

TEST_CASE("characteristic polynomial") {
    CHECK(p_lambda({1, 1}) == ExactPoly{2, -3, 1});
    CHECK(p_lambda(Partition{}) == ExactPoly{1});
    const ExactPoly expected =
        ExactPoly{-1, 1} * ExactPoly{-2, 1} * ExactPoly{-5, 1} * ExactPoly{-6, 1};
    CHECK(p_lambda({1, 1, 3, 3}) == expected);
    CHECK(expected == ExactPoly{60, -112, 65, -14, 1});
}

TEST_CASE("gap round trip for all partitions with at most 8 parts of size at most 8") {
    std::size_t n = 0;
    for (std::size_t len = 0; len <= 8; ++len) {
        for (const auto& lambda : enumerate_bounded(len, 8)) {
            REQUIRE(partition_from_gaps(gap_sequence(lambda)) == lambda);
            ++n;
        }
    }
    // sum over l of C(l+8, 8)
    CHECK(n == 24310);
}

TEST_CASE("double partitions are Adler under both predicates") {
    for (const auto& lambda : enumerate_partitions(6, 2)) {
        const Partition d = double_partition(lambda);
        CHECK(is_adler_structural(d));
        CHECK(is_adler_by_sign(d));
    }
}

TEST_CASE("structural and sign predicates agree up to weight 10") {
    for (const auto& lambda : enumerate_partitions(10, 3))
        REQUIRE_MESSAGE(is_adler_structural(lambda) == is_adler_by_sign(lambda), lambda.to_string());
}

TEST_CASE("p_lambda vanishes exactly on the gaps") {
    for (const auto& lambda : enumerate_partitions(7, 2)) {
        const ExactPoly p = p_lambda(lambda);
        const GapSequence ks = gap_sequence(lambda);
        const int top = ks.size() ? ks.values().back() + 3 : 3;
        for (int n = 0; n <= top; ++n)
            CHECK((p.eval(Rational(n)) == 0) == ks.contains(n));
    }
}

TEST_CASE("enumeration counts") {
    // number of partitions of 0..8 without leading zeros: 1+1+2+3+5+7+11+15+22
    CHECK(enumerate_partitions(8).size() == 67);
}
