#include <doctest.h>

#include <algorithm>

#include "symrep/partition.hpp"

using namespace symrep;

TEST_SUITE_BEGIN("partitions");

TEST_CASE("constructor enforces the shape invariant") {
    CHECK(Partition({4, 3, 3, 1}).weight() == 11);
    CHECK(Partition().weight() == 0);
    CHECK_THROWS_AS(Partition({3, 4}), InputError);
    CHECK_THROWS_AS(Partition({2, 0}), InputError);
    CHECK_THROWS_AS(Partition({-1}), InputError);
}

TEST_CASE("enumeration walks reverse-lexicographically") {
    auto ps = enumerate_partitions(3);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0] == Partition({3}));
    CHECK(ps[1] == Partition({2, 1}));
    CHECK(ps[2] == Partition({1, 1, 1}));

    auto of_zero = enumerate_partitions(0);
    REQUIRE(of_zero.size() == 1);
    CHECK(of_zero[0] == Partition());

    auto capped = enumerate_partitions(5, 2);
    REQUIRE(capped.size() == 3);
    CHECK(capped[0] == Partition({5}));
    CHECK(capped[1] == Partition({4, 1}));
    CHECK(capped[2] == Partition({3, 2}));
}

TEST_CASE("enumeration order is strictly decreasing lexicographically") {
    for (int d : {4, 7, 9}) {
        auto ps = enumerate_partitions(d);
        for (std::size_t i = 1; i < ps.size(); ++i)
            CHECK(ps[i - 1].parts() > ps[i].parts());
    }
}

TEST_CASE("partition_count matches enumeration up to 30") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(3) == 3);
    CHECK(partition_count(10) == 42);
    for (int d = 0; d <= 30; ++d)
        CHECK(partition_count(d) == static_cast<long>(enumerate_partitions(d).size()));
}

TEST_CASE("count partial sums") {
    CHECK(a000070(1) == 1);
    CHECK(a000070(2) == 2);
    CHECK(a000070(3) == 4);
    for (int d = 2; d <= 30; ++d)
        CHECK(a000070(d) - a000070(d - 1) == partition_count(d - 1));
    CHECK_THROWS_AS(a000070(0), InputError);
}

TEST_CASE("dominance examples") {
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    CHECK(dominates(Partition({2, 2}), Partition({2, 1, 1})));
    for (const auto& mu : enumerate_partitions(6))
        CHECK(dominates(Partition({6}), mu));
    CHECK_THROWS_AS(dominates(Partition({2}), Partition({1, 1, 1})), InputError);
}

TEST_CASE("dominance is a partial order on every weight up to 8") {
    for (int n = 1; n <= 8; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& a : ps) {
            CHECK(dominates(a, a));
            for (const auto& b : ps) {
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (const auto& c : ps)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("metatype counts value multiplicities, zeros included") {
    CHECK(metatype(PaddedPartition(Partition({4, 3, 3, 1}), 7)) ==
          Partition({3, 2, 1, 1}));
    CHECK(metatype(PaddedPartition(Partition({5}), 6)) == Partition({5, 1}));
    CHECK(metatype(PaddedPartition(Partition({2}), 4)) == Partition({3, 1}));
    CHECK(metatype(PaddedPartition(Partition({1, 1}), 4)) == Partition({2, 2}));
    CHECK(metatype(PaddedPartition(Partition({2, 2}), 2)) == Partition({2}));
}

TEST_CASE("metatype always lands on a partition of the padded length") {
    for (int d = 1; d <= 6; ++d)
        for (int n = 1; n <= 8; ++n)
            for (const auto& a : enumerate_partitions(d, n)) {
                Partition m = metatype(PaddedPartition(a, n));
                CHECK(m.weight() == n);
            }
}

TEST_CASE("padding must reach the number of parts") {
    CHECK_THROWS_AS(PaddedPartition(Partition({2, 1, 1}), 2), InputError);
    CHECK(PaddedPartition(Partition({2, 1}), 2).entries() == std::vector<int>{2, 1});
}

TEST_CASE("text forms parse strictly") {
    CHECK(parse_partition("4,3,3,1") == Partition({4, 3, 3, 1}));
    CHECK(parse_partition("") == Partition());
    CHECK_THROWS_AS(parse_partition("3,4"), InputError);
    CHECK_THROWS_AS(parse_partition("0"), InputError);
    CHECK_THROWS_AS(parse_partition("2,"), InputError);
    CHECK_THROWS_AS(parse_partition("a,1"), InputError);

    PaddedPartition p = parse_padded_partition("4,3,3,1;n=7");
    CHECK(p.base() == Partition({4, 3, 3, 1}));
    CHECK(p.length() == 7);
    CHECK_THROWS_AS(parse_padded_partition("4,3"), InputError);
    CHECK_THROWS_AS(parse_padded_partition("4,3;m=7"), InputError);
    CHECK_THROWS_AS(parse_padded_partition("4,3;n=1"), InputError);
}

TEST_SUITE_END();
