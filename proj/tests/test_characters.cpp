#include <doctest.h>

#include <algorithm>
#include <map>

#include "symrep/character.hpp"
#include "symrep/kostka.hpp"
#include "symrep/tableaux.hpp"

using namespace symrep;

namespace {

int fixed_points(const std::vector<int>& sigma) {
    int count = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] == static_cast<int>(i)) ++count;
    return count;
}

// Oracle: trace of sigma on the ordered set partitions with block sizes mu,
// counted directly.
Int fixed_tabloids(const Partition& mu, const std::vector<int>& sigma) {
    std::vector<int> labels;
    for (std::size_t b = 0; b < mu.size(); ++b)
        labels.insert(labels.end(), static_cast<std::size_t>(mu.part(b)),
                      static_cast<int>(b));
    std::sort(labels.begin(), labels.end());
    Int count = 0;
    do {
        bool fixed = true;
        for (std::size_t i = 0; i < labels.size() && fixed; ++i)
            fixed = labels[static_cast<std::size_t>(sigma[i])] == labels[i];
        if (fixed) ++count;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return count;
}

}  // namespace

TEST_SUITE_BEGIN("characters");

TEST_CASE("class sizes come from the centralizer and cover the group") {
    CHECK(CycleType(Partition({2, 1})).size == 3);
    CHECK(CycleType(Partition({3})).size == 2);
    for (int n = 1; n <= 12; ++n) {
        Int total = 0;
        for (const auto& cls : all_cycle_types(n)) total += cls.size;
        CHECK(total == factorial(n));
    }
}

TEST_CASE("class representatives have the declared cycle type") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& cls : all_cycle_types(n)) {
            auto sigma = cls.representative();
            // decompose back into cycle lengths
            std::vector<bool> seen(sigma.size(), false);
            std::vector<int> lengths;
            for (std::size_t i = 0; i < sigma.size(); ++i) {
                if (seen[i]) continue;
                int len = 0;
                for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
                    seen[j] = true;
                    ++len;
                }
                lengths.push_back(len);
            }
            CHECK(partition_from_entries(std::move(lengths)) == cls.type);
        }
}

TEST_CASE("sum-zero-subspace row for three symbols") {
    CharacterTable t = character_table(3);
    Partition std_shape({2, 1});
    for (const auto& cls : t.classes()) {
        Int expected = fixed_points(cls.representative()) - 1;
        CHECK(t.value(std_shape, cls.type) == expected);
    }
}

TEST_CASE("one-dimensional rows") {
    for (int n = 2; n <= 8; ++n) {
        CharacterTable t = character_table(n);
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        for (const auto& cls : t.classes()) {
            CHECK(t.value(Partition({n}), cls.type) == 1);
            // alternating row: parity of n minus the number of cycles
            int parity = (n - static_cast<int>(cls.type.size())) % 2 ? -1 : 1;
            CHECK(t.value(Partition(ones), cls.type) == parity);
        }
    }
}

TEST_CASE("identity column holds the dimensions") {
    for (int n = 1; n <= 8; ++n) {
        CharacterTable t = character_table(n);
        Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& lambda : t.shapes())
            CHECK(t.value(lambda, identity) == specht_dim(lambda));
    }
}

TEST_CASE("rows are orthonormal under the class-weighted pairing") {
    for (int n = 2; n <= 7; ++n) {
        CharacterTable t = character_table(n);
        for (std::size_t a = 0; a < t.shapes().size(); ++a)
            for (std::size_t b = a; b < t.shapes().size(); ++b) {
                Int pairing = 0;
                for (std::size_t c = 0; c < t.classes().size(); ++c)
                    pairing += t.classes()[c].size * t.value(a, c) * t.value(b, c);
                CHECK(pairing == (a == b ? factorial(n) : Int(0)));
            }
    }
}

TEST_CASE("standalone evaluation matches the table") {
    for (int n = 2; n <= 6; ++n) {
        CharacterTable t = character_table(n);
        for (const auto& lambda : t.shapes())
            for (const auto& cls : t.classes())
                CHECK(character_value(lambda, cls) == t.value(lambda, cls.type));
    }
    CHECK_THROWS_AS(character_value(Partition({2}), CycleType(Partition({3}))),
                    InputError);
}

TEST_CASE("table construction respects the cap") {
    CHECK_THROWS_AS(character_table(11), ResourceError);
    CHECK(character_table(11, 12).n() == 11);
}

TEST_CASE("multiplicities from traces") {
    for (int n = 2; n <= 5; ++n) {
        CharacterTable t = character_table(n);
        std::map<Partition, Rat> regular, trivial;
        for (const auto& cls : t.classes()) {
            bool is_identity = cls.type.size() == static_cast<std::size_t>(n);
            regular[cls.type] = is_identity ? Rat(factorial(n)) : Rat(0);
            trivial[cls.type] = 1;
        }
        for (const auto& lambda : t.shapes()) {
            CHECK(multiplicity_from_trace(regular, lambda, t) == specht_dim(lambda));
            CHECK(multiplicity_from_trace(trivial, lambda, t) ==
                  (lambda == Partition({n}) ? 1 : 0));
        }
    }
}

TEST_CASE("permutation module traces decompose by Kostka numbers") {
    KostkaCache cache;
    for (int n = 2; n <= 6; ++n) {
        CharacterTable t = character_table(n);
        for (const auto& mu : enumerate_partitions(n)) {
            std::map<Partition, Rat> trace;
            for (const auto& cls : t.classes())
                trace[cls.type] = Rat(fixed_tabloids(mu, cls.representative()));
            for (const auto& lambda : t.shapes())
                CHECK(multiplicity_from_trace(trace, lambda, t) ==
                      kostka(lambda, mu, cache));
        }
    }
}

TEST_CASE("maps that are not characters are rejected") {
    CharacterTable t = character_table(2);
    std::map<Partition, Rat> missing{{Partition({2}), Rat(1)}};
    CHECK_THROWS_AS(multiplicity_from_trace(missing, Partition({2}), t), InputError);

    std::map<Partition, Rat> fractional{{Partition({2}), Rat(1, 3)},
                                        {Partition({1, 1}), Rat(1)}};
    CHECK_THROWS_AS(multiplicity_from_trace(fractional, Partition({2}), t), InputError);

    std::map<Partition, Rat> negative{{Partition({2}), Rat(0)},
                                      {Partition({1, 1}), Rat(-2)}};
    CHECK_THROWS_AS(multiplicity_from_trace(negative, Partition({2}), t), InputError);
}

TEST_SUITE_END();
