#include <doctest.h>

#include "symrep/extremal_ideal.hpp"
#include "symrep/tableaux.hpp"

using namespace symrep;

namespace {

Polynomial unit_monomial(int n, int d, const std::vector<int>& exp) {
    Polynomial m(n, d);
    m.add_term(exp, 1);
    return m;
}

std::vector<Polynomial> basis_rows(const SubspaceBasis& basis) {
    std::vector<Polynomial> rows;
    for (std::size_t i = 0; i < basis.rank(); ++i) rows.push_back(basis.row_polynomial(i));
    return rows;
}

}  // namespace

TEST_SUITE_BEGIN("extremal");

TEST_CASE("orbit sums of a pattern") {
    Polynomial m11 = monomial_symmetric(PaddedPartition(Partition({1, 1}), 3));
    CHECK(m11.terms().size() == 3);
    CHECK(m11.coefficient({1, 1, 0}) == 1);
    CHECK(m11.coefficient({0, 1, 1}) == 1);

    Polynomial m21 = monomial_symmetric(PaddedPartition(Partition({2, 1}), 3));
    CHECK(m21.terms().size() == 6);

    Polynomial md = monomial_symmetric(PaddedPartition(Partition({3}), 4));
    CHECK(md.terms().size() == 4);
    CHECK(md.coefficient({0, 0, 3, 0}) == 1);
}

TEST_CASE("the symmetric complement has one dimension per non-extreme pattern") {
    CHECK(construct_w(2, 2).rank() == 1);
    CHECK(construct_w(5, 3).rank() == 2);
    for (int d = 2; d <= 4; ++d)
        for (int n = d; n <= 6; ++n)
            CHECK(construct_w(n, d).rank() ==
                  static_cast<std::size_t>(partition_count(d).get_ui()) - 1);
    CHECK_THROWS_AS(construct_w(2, 3), InputError);
}

TEST_CASE("the complement is a sum of trivial pieces") {
    for (auto [n, d] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{5, 3}}) {
        Decomposition w = decompose_submodule(construct_w(n, d), character_table(n));
        CHECK(w.mults.size() == 1);
        CHECK(w.multiplicity(Partition({n})) == partition_count(d) - 1);
    }
}

TEST_CASE("small ideal slices") {
    SubspaceBasis j22 = construct_jd(2, 2);
    CHECK(j22.rank() == 2);
    CHECK(j22.contains(unit_monomial(2, 2, {2, 0})));
    CHECK(j22.contains(unit_monomial(2, 2, {0, 2})));
    CHECK_FALSE(j22.contains(unit_monomial(2, 2, {1, 1})));

    CHECK(construct_jd(5, 3).rank() == 33);
}

TEST_CASE("block structure accounts for the rank") {
    for (int d = 2; d <= 4; ++d)
        for (int n = d; n <= 6; ++n) {
            auto blocks = jd_blocks(n, d);
            std::size_t total = 0;
            int full = 0;
            for (const auto& block : blocks) {
                total += block.dim;
                if (block.full_orbit) {
                    ++full;
                    CHECK(block.a == Partition({d}));
                }
            }
            CHECK(full == 1);
            CHECK(total == construct_jd(n, d).rank());
        }
}

TEST_CASE("rank complements the non-extreme pattern count") {
    for (int d = 2; d <= 4; ++d)
        for (int n = d; n <= 6; ++n) {
            Int ambient = binomial(n + d - 1, d);
            Int expected = ambient - (partition_count(d) - 1);
            CHECK(Int(static_cast<long>(construct_jd(n, d).rank())) == expected);
        }
}

TEST_CASE("rows have zero pattern sums away from the pure power orbit") {
    for (auto [n, d] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 3}}) {
        SubspaceBasis jd = construct_jd(n, d);
        Partition pure({d});
        for (std::size_t i = 0; i < jd.rank(); ++i) {
            auto sums = check_coefficient_sums(jd.row_polynomial(i));
            for (const auto& [pattern, total] : sums)
                if (!(pattern == pure)) CHECK(total == 0);
        }
    }
}

TEST_CASE("the ideal slice is stable and carries one trivial summand") {
    for (auto [n, d] : {std::pair{3, 2}, std::pair{5, 3}}) {
        Decomposition v = decompose_submodule(construct_jd(n, d), character_table(n));
        CHECK(v.multiplicity(Partition({n})) == 1);
        CHECK(v.dimension() == Int(static_cast<long>(construct_jd(n, d).rank())));
    }
}

TEST_CASE("one generator suffices") {
    for (auto [n, d] : {std::pair{3, 2}, std::pair{5, 3}}) {
        SubspaceBasis jd = construct_jd(n, d);
        CHECK(min_symmetric_generators(basis_rows(jd)) == 1);
    }
}

TEST_CASE("quotient growth sequence") {
    CHECK(expected_hilbert(5, 3, 0) == 1);
    CHECK(expected_hilbert(5, 3, 1) == 5);
    CHECK(expected_hilbert(5, 3, 2) == 15);
    CHECK(expected_hilbert(5, 3, 3) == 2);
    CHECK(expected_hilbert(5, 3, 4) == 0);
    CHECK(expected_hilbert(5, 3, 9) == 0);
    CHECK_THROWS_AS(expected_hilbert(5, 1, 0), InputError);

    for (int d = 2; d <= 4; ++d)
        for (int n = d; n <= 6; ++n) {
            Int ambient = binomial(n + d - 1, d);
            Int jd = Int(static_cast<long>(construct_jd(n, d).rank()));
            CHECK(ambient - jd == expected_hilbert(n, d, d));
            for (int i = 0; i < d; ++i) CHECK(expected_hilbert(n, d, i) == binomial(n + i - 1, i));
        }
}

TEST_CASE("sampled generators are certified and reproducible") {
    GeneratorCertificate cert = sample_principal_generator(3, 2, 2026);
    CHECK(cert.principal);
    CHECK(cert.seed == 2026);
    CHECK(cert.span_dim == cert.target_dim);
    CHECK(cert.target_dim == 5);
    CHECK(cert.generator.n() == 3);
    CHECK(cert.generator.degree() == 2);

    GeneratorCertificate again = sample_principal_generator(3, 2, 2026);
    CHECK(again.generator == cert.generator);
    CHECK(again.attempts == cert.attempts);

    GeneratorCertificate big = sample_principal_generator(5, 3, 1);
    CHECK(big.principal);
    CHECK(big.target_dim == 33);

    CHECK_THROWS_AS(sample_principal_generator(2, 3, 0), InputError);
}

TEST_SUITE_END();
