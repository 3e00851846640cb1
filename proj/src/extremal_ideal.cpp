#include "symrep/extremal_ideal.hpp"

#include <algorithm>
#include <random>

namespace symrep {

Polynomial monomial_symmetric(const PaddedPartition& a) {
    std::vector<int> exp = a.entries();
    std::sort(exp.begin(), exp.end());
    Polynomial f(a.length(), a.base().weight());
    do {
        f.add_term(exp, 1);
    } while (std::next_permutation(exp.begin(), exp.end()));
    return f;
}

namespace {

// Exponent vectors in the orbit of pattern a, in the ambient column order.
std::vector<std::vector<int>> orbit_monomials(const Partition& a, int n) {
    std::vector<int> exp = PaddedPartition(a, n).entries();
    std::sort(exp.begin(), exp.end(), std::greater<int>());
    std::vector<std::vector<int>> out;
    // prev_permutation walks lex decreasing, matching monomial_basis order
    do {
        out.push_back(exp);
    } while (std::prev_permutation(exp.begin(), exp.end()));
    return out;
}

void require_enough_variables(int n, int d) {
    if (d < 1) throw InputError("degree must be positive");
    if (n < d)
        throw InputError("need n >= d so every exponent pattern of degree " +
                         std::to_string(d) + " fits in " + std::to_string(n) +
                         " variables");
}

}  // namespace

SubspaceBasis construct_w(int n, int d) {
    require_enough_variables(n, d);
    SubspaceBasis basis(n, d);
    for (const auto& a : enumerate_partitions(d)) {
        if (a.size() == 1) continue;
        basis.insert(monomial_symmetric(PaddedPartition(a, n)));
    }
    return basis;
}

std::vector<OrbitBlock> jd_blocks(int n, int d) {
    require_enough_variables(n, d);
    std::vector<OrbitBlock> blocks;
    for (const auto& a : enumerate_partitions(d)) {
        OrbitBlock b;
        b.full_orbit = a.size() == 1;
        std::size_t orbit = orbit_monomials(a, n).size();
        b.dim = b.full_orbit ? orbit : orbit - 1;
        b.a = a;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

SubspaceBasis construct_jd(int n, int d) {
    require_enough_variables(n, d);
    SubspaceBasis basis(n, d);
    for (const auto& a : enumerate_partitions(d)) {
        auto orbit = orbit_monomials(a, n);
        if (a.size() == 1) {
            for (const auto& exp : orbit) {
                Polynomial f(n, d);
                f.add_term(exp, 1);
                basis.insert(f);
            }
        } else {
            // differences against the orbit's leading monomial span the
            // coefficient-sum-zero slice
            for (std::size_t i = 1; i < orbit.size(); ++i) {
                Polynomial f(n, d);
                f.add_term(orbit.front(), 1);
                f.add_term(orbit[i], -1);
                basis.insert(f);
            }
        }
    }
    return basis;
}

std::map<Partition, Rat> check_coefficient_sums(const Polynomial& f) {
    std::map<Partition, Rat> sums;
    for (const auto& a : enumerate_partitions(f.degree(), f.n()))
        sums.emplace(a, Rat(0));
    for (const auto& [exp, c] : f.terms()) {
        std::vector<int> sorted = exp;
        sums.at(partition_from_entries(std::move(sorted))) += c;
    }
    return sums;
}

Int expected_hilbert(int n, int d, int i) {
    if (d < 2) throw InputError("the construction needs degree >= 2");
    if (n < 1) throw InputError("need at least one variable");
    if (i < 0) throw InputError("negative degree");
    if (i <= d - 1) return binomial(n + i - 1, i);
    if (i == d) return partition_count(d) - 1;
    return 0;
}

GeneratorCertificate sample_principal_generator(int n, int d, std::uint64_t seed,
                                                int cap, int max_attempts) {
    SubspaceBasis jd = construct_jd(n, d);
    Int target = static_cast<long>(jd.rank());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    Polynomial g(n, d);
    Int span_dim = 0;
    bool principal = false;
    int attempts = 0;
    while (attempts < max_attempts && !principal) {
        ++attempts;
        g = Polynomial(n, d);
        for (std::size_t r = 0; r < jd.rank(); ++r) {
            int c = coeff(rng);
            if (c != 0) g = g + jd.row_polynomial(r) * Rat(c);
        }
        if (g.is_zero()) continue;
        span_dim = static_cast<long>(orbit_span({g}, cap).rank());
        principal = span_dim == target;
    }
    return GeneratorCertificate{std::move(g), seed, attempts, principal,
                                std::move(span_dim), std::move(target)};
}

}  // namespace symrep
