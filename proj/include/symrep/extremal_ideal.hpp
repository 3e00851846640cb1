#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symrep/partition.hpp"
#include "symrep/polynomial.hpp"
#include "symrep/subspace.hpp"
#include "symrep/types.hpp"

namespace symrep {

// Monomial symmetric polynomial m_a in n variables: every distinct
// rearrangement of the padded exponent vector, coefficient one.
Polynomial monomial_symmetric(const PaddedPartition& a);

// Span of the m_a over partitions a of d other than (d). Needs n >= d so
// every partition of d fits. Its dimension is p(d) - 1.
SubspaceBasis construct_w(int n, int d);

// One block of the degree-d piece of the extremal ideal, attached to the
// orbit of monomials with exponent pattern a.
struct OrbitBlock {
    Partition a;
    bool full_orbit = false;  // whole orbit span for a = (d), else the
                              // sum-zero slice, one dimension short
    std::size_t dim = 0;
};

// Per-orbit building blocks: the full orbit of x1^d plus, for every other
// exponent pattern, the vectors with coefficient sum zero on that orbit.
std::vector<OrbitBlock> jd_blocks(int n, int d);

// Degree-d piece of the extremal ideal: the direct sum of the blocks, of
// dimension binom(n+d-1, d) - (p(d) - 1). Needs n >= d.
SubspaceBasis construct_jd(int n, int d);

// Per exponent pattern a of degree f.degree(): sum of the coefficients of the
// monomials in the orbit of a. Patterns with more parts than variables cannot
// occur and are omitted.
std::map<Partition, Rat> check_coefficient_sums(const Polynomial& f);

// Dimension the quotient by the extremal ideal should have in each degree:
// full polynomial space below d, p(d) - 1 at d, zero above. Needs d >= 2.
Int expected_hilbert(int n, int d, int i);

struct GeneratorCertificate {
    Polynomial generator;
    std::uint64_t seed = 0;
    int attempts = 0;
    bool principal = false;  // the generator's orbit spans the whole piece
    Int span_dim;
    Int target_dim;
};

// Random rational combination of the basis rows, recombined until its orbit
// recovers the full degree-d piece. Deterministic for a fixed seed.
GeneratorCertificate sample_principal_generator(int n, int d, std::uint64_t seed,
                                                int cap = kDefaultVarCap,
                                                int max_attempts = 8);

}  // namespace symrep
