#pragma once

#include <functional>
#include <map>

#include "symrep/kostka.hpp"
#include "symrep/partition.hpp"
#include "symrep/types.hpp"

namespace symrep {

// Multiset of irreducibles: multiplicity per shape, zeros never stored.
// Iteration follows the enumeration order of partitions, largest shape first.
struct Decomposition {
    int n = 0;
    std::map<Partition, Int, std::greater<Partition>> mults;

    Int multiplicity(const Partition& lambda) const {
        auto it = mults.find(lambda);
        return it == mults.end() ? Int(0) : it->second;
    }
    Int dimension() const;

    bool operator==(const Decomposition&) const = default;
};

// Decomposition of the degree-d component of the polynomial ring in n
// variables: multiplicity of lambda is kostka_metatype_sum(lambda, d).
Decomposition decompose_rd(int n, int d, KostkaCache& cache);
Decomposition decompose_rd(int n, int d);

// Largest submodule generated by r elements: multiplicities clamped at
// r * dim(lambda).
Decomposition maximal_r_generated(const Decomposition& v, const Int& r);

// Least r with maximal_r_generated(v, r) == v: max over the support of
// ceil(multiplicity / dim). Zero for the zero module.
Int min_generators(const Decomposition& v);

bool is_r_generated(const Decomposition& v, const Int& r);

struct BoundCheck {
    int n = 0, d = 0;
    Int r;
    Int dim_max;           // dimension of maximal_r_generated(R_d, r)
    Int target;            // binom(n+d-1, d) - (p(d) - r)
    bool equality = false;
    bool threshold_holds = false;  // r*(n-1) >= a000070(d)

    bool operator==(const BoundCheck&) const = default;
};

// Requires n > d and 1 <= r <= p(d). The equality and the threshold are
// expected to agree; disagreement is data for the caller, not an error.
BoundCheck check_bound(int n, int d, const Int& r, KostkaCache& cache);
BoundCheck check_bound(int n, int d, const Int& r);

}  // namespace symrep
