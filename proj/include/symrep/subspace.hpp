#pragma once

#include <vector>

#include "symrep/character.hpp"
#include "symrep/decomposition.hpp"
#include "symrep/polynomial.hpp"
#include "symrep/types.hpp"

namespace symrep {

// The degree-d monomials in n variables as exponent vectors, lexicographically
// decreasing: x1^d first, xn^d last. This order indexes all matrix columns.
std::vector<std::vector<int>> monomial_basis(int n, int d);

// Row space of degree-d polynomials, kept in reduced row echelon form with
// exact rational entries. Pivot columns are strictly increasing; the leftmost
// nonzero entry of a reduced row becomes its pivot.
class SubspaceBasis {
  public:
    SubspaceBasis(int n, int d);

    int n() const { return n_; }
    int degree() const { return d_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return monomials_.size(); }
    const std::vector<std::vector<int>>& monomials() const { return monomials_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // True when the row enlarged the space.
    bool insert(const Polynomial& f);
    bool insert_row(std::vector<Rat> row);

    bool contains(const Polynomial& f) const;
    Polynomial row_polynomial(std::size_t i) const;
    std::vector<Rat> to_row(const Polynomial& f) const;

    bool operator==(const SubspaceBasis&) const = default;

  private:
    int n_, d_;
    std::vector<std::vector<int>> monomials_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

// Smallest permutation-stable subspace containing the generators: closes the
// span under adjacent transpositions until the dimension stops growing.
// All generators must share arity and degree. Guarded by cap on n.
SubspaceBasis orbit_span(const std::vector<Polynomial>& generators,
                         int cap = kDefaultVarCap);

// Trace of the canonical representative of rho on the row space. The space
// must be stable under that representative; a nonzero projection residual
// reports the violation.
Rat module_trace(const SubspaceBasis& basis, const CycleType& rho);

// Character-theoretic decomposition of a permutation-stable row space.
Decomposition decompose_submodule(const SubspaceBasis& basis,
                                  const CharacterTable& table);

// Fewest elements generating the span of the generators' orbits as a module:
// min_generators of its decomposition.
Int min_symmetric_generators(const std::vector<Polynomial>& generators,
                             int cap = kDefaultVarCap);

}  // namespace symrep
