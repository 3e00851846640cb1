#pragma once

#include <map>
#include <vector>

#include "symrep/partition.hpp"
#include "symrep/types.hpp"

namespace symrep {

// A conjugacy class of the symmetric group: cycle lengths plus the class size
// n! / prod(k^{e_k} e_k!) over cycle lengths k with multiplicity e_k.
struct CycleType {
    Partition type;
    Int size;

    explicit CycleType(Partition t);

    int degree() const { return type.weight(); }
    // The permutation with cycles (1..t1)(t1+1..t1+t2)..., as 0-based images.
    std::vector<int> representative() const;
};

std::vector<CycleType> all_cycle_types(int n);

// Character of the irreducible labelled by lambda at cycle type rho, by
// recursive border-strip removal, longest cycles consumed first.
Int character_value(const Partition& lambda, const CycleType& rho);

class CharacterTable {
  public:
    int n() const { return n_; }
    const std::vector<Partition>& shapes() const { return shapes_; }
    const std::vector<CycleType>& classes() const { return classes_; }
    const Int& value(std::size_t shape_idx, std::size_t class_idx) const {
        return values_[shape_idx][class_idx];
    }
    const Int& value(const Partition& lambda, const Partition& rho) const;
    std::size_t shape_index(const Partition& lambda) const;
    std::size_t class_index(const Partition& rho) const;

    friend CharacterTable character_table(int n, int cap);

  private:
    int n_ = 0;
    std::vector<Partition> shapes_;   // reverse-lexicographic order
    std::vector<CycleType> classes_;  // same order on the type partitions
    std::vector<std::vector<Int>> values_;
};

CharacterTable character_table(int n, int cap = kDefaultEnumCap);

// Multiplicity of the irreducible lambda in a module whose character is given
// per class: (1/n!) * sum over classes of size * trace * character.
// The trace must cover every class and the result must be a nonnegative
// integer; anything else means the map is not a character.
Int multiplicity_from_trace(const std::map<Partition, Rat>& trace,
                            const Partition& lambda, const CharacterTable& table);

}  // namespace symrep
