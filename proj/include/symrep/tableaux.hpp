#pragma once

#include <vector>

#include "symrep/partition.hpp"
#include "symrep/types.hpp"

namespace symrep {

// Rows of cell entries; row r has shape.part(r) entries.
struct SYTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool is_valid() const;  // entries 1..n, rows and columns strictly increasing
};

struct SSYTableau {
    Partition shape;
    Partition content;  // content.part(v-1) copies of each value v
    std::vector<std::vector<int>> rows;

    bool is_valid() const;  // rows weakly, columns strictly increasing; content exact
};

// Hook length at 1-indexed (row, col); the cell must lie in the diagram.
int hook_length(const Partition& shape, int row, int col);

// n! / product of hook lengths. The division is checked to be exact.
Int specht_dim(const Partition& shape);

// All standard tableaux of the shape, in the order produced by inserting
// 1..n top row first. Guarded by cap on the weight.
std::vector<SYTableau> enumerate_syt(const Partition& shape,
                                     int cap = kDefaultEnumCap);

// All semistandard tableaux of the shape with the given content, filled
// column by column with feasibility pruning. Guarded by cap on the weight.
std::vector<SSYTableau> enumerate_ssyt(const Partition& shape,
                                       const Partition& content,
                                       int cap = kDefaultEnumCap);

std::string tableau_ascii(const std::vector<std::vector<int>>& rows);

}  // namespace symrep
