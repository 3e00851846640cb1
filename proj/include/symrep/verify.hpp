#pragma once

#include <utility>
#include <vector>

#include "symrep/decomposition.hpp"
#include "symrep/kostka.hpp"
#include "symrep/partition.hpp"
#include "symrep/types.hpp"

namespace symrep {

// Grid kernels run their cells either on one thread (the reference
// implementation) or distributed over OpenMP workers. Cells are independent
// and results are aggregated in grid order, so both modes must agree
// exactly; the unit tests hold them to that.
enum class Exec { serial, parallel };

struct InequalityCell {
    Partition lambda, mu;
    Int lhs;  // (n-1) * kostka(lambda, mu)
    Int rhs;  // (#mu - 1) * specht_dim(lambda)

    bool operator==(const InequalityCell&) const = default;
};

struct KostkaInequalityReport {
    int n = 0;
    long checked = 0;
    std::vector<InequalityCell> violations;

    bool operator==(const KostkaInequalityReport&) const = default;
};

// Checks (n-1)*K <= (#mu - 1)*dim over all pairs of partitions of n with
// lambda != (n). Violations are data, not errors.
KostkaInequalityReport verify_kostka_inequality(int n, Exec exec = Exec::parallel,
                                                int cap = kDefaultEnumCap + 2);

struct AppendixRow {
    Partition lambda;
    Int kostka_value, dim, lhs, rhs;

    bool operator==(const AppendixRow&) const = default;
};

struct AppendixTable {
    int n = 0;
    Partition mu;
    std::vector<AppendixRow> rows;  // lambda restricted to dominators of mu

    bool operator==(const AppendixTable&) const = default;
};

struct AppendixReport {
    std::vector<AppendixTable> computed;
    std::vector<AppendixTable> reference;
    bool matches = false;

    bool operator==(const AppendixReport&) const = default;
};

// Recomputes the two worked inequality tables (n=5 with mu=(2,2,1) and n=6
// with mu=(2,2,2)) and compares them cell for cell against frozen values.
AppendixReport reproduce_appendix_tables();
std::vector<AppendixTable> appendix_reference();

struct ElementaryCell {
    int n = 0, l = 0, p = 0;
    Rat lhs, rhs;

    bool operator==(const ElementaryCell&) const = default;
};

struct ElementaryReport {
    int n_max = 0, l_max = 0, p_max = 0;
    long checked = 0;
    long skipped = 0;  // tuples with n < l*p are outside the hypothesis
    std::vector<ElementaryCell> violations;

    bool operator==(const ElementaryReport&) const = default;
};

// Exact check of (n-1)(p+l-2)!/(p!(l-2)!) <= (l-1) n!(n-2p+1)/(p!(n-p+1)!)
// on the box 5 <= n <= n_max, 2 <= l <= l_max, 2 <= p <= p_max.
ElementaryReport verify_elementary_inequality(int n_max, int l_max, int p_max,
                                              Exec exec = Exec::parallel);

struct MainInequalityRow {
    Partition lambda;
    Int lhs;  // (n-1) * kostka_metatype_sum(lambda, d)
    Int rhs;  // a000070(d) * specht_dim(lambda)

    bool operator==(const MainInequalityRow&) const = default;
};

struct MainInequalityReport {
    int n = 0, d = 0;
    std::vector<MainInequalityRow> rows;  // every lambda except (n)
    std::vector<Partition> violations;

    bool operator==(const MainInequalityReport&) const = default;
};

// Checks the degree-d multiplicity-to-dimension bound for every nontrivial
// shape. Needs n > d.
MainInequalityReport verify_main_inequality(int n, int d, Exec exec = Exec::parallel);

struct BoundGridCell {
    BoundCheck check;
    bool consistent = false;  // equality and threshold agree

    bool operator==(const BoundGridCell&) const = default;
};

struct BoundGridReport {
    long checked = 0;
    long inconsistent = 0;
    std::vector<BoundGridCell> cells;

    bool operator==(const BoundGridReport&) const = default;
};

// Exhausts check_bound over d in [d_lo, d_hi], every r in 1..p(d) and
// n in d+1..d+n_span.
BoundGridReport verify_bound_grid(int d_lo, int d_hi, int n_span = 12,
                                  Exec exec = Exec::parallel);

}  // namespace symrep
