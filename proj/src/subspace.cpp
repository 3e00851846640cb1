#include "symrep/subspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symrep {

namespace {

void grow_monomials(int n, int left, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == n - 1) {
        prefix.push_back(left);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = left; e >= 0; --e) {
        prefix.push_back(e);
        grow_monomials(n, left - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> monomial_basis(int n, int d) {
    if (n < 1) throw InputError("need at least one variable");
    if (d < 0) throw InputError("degree must be nonnegative");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    grow_monomials(n, d, prefix, out);
    return out;
}

SubspaceBasis::SubspaceBasis(int n, int d)
    : n_(n), d_(d), monomials_(monomial_basis(n, d)) {}

std::vector<Rat> SubspaceBasis::to_row(const Polynomial& f) const {
    if (f.n() != n_ || f.degree() != d_)
        throw InputError("polynomial does not match the ambient space");
    std::vector<Rat> row(monomials_.size(), Rat(0));
    for (const auto& [exp, c] : f.terms()) {
        auto it = std::lower_bound(monomials_.begin(), monomials_.end(), exp,
                                   [](const std::vector<int>& a, const std::vector<int>& b) {
                                       return a > b;  // stored lex decreasing
                                   });
        row[static_cast<std::size_t>(it - monomials_.begin())] = c;
    }
    return row;
}

bool SubspaceBasis::insert(const Polynomial& f) { return insert_row(to_row(f)); }

bool SubspaceBasis::insert_row(std::vector<Rat> row) {
    if (row.size() != monomials_.size())
        throw InputError("row length does not match the ambient space");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& c = row[pivots_[i]];
        if (c == 0) continue;
        Rat scale = c;  // pivot entries are 1
        for (std::size_t j = 0; j < row.size(); ++j)
            if (rows_[i][j] != 0) row[j] -= scale * rows_[i][j];
    }
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) return false;

    Rat inv = row[lead];
    for (auto& x : row)
        if (x != 0) x /= inv;

    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& c = rows_[i][lead];
        if (c == 0) continue;
        Rat scale = c;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) rows_[i][j] -= scale * row[j];
    }

    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    rows_.insert(rows_.begin() + at, std::move(row));
    pivots_.insert(pivots_.begin() + at, lead);
    return true;
}

bool SubspaceBasis::contains(const Polynomial& f) const {
    std::vector<Rat> row = to_row(f);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& c = row[pivots_[i]];
        if (c == 0) continue;
        Rat scale = c;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (rows_[i][j] != 0) row[j] -= scale * rows_[i][j];
    }
    return std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
}

Polynomial SubspaceBasis::row_polynomial(std::size_t i) const {
    Polynomial f(n_, d_);
    for (std::size_t j = 0; j < monomials_.size(); ++j)
        if (rows_[i][j] != 0) f.add_term(monomials_[j], rows_[i][j]);
    return f;
}

SubspaceBasis orbit_span(const std::vector<Polynomial>& generators, int cap) {
    if (generators.empty()) throw InputError("need at least one generator");
    int n = generators.front().n();
    int d = generators.front().degree();
    for (const auto& g : generators)
        if (g.n() != n || g.degree() != d)
            throw InputError("generators must share arity and degree");
    if (n > cap)
        throw ResourceError("orbit span capped at " + std::to_string(cap) +
                            " variables");

    SubspaceBasis basis(n, d);
    for (const auto& g : generators) basis.insert(g);

    // Adjacent transpositions generate the whole group, so a span stable
    // under each of them is stable under every permutation.
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<int> sigma(static_cast<std::size_t>(n));
            std::iota(sigma.begin(), sigma.end(), 0);
            std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i + 1)]);
            for (std::size_t r = 0, stop = basis.rank(); r < stop; ++r)
                if (basis.insert(permute(sigma, basis.row_polynomial(r)))) grew = true;
        }
    }
    return basis;
}

namespace {

// Column c holds the monomial exp; the permuted row has the old value of
// column c at the image column sigma(exp).
std::vector<std::size_t> column_map(const SubspaceBasis& basis,
                                    const std::vector<int>& sigma) {
    const auto& mons = basis.monomials();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t j = 0; j < mons.size(); ++j) index.emplace(mons[j], j);
    std::vector<std::size_t> to(mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) {
        std::vector<int> moved(mons[j].size());
        for (std::size_t i = 0; i < mons[j].size(); ++i)
            moved[static_cast<std::size_t>(sigma[i])] = mons[j][i];
        to[j] = index.at(moved);
    }
    return to;
}

}  // namespace

Rat module_trace(const SubspaceBasis& basis, const CycleType& rho) {
    if (rho.degree() != basis.n())
        throw InputError("cycle type does not match the variable count");
    std::vector<std::size_t> to = column_map(basis, rho.representative());
    const auto& rows = basis.rows();
    const auto& pivots = basis.pivots();

    Rat trace = 0;
    std::vector<Rat> image(basis.ambient_dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::fill(image.begin(), image.end(), Rat(0));
        for (std::size_t j = 0; j < image.size(); ++j)
            if (rows[i][j] != 0) image[to[j]] = rows[i][j];
        trace += image[pivots[i]];
        // the image must project back onto the basis with zero residual
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Rat& c = image[pivots[k]];
            if (c == 0) continue;
            Rat scale = c;
            for (std::size_t j = 0; j < image.size(); ++j)
                if (rows[k][j] != 0) image[j] -= scale * rows[k][j];
        }
        for (const Rat& x : image)
            if (x != 0)
                throw InputError("row space is not stable under the class representative");
    }
    return trace;
}

Decomposition decompose_submodule(const SubspaceBasis& basis,
                                  const CharacterTable& table) {
    if (table.n() != basis.n())
        throw InputError("character table does not match the variable count");
    std::map<Partition, Rat> trace;
    for (const auto& cls : table.classes())
        trace.emplace(cls.type, module_trace(basis, cls));

    Decomposition out;
    out.n = basis.n();
    for (const auto& lambda : table.shapes()) {
        Int mult = multiplicity_from_trace(trace, lambda, table);
        if (mult != 0) out.mults.emplace(lambda, std::move(mult));
    }
    if (out.dimension() != static_cast<long>(basis.rank()))
        throw std::logic_error("multiplicities do not add up to the rank");
    return out;
}

Int min_symmetric_generators(const std::vector<Polynomial>& generators, int cap) {
    SubspaceBasis span = orbit_span(generators, cap);
    return min_generators(decompose_submodule(span, character_table(span.n())));
}

}  // namespace symrep
