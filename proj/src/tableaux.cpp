#include "symrep/tableaux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symrep {

namespace {

// Length of column c (0-indexed) of the diagram.
int column_length(const Partition& shape, int c) {
    int len = 0;
    while (shape.part(static_cast<std::size_t>(len)) > c) ++len;
    return len;
}

}  // namespace

bool SYTableau::is_valid() const {
    if (rows.size() != shape.size()) return false;
    std::vector<int> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.part(r)) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            seen.push_back(v);
            if (c > 0 && rows[r][c - 1] >= v) return false;
            if (r > 0 && rows[r - 1][c] >= v) return false;
        }
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i) + 1) return false;
    return true;
}

bool SSYTableau::is_valid() const {
    if (rows.size() != shape.size()) return false;
    std::map<int, int> counts;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.part(r)) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1) return false;
            ++counts[v];
            if (c > 0 && rows[r][c - 1] > v) return false;
            if (r > 0 && rows[r - 1][c] >= v) return false;
        }
    }
    for (std::size_t v = 0; v < content.size(); ++v)
        if (counts[static_cast<int>(v) + 1] != content.part(v)) return false;
    return static_cast<int>(counts.size()) <= static_cast<int>(content.size());
}

int hook_length(const Partition& shape, int row, int col) {
    if (row < 1 || col < 1 || col > shape.part(static_cast<std::size_t>(row - 1)))
        throw InputError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                         ") lies outside the diagram");
    int arm = shape.part(static_cast<std::size_t>(row - 1)) - col;
    int leg = column_length(shape, col - 1) - row;
    return arm + leg + 1;
}

Int specht_dim(const Partition& shape) {
    Int hooks = 1;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 1; c <= shape.part(r); ++c)
            hooks *= hook_length(shape, static_cast<int>(r) + 1, c);
    Int fact = factorial(shape.weight());
    Int dim, rem;
    mpz_tdiv_qr(dim.get_mpz_t(), rem.get_mpz_t(), fact.get_mpz_t(), hooks.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("hook product does not divide the factorial");
    return dim;
}

namespace {

void grow_syt(const Partition& shape, int next, int n,
              std::vector<std::vector<int>>& rows, std::vector<SYTableau>& out) {
    if (next > n) {
        out.push_back({shape, rows});
        return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        // filled row lengths must stay weakly decreasing
        if (static_cast<int>(rows[r].size()) >= shape.part(r)) continue;
        if (r > 0 && rows[r].size() >= rows[r - 1].size()) continue;
        rows[r].push_back(next);
        grow_syt(shape, next + 1, n, rows, out);
        rows[r].pop_back();
    }
}

}  // namespace

std::vector<SYTableau> enumerate_syt(const Partition& shape, int cap) {
    if (shape.weight() > cap)
        throw ResourceError("standard tableau enumeration capped at weight " +
                            std::to_string(cap));
    std::vector<SYTableau> out;
    std::vector<std::vector<int>> rows(shape.size());
    grow_syt(shape, 1, shape.weight(), rows, out);
    return out;
}

namespace {

struct SsytState {
    const Partition& shape;
    const Partition& content;
    std::vector<std::vector<int>> rows;   // rows[r][c], filled column by column
    std::vector<int> remaining;           // remaining[v-1] copies of v left
    std::vector<SSYTableau>& out;
};

// Prefix feasibility once columns 0..col are complete: value v fits at most
// once per remaining column, and values <= v only in rows above row v.
bool feasible(const SsytState& st, int col) {
    int cols_left = st.shape.part(0) - (col + 1);
    int cells_above = 0, demand = 0;
    for (int v = 1; v <= static_cast<int>(st.content.size()); ++v) {
        int left = st.remaining[static_cast<std::size_t>(v - 1)];
        if (left > cols_left) return false;
        cells_above += std::max(0, st.shape.part(static_cast<std::size_t>(v - 1)) - (col + 1));
        demand += left;
        if (demand > cells_above) return false;
    }
    return true;
}

void fill_cell(SsytState& st, int col, int row_in_col, int cells_left);

void next_cell(SsytState& st, int col, int row_in_col, int cells_left) {
    if (cells_left == 0) {
        st.out.push_back({st.shape, st.content, st.rows});
        return;
    }
    int col_len = 0;
    while (st.shape.part(static_cast<std::size_t>(col_len)) > col) ++col_len;
    if (row_in_col >= col_len) {
        if (!feasible(st, col)) return;
        next_cell(st, col + 1, 0, cells_left);
        return;
    }
    fill_cell(st, col, row_in_col, cells_left);
}

void fill_cell(SsytState& st, int col, int row_in_col, int cells_left) {
    auto r = static_cast<std::size_t>(row_in_col);
    int lo = row_in_col + 1;  // strict increase down forces value > row index
    if (row_in_col > 0) lo = std::max(lo, st.rows[r - 1][static_cast<std::size_t>(col)] + 1);
    if (col > 0) lo = std::max(lo, st.rows[r][static_cast<std::size_t>(col - 1)]);
    for (int v = lo; v <= static_cast<int>(st.content.size()); ++v) {
        auto vi = static_cast<std::size_t>(v - 1);
        if (st.remaining[vi] == 0) continue;
        --st.remaining[vi];
        st.rows[r].push_back(v);
        next_cell(st, col, row_in_col + 1, cells_left - 1);
        st.rows[r].pop_back();
        ++st.remaining[vi];
    }
}

}  // namespace

std::vector<SSYTableau> enumerate_ssyt(const Partition& shape,
                                       const Partition& content, int cap) {
    if (shape.weight() != content.weight())
        throw InputError("shape and content must have equal weight");
    if (shape.weight() > cap)
        throw ResourceError("semistandard tableau enumeration capped at weight " +
                            std::to_string(cap));
    std::vector<SSYTableau> out;
    std::vector<int> remaining;
    for (std::size_t v = 0; v < content.size(); ++v) remaining.push_back(content.part(v));
    SsytState st{shape, content, std::vector<std::vector<int>>(shape.size()),
                 std::move(remaining), out};
    next_cell(st, 0, 0, shape.weight());
    return out;
}

std::string tableau_ascii(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << row[c];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace symrep
