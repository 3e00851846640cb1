#include "symrep/verify.hpp"

#include <omp.h>

#include "symrep/tableaux.hpp"

namespace symrep {

KostkaInequalityReport verify_kostka_inequality(int n, Exec exec, int cap) {
    if (n < 2) throw InputError("the inequality needs n >= 2");
    if (n > cap)
        throw ResourceError("inequality sweep capped at n <= " + std::to_string(cap));
    auto shapes = enumerate_partitions(n);

    // flattened (lambda, mu) grid, lambda != (n)
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (shapes[i].size() == 1) continue;
        for (std::size_t j = 0; j < shapes.size(); ++j) cells.emplace_back(i, j);
    }

    std::vector<InequalityCell> results(cells.size());
    auto compute = [&](std::size_t c, KostkaCache& cache) {
        const Partition& lambda = shapes[cells[c].first];
        const Partition& mu = shapes[cells[c].second];
        results[c] = InequalityCell{
            lambda, mu, Int(n - 1) * kostka(lambda, mu, cache),
            Int(static_cast<long>(mu.size()) - 1) * specht_dim(lambda)};
    };

    if (exec == Exec::serial) {
        KostkaCache cache;
        for (std::size_t c = 0; c < cells.size(); ++c) compute(c, cache);
    } else {
#pragma omp parallel
        {
            KostkaCache cache;  // per worker; sharing is not synchronized
#pragma omp for schedule(dynamic, 8)
            for (long c = 0; c < static_cast<long>(cells.size()); ++c)
                compute(static_cast<std::size_t>(c), cache);
        }
    }

    KostkaInequalityReport report;
    report.n = n;
    report.checked = static_cast<long>(cells.size());
    for (auto& cell : results)
        if (cell.lhs > cell.rhs) report.violations.push_back(std::move(cell));
    return report;
}

namespace {

// Each table tabulates a fixed list of shapes; the remaining dominators of mu
// are settled in closed form, not tabulated.
AppendixTable appendix_table(int n, const Partition& mu,
                             const std::vector<Partition>& shapes) {
    AppendixTable table;
    table.n = n;
    table.mu = mu;
    KostkaCache cache;
    for (const auto& lambda : shapes) {
        Int k = kostka(lambda, mu, cache);
        Int f = specht_dim(lambda);
        table.rows.push_back(AppendixRow{lambda, k, f, Int(n - 1) * k,
                                         Int(static_cast<long>(mu.size()) - 1) * f});
    }
    return table;
}

AppendixTable frozen_table(int n, const Partition& mu,
                           std::vector<AppendixRow> rows) {
    return AppendixTable{n, mu, std::move(rows)};
}

}  // namespace

std::vector<AppendixTable> appendix_reference() {
    std::vector<AppendixTable> ref;
    ref.push_back(frozen_table(
        5, Partition({2, 2, 1}),
        {AppendixRow{Partition({3, 2}), 2, 5, 8, 10},
         AppendixRow{Partition({3, 1, 1}), 1, 6, 4, 12},
         AppendixRow{Partition({2, 2, 1}), 1, 5, 4, 10}}));
    ref.push_back(frozen_table(
        6, Partition({2, 2, 2}),
        {AppendixRow{Partition({4, 1, 1}), 1, 10, 5, 20},
         AppendixRow{Partition({3, 3}), 1, 5, 5, 10},
         AppendixRow{Partition({3, 2, 1}), 2, 16, 10, 32},
         AppendixRow{Partition({2, 2, 2}), 1, 5, 5, 10}}));
    return ref;
}

AppendixReport reproduce_appendix_tables() {
    AppendixReport report;
    report.reference = appendix_reference();
    for (const auto& ref : report.reference) {
        std::vector<Partition> shapes;
        for (const auto& row : ref.rows) shapes.push_back(row.lambda);
        report.computed.push_back(appendix_table(ref.n, ref.mu, shapes));
    }
    report.matches = report.computed == report.reference;
    return report;
}

namespace {

ElementaryCell elementary_cell(int n, int l, int p) {
    Rat lhs = Rat(Int(n - 1) * factorial(p + l - 2)) /
              Rat(factorial(p) * factorial(l - 2));
    Rat rhs = Rat(Int(l - 1) * factorial(n) * Int(n - 2 * p + 1)) /
              Rat(factorial(p) * factorial(n - p + 1));
    return ElementaryCell{n, l, p, lhs, rhs};
}

}  // namespace

ElementaryReport verify_elementary_inequality(int n_max, int l_max, int p_max,
                                              Exec exec) {
    if (n_max < 5 || l_max < 2 || p_max < 2)
        throw InputError("bounds must reach the hypothesis n >= 5, l, p >= 2");

    std::vector<std::tuple<int, int, int>> grid;
    long skipped = 0;
    for (int n = 5; n <= n_max; ++n)
        for (int l = 2; l <= l_max; ++l)
            for (int p = 2; p <= p_max; ++p) {
                if (n < l * p) {
                    ++skipped;
                    continue;
                }
                grid.emplace_back(n, l, p);
            }

    std::vector<ElementaryCell> results(grid.size());
    if (exec == Exec::serial) {
        for (std::size_t c = 0; c < grid.size(); ++c) {
            auto [n, l, p] = grid[c];
            results[c] = elementary_cell(n, l, p);
        }
    } else {
#pragma omp parallel for schedule(static)
        for (long c = 0; c < static_cast<long>(grid.size()); ++c) {
            auto [n, l, p] = grid[static_cast<std::size_t>(c)];
            results[static_cast<std::size_t>(c)] = elementary_cell(n, l, p);
        }
    }

    ElementaryReport report;
    report.n_max = n_max;
    report.l_max = l_max;
    report.p_max = p_max;
    report.checked = static_cast<long>(grid.size());
    report.skipped = skipped;
    for (auto& cell : results)
        if (cell.lhs > cell.rhs) report.violations.push_back(std::move(cell));
    return report;
}

MainInequalityReport verify_main_inequality(int n, int d, Exec exec) {
    if (d < 1) throw InputError("degree must be positive");
    if (n <= d) throw InputError("the bound needs more variables than the degree");
    auto shapes = enumerate_partitions(n);
    Int scale = a000070(d);

    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (shapes[i].size() > 1) cells.push_back(i);

    std::vector<MainInequalityRow> rows(cells.size());
    auto compute = [&](std::size_t c, KostkaCache& cache) {
        const Partition& lambda = shapes[cells[c]];
        rows[c] = MainInequalityRow{lambda,
                                    Int(n - 1) * kostka_metatype_sum(lambda, d, cache),
                                    scale * specht_dim(lambda)};
    };

    if (exec == Exec::serial) {
        KostkaCache cache;
        for (std::size_t c = 0; c < cells.size(); ++c) compute(c, cache);
    } else {
#pragma omp parallel
        {
            KostkaCache cache;
#pragma omp for schedule(dynamic, 4)
            for (long c = 0; c < static_cast<long>(cells.size()); ++c)
                compute(static_cast<std::size_t>(c), cache);
        }
    }

    MainInequalityReport report;
    report.n = n;
    report.d = d;
    report.rows = std::move(rows);
    for (const auto& row : report.rows)
        if (row.lhs > row.rhs) report.violations.push_back(row.lambda);
    return report;
}

BoundGridReport verify_bound_grid(int d_lo, int d_hi, int n_span, Exec exec) {
    if (d_lo < 1 || d_hi < d_lo) throw InputError("bad degree range");
    if (n_span < 1) throw InputError("need at least one n per degree");

    std::vector<std::tuple<int, int, long>> grid;  // (d, n, r)
    for (int d = d_lo; d <= d_hi; ++d) {
        long pd = partition_count(d).get_si();
        for (int n = d + 1; n <= d + n_span; ++n)
            for (long r = 1; r <= pd; ++r) grid.emplace_back(d, n, r);
    }

    std::vector<BoundGridCell> cells(grid.size());
    auto compute = [&](std::size_t c, KostkaCache& cache) {
        auto [d, n, r] = grid[c];
        BoundCheck check = check_bound(n, d, Int(r), cache);
        bool ok = check.equality == check.threshold_holds;
        cells[c] = BoundGridCell{std::move(check), ok};
    };

    if (exec == Exec::serial) {
        KostkaCache cache;
        for (std::size_t c = 0; c < grid.size(); ++c) compute(c, cache);
    } else {
#pragma omp parallel
        {
            KostkaCache cache;
#pragma omp for schedule(dynamic, 2)
            for (long c = 0; c < static_cast<long>(grid.size()); ++c)
                compute(static_cast<std::size_t>(c), cache);
        }
    }

    BoundGridReport report;
    report.checked = static_cast<long>(cells.size());
    for (const auto& cell : cells)
        if (!cell.consistent) ++report.inconsistent;
    report.cells = std::move(cells);
    return report;
}

}  // namespace symrep
