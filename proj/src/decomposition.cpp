#include "symrep/decomposition.hpp"

#include "symrep/tableaux.hpp"

namespace symrep {

Int Decomposition::dimension() const {
    Int dim = 0;
    for (const auto& [shape, mult] : mults) dim += mult * specht_dim(shape);
    return dim;
}

Decomposition decompose_rd(int n, int d, KostkaCache& cache) {
    if (n < 1) throw InputError("need at least one variable");
    if (d < 1) throw InputError("degree must be positive");
    auto orbit_types = enumerate_partitions(d, n);

    Decomposition out;
    out.n = n;
    for (const auto& lambda : enumerate_partitions(n)) {
        Int mult;
        if (lambda.size() == 1) {
            // every orbit contributes the trivial module exactly once
            mult = static_cast<long>(orbit_types.size());
        } else if (lambda.parts() == std::vector<int>{n - 1, 1}) {
            // one below the number of distinct exponent values, per orbit
            mult = 0;
            for (const auto& a : orbit_types)
                mult += static_cast<int>(metatype(PaddedPartition(a, n)).size()) - 1;
        } else {
            mult = 0;
            for (const auto& a : orbit_types)
                mult += kostka(lambda, metatype(PaddedPartition(a, n)), cache);
        }
        if (mult != 0) out.mults.emplace(lambda, std::move(mult));
    }
    return out;
}

Decomposition decompose_rd(int n, int d) {
    KostkaCache cache;
    return decompose_rd(n, d, cache);
}

Decomposition maximal_r_generated(const Decomposition& v, const Int& r) {
    if (r < 0) throw InputError("generator count must be nonnegative");
    Decomposition out;
    out.n = v.n;
    for (const auto& [shape, mult] : v.mults) {
        Int clamp = r * specht_dim(shape);
        if (mult < clamp) clamp = mult;
        if (clamp != 0) out.mults.emplace(shape, std::move(clamp));
    }
    return out;
}

Int min_generators(const Decomposition& v) {
    Int best = 0;
    for (const auto& [shape, mult] : v.mults) {
        Int need = ceil_div(mult, specht_dim(shape));
        if (need > best) best = need;
    }
    return best;
}

bool is_r_generated(const Decomposition& v, const Int& r) {
    return maximal_r_generated(v, r) == v;
}

BoundCheck check_bound(int n, int d, const Int& r, KostkaCache& cache) {
    if (d < 1) throw InputError("degree must be positive");
    if (n <= d)
        throw InputError("the bound check needs more variables than the degree");
    Int pd = partition_count(d);
    if (r < 1 || r > pd)
        throw InputError("generator count must lie in 1..p(d) = 1.." + pd.get_str());

    BoundCheck out;
    out.n = n;
    out.d = d;
    out.r = r;
    out.dim_max = maximal_r_generated(decompose_rd(n, d, cache), r).dimension();
    out.target = binomial(n + d - 1, d) - (pd - r);
    out.equality = out.dim_max == out.target;
    out.threshold_holds = r * (n - 1) >= a000070(d);
    return out;
}

BoundCheck check_bound(int n, int d, const Int& r) {
    KostkaCache cache;
    return check_bound(n, d, r, cache);
}

}  // namespace symrep
