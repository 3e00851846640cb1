#include "symrep/kostka.hpp"

#include <algorithm>

#include "symrep/tableaux.hpp"

namespace symrep {

const Int* KostkaCache::lookup(const Partition& lambda, const Partition& mu) const {
    auto it = map_.find(Key{lambda.parts(), mu.parts()});
    if (it == map_.end()) {
        ++misses_;
        return nullptr;
    }
    ++hits_;
    return &it->second;
}

void KostkaCache::store(const Partition& lambda, const Partition& mu, Int value) {
    map_.emplace(Key{lambda.parts(), mu.parts()}, std::move(value));
}

namespace {

void grow_strips(const Partition& lambda, std::size_t i, int left,
                 std::vector<int>& v, std::vector<std::vector<int>>& out) {
    if (i == lambda.size()) {
        if (left == 0) out.push_back(v);
        return;
    }
    int hi = std::min(left, lambda.part(i) - lambda.part(i + 1));
    for (int x = 0; x <= hi; ++x) {
        v[i] = x;
        grow_strips(lambda, i + 1, left - x, v, out);
    }
    v[i] = 0;
}

}  // namespace

std::vector<std::vector<int>> strip_vectors(const Partition& lambda, int k) {
    if (k < 0) throw InputError("strip size must be nonnegative");
    std::vector<std::vector<int>> out;
    std::vector<int> v(lambda.size(), 0);
    grow_strips(lambda, 0, k, v, out);
    return out;
}

namespace {

Int kostka_rec(const Partition& lambda, const Partition& mu, KostkaCache& cache) {
    if (mu.size() <= 1) return lambda == mu ? 1 : 0;
    if (const Int* hit = cache.lookup(lambda, mu)) return *hit;

    std::vector<int> head(mu.parts().begin(), mu.parts().end() - 1);
    Partition mu_prefix(std::move(head));
    Int total = 0;
    for (const auto& v : strip_vectors(lambda, mu.parts().back())) {
        std::vector<int> rest(lambda.parts());
        for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= v[i];
        total += kostka_rec(partition_from_entries(std::move(rest)), mu_prefix, cache);
    }
    cache.store(lambda, mu, total);
    return total;
}

}  // namespace

Int kostka(const Partition& lambda, const Partition& mu, KostkaCache& cache) {
    if (lambda.weight() != mu.weight())
        throw InputError("shape and content must have equal weight");
    return kostka_rec(lambda, mu, cache);
}

Int kostka(const Partition& lambda, const Partition& mu) {
    KostkaCache cache;
    return kostka(lambda, mu, cache);
}

Int kostka_bruteforce(const Partition& lambda, const Partition& mu, int cap) {
    return static_cast<long>(enumerate_ssyt(lambda, mu, cap).size());
}

Int kostka_metatype_sum(const Partition& lambda, int d, KostkaCache& cache) {
    if (d < 1) throw InputError("degree must be positive");
    int n = lambda.weight();
    Int total = 0;
    for (const auto& a : enumerate_partitions(d, n))
        total += kostka(lambda, metatype(PaddedPartition(a, n)), cache);
    return total;
}

Int kostka_metatype_sum(const Partition& lambda, int d) {
    KostkaCache cache;
    return kostka_metatype_sum(lambda, d, cache);
}

}  // namespace symrep
