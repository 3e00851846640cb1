#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symrep/partition.hpp"
#include "symrep/types.hpp"

namespace symrep {

// Memo for the Kostka recursion, keyed by the (shape, content) pair.
// Not internally synchronized: concurrent workers should each own one.
// Sharing a cache never changes any returned value, only the hit counts.
class KostkaCache {
  public:
    const Int* lookup(const Partition& lambda, const Partition& mu) const;
    void store(const Partition& lambda, const Partition& mu, Int value);

    std::size_t size() const { return map_.size(); }
    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

  private:
    struct Key {
        std::vector<int> lambda, mu;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            auto mix = [&h](int x) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
                h *= 1099511628211ull;
            };
            for (int x : k.lambda) mix(x);
            mix(-1);
            for (int x : k.mu) mix(x);
            return h;
        }
    };
    std::unordered_map<Key, Int, KeyHash> map_;
    mutable std::size_t hits_ = 0, misses_ = 0;
};

// Ways to remove a horizontal strip of size k from lambda: vectors v >= 0 with
// sum k and lambda_i - v_i >= lambda_{i+1}, one entry per part of lambda.
std::vector<std::vector<int>> strip_vectors(const Partition& lambda, int k);

// Number of semistandard tableaux of shape lambda and content mu, by the
// recursion that strips the last (smallest) part of mu as a horizontal strip.
Int kostka(const Partition& lambda, const Partition& mu, KostkaCache& cache);
Int kostka(const Partition& lambda, const Partition& mu);

// Same number by direct enumeration. Oracle for the recursion in tests.
Int kostka_bruteforce(const Partition& lambda, const Partition& mu,
                      int cap = kDefaultEnumCap);

// Sum of kostka(lambda, metatype(a padded to n)) over partitions a of d with
// at most n parts; n is lambda's weight.
Int kostka_metatype_sum(const Partition& lambda, int d, KostkaCache& cache);
Int kostka_metatype_sum(const Partition& lambda, int d);

}  // namespace symrep
