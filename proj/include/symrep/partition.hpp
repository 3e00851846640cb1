#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symrep/types.hpp"

namespace symrep {

// Weakly decreasing positive parts. Zero parts are never stored; padding with
// zeros is a view (PaddedPartition), not a different value.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int part(std::size_t i) const {  // zero beyond the last positive part
        return i < parts_.size() ? parts_[i] : 0;
    }

    bool operator==(const Partition&) const = default;
    // Lexicographic on parts; with std::greater this is the enumeration order.
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// A partition together with a padded length n >= number of parts.
class PaddedPartition {
  public:
    PaddedPartition(Partition base, int length);

    const Partition& base() const { return base_; }
    int length() const { return length_; }
    std::vector<int> entries() const;  // parts followed by zeros, size length()

  private:
    Partition base_;
    int length_;
};

// Sorts a vector of nonnegative entries into a Partition, dropping zeros.
Partition partition_from_entries(std::vector<int> entries);

// All partitions of d in reverse-lexicographic order, (d) first, (1^d) last.
// max_parts restricts to at most that many positive parts.
std::vector<Partition> enumerate_partitions(int d,
                                            std::optional<int> max_parts = std::nullopt);

Int partition_count(int d);

// Sum of partition_count(i) for 0 <= i <= d-1.
Int a000070(int d);

// Dominance: every prefix sum of lambda is >= the matching prefix sum of mu.
// Both must have the same weight.
bool dominates(const Partition& lambda, const Partition& mu);

// Multiplicities of the distinct values of the padded entries, zeros counted,
// sorted decreasing. Always a partition of the padded length.
Partition metatype(const PaddedPartition& a);

// Strict text form: "4,3,3,1" (weakly decreasing positive), "" for the empty
// partition, optional ";n=7" suffix for a padded partition.
Partition parse_partition(const std::string& text);
PaddedPartition parse_padded_partition(const std::string& text);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace symrep
