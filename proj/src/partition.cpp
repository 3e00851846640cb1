#include "symrep/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace symrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InputError("partition parts must be positive, got " +
                             std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

PaddedPartition::PaddedPartition(Partition base, int length)
    : base_(std::move(base)), length_(length) {
    if (length_ < static_cast<int>(base_.size()))
        throw InputError("padded length " + std::to_string(length_) +
                         " shorter than partition with " +
                         std::to_string(base_.size()) + " parts");
}

std::vector<int> PaddedPartition::entries() const {
    std::vector<int> e(base_.parts());
    e.resize(static_cast<std::size_t>(length_), 0);
    return e;
}

Partition partition_from_entries(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end(), std::greater<int>());
    while (!entries.empty() && entries.back() == 0) entries.pop_back();
    return Partition(std::move(entries));
}

namespace {

void emit_partitions(int remaining, int max_part, int parts_left,
                     std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, parts_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_parts) {
    if (d < 0) throw InputError("cannot partition a negative integer");
    if (max_parts && *max_parts < 1)
        throw InputError("max_parts must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(d, d, max_parts ? *max_parts : d, prefix, out);
    if (d == 0) out.assign(1, Partition{});
    return out;
}

Int partition_count(int d) {
    if (d < 0) throw InputError("cannot partition a negative integer");
    // count[i] = partitions of i with parts <= k, k growing over the outer loop
    std::vector<Int> count(static_cast<std::size_t>(d) + 1, 0);
    count[0] = 1;
    for (int k = 1; k <= d; ++k)
        for (int i = k; i <= d; ++i) count[i] += count[i - k];
    return count[static_cast<std::size_t>(d)];
}

Int a000070(int d) {
    if (d < 1) throw InputError("partial partition-count sum needs d >= 1");
    Int total = 0;
    for (int i = 0; i < d; ++i) total += partition_count(i);
    return total;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw InputError("dominance compares partitions of equal weight");
    long acc_l = 0, acc_m = 0;
    std::size_t len = std::max(lambda.size(), mu.size());
    for (std::size_t i = 0; i < len; ++i) {
        acc_l += lambda.part(i);
        acc_m += mu.part(i);
        if (acc_l < acc_m) return false;
    }
    return true;
}

Partition metatype(const PaddedPartition& a) {
    std::map<int, int> freq;
    for (int v : a.entries()) ++freq[v];
    std::vector<int> mults;
    mults.reserve(freq.size());
    for (auto& [value, count] : freq) mults.push_back(count);
    return partition_from_entries(std::move(mults));
}

namespace {

int parse_int_strict(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InputError("not an integer: '" + std::string(s) + "'");
    return value;
}

}  // namespace

Partition parse_partition(const std::string& text) {
    if (text.empty()) return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok(text.data() + pos,
                             (comma == std::string::npos ? text.size() : comma) - pos);
        parts.push_back(parse_int_strict(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));  // rejects zero/negative/increasing
}

PaddedPartition parse_padded_partition(const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw InputError("padded partition needs a ';n=<len>' suffix");
    std::string_view suffix(text.data() + semi + 1, text.size() - semi - 1);
    if (suffix.substr(0, 2) != "n=")
        throw InputError("padded partition suffix must look like 'n=7'");
    int length = parse_int_strict(suffix.substr(2));
    return PaddedPartition(parse_partition(text.substr(0, semi)), length);
}

}  // namespace symrep
