#include "symrep/character.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace symrep {

CycleType::CycleType(Partition t) : type(std::move(t)) {
    std::map<int, int> mult;
    for (int k : type.parts()) ++mult[k];
    Int centralizer = 1;
    for (auto& [k, e] : mult) {
        Int kk = k;
        mpz_pow_ui(kk.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(e));
        centralizer *= kk * factorial(e);
    }
    size = factorial(type.weight()) / centralizer;
}

std::vector<int> CycleType::representative() const {
    std::vector<int> image(static_cast<std::size_t>(degree()));
    int base = 0;
    for (int k : type.parts()) {
        for (int i = 0; i < k; ++i)
            image[static_cast<std::size_t>(base + i)] = base + (i + 1) % k;
        base += k;
    }
    return image;
}

std::vector<CycleType> all_cycle_types(int n) {
    std::vector<CycleType> out;
    for (auto& p : enumerate_partitions(n)) out.emplace_back(std::move(p));
    return out;
}

namespace {

// Beta numbers: first-column hook lengths, strictly decreasing. Removing a
// border strip of length L means replacing some b by b-L, with the sign given
// by the number of beta numbers jumped over.
std::vector<int> beta_set(const Partition& shape) {
    int m = static_cast<int>(shape.size());
    std::vector<int> beta(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        beta[static_cast<std::size_t>(i)] = shape.part(static_cast<std::size_t>(i)) + (m - 1 - i);
    return beta;
}

Partition shape_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) {
        int p = beta[static_cast<std::size_t>(i)] - (m - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

struct MnKey {
    std::vector<int> shape;
    std::size_t cycle_idx;
    bool operator==(const MnKey&) const = default;
};

struct MnKeyHash {
    std::size_t operator()(const MnKey& k) const {
        std::size_t h = k.cycle_idx * 1099511628211ull + 14695981039346656037ull;
        for (int x : k.shape) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using MnMemo = std::unordered_map<MnKey, Int, MnKeyHash>;

// cycles sorted decreasing; ci cycles already consumed.
Int mn_value(const Partition& shape, const std::vector<int>& cycles, std::size_t ci,
             MnMemo& memo) {
    if (ci == cycles.size()) return 1;  // shape is exhausted exactly then
    MnKey key{shape.parts(), ci};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int len = cycles[ci];
    std::vector<int> beta = beta_set(shape);
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        if (b < len) continue;
        int target = b - len;
        bool occupied = false;
        int jumped = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < b) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> next_beta = beta;
        next_beta[i] = target;
        Int sub = mn_value(shape_from_beta(std::move(next_beta)), cycles, ci + 1, memo);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::vector<int> cycles_desc(const CycleType& rho) { return rho.type.parts(); }

}  // namespace

Int character_value(const Partition& lambda, const CycleType& rho) {
    if (lambda.weight() != rho.degree())
        throw InputError("shape and cycle type must have equal weight");
    MnMemo memo;
    return mn_value(lambda, cycles_desc(rho), 0, memo);
}

const Int& CharacterTable::value(const Partition& lambda, const Partition& rho) const {
    return values_[shape_index(lambda)][class_index(rho)];
}

std::size_t CharacterTable::shape_index(const Partition& lambda) const {
    for (std::size_t i = 0; i < shapes_.size(); ++i)
        if (shapes_[i] == lambda) return i;
    throw InputError("not a partition of " + std::to_string(n_) + ": " +
                     lambda.to_string());
}

std::size_t CharacterTable::class_index(const Partition& rho) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].type == rho) return i;
    throw InputError("not a cycle type of " + std::to_string(n_) + ": " +
                     rho.to_string());
}

CharacterTable character_table(int n, int cap) {
    if (n < 1) throw InputError("character table needs n >= 1");
    if (n > cap)
        throw ResourceError("character table capped at n <= " + std::to_string(cap));
    CharacterTable t;
    t.n_ = n;
    t.shapes_ = enumerate_partitions(n);
    t.classes_ = all_cycle_types(n);
    t.values_.assign(t.shapes_.size(), std::vector<Int>(t.classes_.size()));
    for (std::size_t c = 0; c < t.classes_.size(); ++c) {
        MnMemo memo;  // keyed on remaining shape; valid within one column
        std::vector<int> cycles = cycles_desc(t.classes_[c]);
        for (std::size_t s = 0; s < t.shapes_.size(); ++s)
            t.values_[s][c] = mn_value(t.shapes_[s], cycles, 0, memo);
    }
    return t;
}

Int multiplicity_from_trace(const std::map<Partition, Rat>& trace,
                            const Partition& lambda, const CharacterTable& table) {
    Rat acc = 0;
    for (std::size_t c = 0; c < table.classes().size(); ++c) {
        const CycleType& cls = table.classes()[c];
        auto it = trace.find(cls.type);
        if (it == trace.end())
            throw InputError("trace missing cycle type " + cls.type.to_string());
        acc += Rat(cls.size) * it->second *
               Rat(table.value(table.shape_index(lambda), c));
    }
    acc /= Rat(factorial(table.n()));
    acc.canonicalize();
    if (acc.get_den() != 1 || acc.get_num() < 0)
        throw InputError("trace map is not the character of a module: multiplicity of " +
                         lambda.to_string() + " came out " + acc.get_str());
    return acc.get_num();
}

}  // namespace symrep
