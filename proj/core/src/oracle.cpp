#include "b2weight/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace b2weight {

namespace {

std::string sum_key(const BinaryVector& a, const BinaryVector& b) {
    const auto& x = a.bits();
    const auto& y = b.bits();
    std::string key(x.size(), '\0');
    for (std::size_t i = 0; i < x.size(); ++i) {
        key[i] = static_cast<char>(x[i] + y[i]);
    }
    return key;
}

}  // namespace

std::optional<B2Violation> verify_b2(const Codebook& cb) {
    for (std::size_t i = 0; i < cb.vectors.size(); ++i) {
        const auto& v = cb.vectors[i];
        if (v.length() != cb.params.n) {
            throw WeightError("vector " + std::to_string(i) + " has length " +
                              std::to_string(v.length()) + ", expected " +
                              std::to_string(cb.params.n));
        }
        if (v.weight() != cb.params.omega) {
            throw WeightError("vector " + std::to_string(i) + " has weight " +
                              std::to_string(v.weight()) + ", expected " +
                              std::to_string(cb.params.omega));
        }
    }
    {
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < cb.vectors.size(); ++i) {
            if (!seen.insert(cb.vectors[i].to_string()).second) {
                throw DuplicateError("vector " + std::to_string(i) + " repeats an earlier vector");
            }
        }
    }
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> sums;
    for (std::size_t i = 0; i + 1 < cb.vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < cb.vectors.size(); ++j) {
            auto [it, inserted] =
                sums.emplace(sum_key(cb.vectors[i], cb.vectors[j]), std::pair{i, j});
            if (!inserted) {
                return B2Violation{it->second, {i, j}, cb.vectors[i] + cb.vectors[j]};
            }
        }
    }
    return std::nullopt;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const auto factor = static_cast<std::uint64_t>(n - k + i);
        // saturate instead of wrapping; callers only compare against small guards
        if (r > std::numeric_limits<std::uint64_t>::max() / factor) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r = r * factor / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::vector<BinaryVector> all_weight_vectors(int n, int omega) {
    if (n < 1 || omega < 0 || omega > n) {
        throw std::invalid_argument("all_weight_vectors requires 0 <= omega <= n, n >= 1");
    }
    std::vector<BinaryVector> out;
    std::vector<int> support(omega);
    for (int i = 0; i < omega; ++i) support[i] = i;
    while (true) {
        out.push_back(BinaryVector::from_support(n, support));
        int i = omega - 1;
        while (i >= 0 && support[i] == n - omega + i) --i;
        if (i < 0) break;
        ++support[i];
        for (int j = i + 1; j < omega; ++j) support[j] = support[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Pair-sum keys. Vectors are base-3 packed so that the key of a pair is
// the plain integer sum of the two packed words (no digit carries, since
// binary entries keep every coordinate sum below 3). An unsigned 128-bit
// word covers n <= 80; longer vectors fall back to byte-string keys.

struct U128Hash {
    std::size_t operator()(unsigned __int128 v) const noexcept {
        const auto mix = [](std::uint64_t x) {
            x ^= x >> 30;
            x *= 0xbf58476d1ce4e5b9ULL;
            x ^= x >> 27;
            x *= 0x94d049bb133111ebULL;
            x ^= x >> 31;
            return x;
        };
        return mix(static_cast<std::uint64_t>(v)) ^
               (mix(static_cast<std::uint64_t>(v >> 64)) * 0x9e3779b97f4a7c15ULL);
    }
};

// Bit-per-key membership over a small packed-sum universe.
class DenseSumSet {
public:
    explicit DenseSumSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}
    bool contains(std::uint64_t k) const noexcept { return (words_[k >> 6] >> (k & 63)) & 1; }
    void insert(std::uint64_t k) noexcept { words_[k >> 6] |= std::uint64_t(1) << (k & 63); }
    void erase(std::uint64_t k) noexcept { words_[k >> 6] &= ~(std::uint64_t(1) << (k & 63)); }

private:
    std::vector<std::uint64_t> words_;
};

struct StringKeyOps {
    const std::vector<BinaryVector>* vectors;
    using Key = std::string;
    using Set = std::unordered_set<std::string>;
    Set make_set() const {
        Set s;
        s.reserve(4096);
        return s;
    }
    Key pair_key(std::size_t i, std::size_t j) const {
        return sum_key((*vectors)[i], (*vectors)[j]);
    }
};

template <typename Word>
std::vector<Word> pack_base3(const std::vector<BinaryVector>& vs) {
    std::vector<Word> packed;
    packed.reserve(vs.size());
    for (const auto& v : vs) {
        Word acc = 0;
        Word place = 1;
        for (std::uint8_t b : v.bits()) {
            acc += place * b;
            place *= 3;
        }
        packed.push_back(acc);
    }
    return packed;
}

struct PackedKeyOps {
    std::vector<unsigned __int128> packed;
    using Key = unsigned __int128;
    using Set = std::unordered_set<unsigned __int128, U128Hash>;

    explicit PackedKeyOps(const std::vector<BinaryVector>& vs)
        : packed(pack_base3<unsigned __int128>(vs)) {}
    Set make_set() const {
        Set s;
        s.reserve(4096);
        return s;
    }
    Key pair_key(std::size_t i, std::size_t j) const { return packed[i] + packed[j]; }
};

struct DenseKeyOps {
    std::vector<std::uint64_t> packed;
    std::uint64_t universe;
    using Key = std::uint64_t;
    using Set = DenseSumSet;

    DenseKeyOps(const std::vector<BinaryVector>& vs, int n)
        : packed(pack_base3<std::uint64_t>(vs)) {
        universe = 1;
        for (int i = 0; i < n; ++i) universe *= 3;
    }
    Set make_set() const { return DenseSumSet(universe); }
    Key pair_key(std::size_t i, std::size_t j) const { return packed[i] + packed[j]; }
};

template <typename KeyOps>
struct SearchState {
    const KeyOps& ops;
    std::size_t candidate_count;
    std::uint64_t node_limit;
    typename KeyOps::Set used_sums;
    std::vector<std::vector<typename KeyOps::Key>> scratch;  // one slot per depth
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best_chosen;
    std::uint64_t nodes = 0;
    bool aborted = false;

    SearchState(const KeyOps& ops_, std::size_t count, std::uint64_t limit)
        : ops(ops_),
          candidate_count(count),
          node_limit(limit),
          used_sums(ops_.make_set()),
          scratch(count + 1) {}

    void search(std::size_t start) {
        if (chosen.size() > best_chosen.size()) best_chosen = chosen;
        for (std::size_t i = start; i < candidate_count; ++i) {
            // remaining-candidates bound: even taking every vector from i on
            // cannot beat the incumbent
            if (chosen.size() + (candidate_count - i) <= best_chosen.size()) return;
            if (++nodes > node_limit) {
                aborted = true;
                return;
            }
            auto& fresh = scratch[chosen.size()];
            fresh.clear();
            bool ok = true;
            for (std::size_t j : chosen) {
                auto key = ops.pair_key(i, j);
                if (used_sums.contains(key)) {
                    ok = false;
                    break;
                }
                fresh.push_back(std::move(key));
            }
            // sums with previously chosen vectors must also be pairwise fresh
            for (std::size_t a = 0; ok && a + 1 < fresh.size(); ++a) {
                for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                    if (fresh[a] == fresh[b]) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            for (const auto& key : fresh) used_sums.insert(key);
            chosen.push_back(i);
            search(i + 1);
            chosen.pop_back();
            for (const auto& key : fresh) used_sums.erase(key);
            if (aborted) return;
        }
    }
};

struct RawSearchOutcome {
    std::vector<std::size_t> chosen;
    std::uint64_t nodes = 0;
    bool aborted = false;
};

template <typename KeyOps>
RawSearchOutcome run_search(const KeyOps& ops, std::size_t count, std::uint64_t node_limit) {
    SearchState<KeyOps> st(ops, count, node_limit);
    st.search(0);
    return RawSearchOutcome{std::move(st.best_chosen), st.nodes, st.aborted};
}

}  // namespace

SearchResult exhaustive_max_b2(int n, int omega, std::uint64_t node_limit) {
    if (n < 1 || omega < 1 || omega > n) {
        throw std::invalid_argument("exhaustive_max_b2 requires 1 <= omega <= n");
    }
    if (node_limit == 0) {
        throw std::invalid_argument("node_limit must be positive");
    }
    const std::uint64_t count = binomial(n, omega);
    if (count > 5000) {
        throw ScaleError("C(" + std::to_string(n) + ", " + std::to_string(omega) + ") = " +
                         std::to_string(count) + " exceeds the search guard of 5000");
    }

    const auto vectors = all_weight_vectors(n, omega);
    RawSearchOutcome outcome;
    if (n <= 16) {
        outcome = run_search(DenseKeyOps(vectors, n), vectors.size(), node_limit);
    } else if (n <= 80) {
        outcome = run_search(PackedKeyOps(vectors), vectors.size(), node_limit);
    } else {
        outcome = run_search(StringKeyOps{&vectors}, vectors.size(), node_limit);
    }

    SearchResult result;
    result.n = n;
    result.omega = omega;
    result.max_size = outcome.chosen.size();
    result.nodes_explored = outcome.nodes;
    result.exact = !outcome.aborted;
    result.witness = Codebook{CodeParameters(n, omega), {}};
    for (std::size_t i : outcome.chosen) result.witness.vectors.push_back(vectors[i]);
    return result;
}

}  // namespace b2weight
