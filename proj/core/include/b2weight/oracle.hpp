#pragma once

#include "b2weight/core.hpp"

namespace b2weight {

/// Two distinct unordered index pairs whose entrywise sums coincide.
struct B2Violation {
    std::pair<std::size_t, std::size_t> pair1;  // earlier pair in lexicographic order
    std::pair<std::size_t, std::size_t> pair2;
    TernaryVector sum;
};

/// Checks constant weight, distinctness, and the distinct-pair-sums
/// property by hashing all C(|cb|, 2) entrywise sums. Returns the first
/// violation in lexicographic (i, j) pair order, or nullopt when the
/// codebook is valid. Throws WeightError / DuplicateError for the
/// structural failures.
std::optional<B2Violation> verify_b2(const Codebook& cb);

/// Outcome of the exact search. When `exact` is false the search hit its
/// node limit and max_size is only a lower bound.
struct SearchResult {
    int n = 0;
    int omega = 0;
    std::size_t max_size = 0;
    Codebook witness{CodeParameters(1, 1), {}};
    std::uint64_t nodes_explored = 0;
    bool exact = true;
};

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

/// Number of weight-omega vectors of length n; the search guard.
std::uint64_t binomial(int n, int k);

/// All weight-omega vectors of length n in lexicographic order.
std::vector<BinaryVector> all_weight_vectors(int n, int omega);

/// Exact maximum size of a codebook with the distinct-pair-sums property,
/// by depth-first search in lexicographic vector order with the
/// remaining-candidates pruning bound. A node is one candidate-extension
/// test. Throws ScaleError when C(n, omega) > 5000.
SearchResult exhaustive_max_b2(int n, int omega, std::uint64_t node_limit = kDefaultNodeLimit);

}  // namespace b2weight
