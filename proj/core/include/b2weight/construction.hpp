#pragma once

#include "b2weight/core.hpp"
#include "b2weight/sidon.hpp"

namespace b2weight {

/// Decomposition k = block * omega + digit of a coordinate index.
struct IndexSplit {
    std::int64_t block;  // floor(k / omega)
    std::int64_t digit;  // k mod omega

    friend bool operator==(const IndexSplit&, const IndexSplit&) = default;
};

IndexSplit index_split(std::int64_t k, int omega);

/// Value of the linear digit map; exact, since (n/omega)^omega overflows
/// machine words already at modest parameters.
using FValue = BigInt;

/// The linear map sending c in {0,1,2}^n to
///   sum_k block(k) * (n/omega)^digit(k) * c[k]
/// over 0-indexed coordinates k. Requires omega | n.
FValue map_f(const TernaryVector& c, const CodeParameters& params);
FValue map_f(const BinaryVector& c, const CodeParameters& params);

/// The weight-omega preimage of m under map_f: writes m in base n/omega as
/// digits m_0..m_{omega-1} and sets exactly the bits {m_i * omega + i}.
/// Requires omega | n and 0 <= m <= (n/omega)^omega - 1.
BinaryVector unmap(const FValue& m, const CodeParameters& params);

/// Constant-weight codebook with pairwise-distinct pair sums: transports
/// the Bose Sidon set for q = largest_prime_q((n/omega)^omega) through
/// unmap. Requires omega | n, omega <= n/2, and (n/omega)^omega >= 8.
/// The resulting size is exactly q.
Codebook build_codebook(const CodeParameters& params);

/// Closed-form achievable rate of the construction. For integer 1/wbar
/// this is (wbar/2) * log2(1/wbar); otherwise the two-point interpolation
/// between the neighboring integer block sizes. Requires wbar <= 1/2.
BoundResult lower_bound_rate(WeightFraction wbar);

}  // namespace b2weight
