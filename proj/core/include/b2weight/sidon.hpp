#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "b2weight/core.hpp"

namespace b2weight {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t x);

/// Largest prime q with q^2 - 1 <= m, so the q-element Sidon set produced
/// by bose_sidon_set(q) fits inside [0, m - 1]. Requires m >= 8.
std::uint64_t largest_prime_q(const BigInt& m);

/// Coefficients of a monic quadratic x^2 - s*x - t over GF(q).
struct QuadraticCoeffs {
    std::uint64_t s;
    std::uint64_t t;

    friend bool operator==(const QuadraticCoeffs&, const QuadraticCoeffs&) = default;
};

/// First (s, t) in lexicographic order such that x^2 - s*x - t has no root
/// in GF(q). Deterministic; existence is guaranteed for every prime q.
QuadraticCoeffs find_irreducible_quadratic(std::uint64_t q);

/// Element c0 + c1 * xhat of GF(q^2) = GF(q)[x]/(x^2 - s*x - t).
struct QuadExtElement {
    std::uint64_t c0;
    std::uint64_t c1;

    friend bool operator==(const QuadExtElement&, const QuadExtElement&) = default;
};

/// Arithmetic context for GF(q^2) with a fixed irreducible quadratic.
class QuadExtField {
public:
    /// Uses the lexicographically first irreducible quadratic for q.
    explicit QuadExtField(std::uint64_t q);
    QuadExtField(std::uint64_t q, QuadraticCoeffs coeffs);

    std::uint64_t q() const noexcept { return q_; }
    QuadraticCoeffs coeffs() const noexcept { return coeffs_; }
    std::uint64_t order() const noexcept { return q_ * q_ - 1; }

    QuadExtElement zero() const noexcept { return {0, 0}; }
    QuadExtElement one() const noexcept { return {1, 0}; }

    QuadExtElement mul(QuadExtElement a, QuadExtElement b) const noexcept;
    QuadExtElement pow(QuadExtElement a, std::uint64_t k) const noexcept;

    /// True iff the element lies in the base field GF(q).
    bool in_base_field(QuadExtElement a) const noexcept { return a.c1 == 0; }

private:
    std::uint64_t q_;
    QuadraticCoeffs coeffs_;
};

/// Lexicographically least (c0, c1) of multiplicative order exactly q^2 - 1,
/// verified against every prime factor of q^2 - 1.
QuadExtElement find_primitive_element(const QuadExtField& field);

/// A set of nonnegative integers below `modulus` whose pairwise sums
/// (with repetition) are all distinct.
struct SidonSet {
    std::uint64_t modulus;                 // q^2 - 1 for Bose-generated sets
    std::vector<std::uint64_t> elements;   // sorted ascending, distinct
};

/// The q-element Sidon set { a in [1, q^2-1] : theta^a - theta in GF(q) }
/// for theta primitive in GF(q^2). Discrete logs are found by enumerating
/// successive powers of theta, so memory and time are O(q^2).
SidonSet bose_sidon_set(std::uint64_t q);

/// Two distinct index-ordered pairs with equal sums.
struct SidonViolation {
    std::pair<std::uint64_t, std::uint64_t> pair1;  // element values, first <= second
    std::pair<std::uint64_t, std::uint64_t> pair2;
};

/// Checks that all unordered pair sums (i <= j, repetition allowed) are
/// distinct. Returns the first violation in lexicographic pair order, or
/// nullopt if the set is Sidon. Throws DuplicateError on repeated input.
std::optional<SidonViolation> sidon_violation(std::span<const std::uint64_t> elements);

bool is_sidon(std::span<const std::uint64_t> elements);

}  // namespace b2weight
