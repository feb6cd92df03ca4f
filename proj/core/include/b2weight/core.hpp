#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace b2weight {

/// A vector claimed to be constant-weight had a coordinate sum different
/// from the declared weight.
struct WeightError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Duplicate entries in an input that requires distinct elements.
struct DuplicateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance size exceeds a desk-scale guard.
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Normalized weight w/n, constrained to the open interval (0, 1).
/// Callers that additionally need w/n <= 1/2 (codebook construction,
/// lower-bound rates) enforce that at their own boundary.
class WeightFraction {
public:
    explicit WeightFraction(double value) : value_(value) {
        if (!(value > 0.0 && value < 1.0)) {
            throw std::domain_error("weight fraction must lie in (0, 1), got " +
                                    std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Code length n and Hamming weight omega, 1 <= omega <= n.
struct CodeParameters {
    int n;
    int omega;

    CodeParameters(int n_, int omega_) : n(n_), omega(omega_) {
        if (n <= 0 || omega <= 0 || omega > n) {
            throw std::invalid_argument("code parameters require 1 <= omega <= n, got n=" +
                                        std::to_string(n_) + " omega=" + std::to_string(omega_));
        }
    }
};

/// Dense 0/1 vector. Comparison is lexicographic on coordinates.
class BinaryVector {
public:
    BinaryVector() = default;

    explicit BinaryVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (std::uint8_t b : bits_) {
            if (b > 1) throw std::invalid_argument("binary vector entry out of {0,1}");
        }
    }

    static BinaryVector zeros(int n) { return BinaryVector(std::vector<std::uint8_t>(n, 0)); }

    /// Builds the length-n vector with ones exactly at the given positions.
    static BinaryVector from_support(int n, std::span<const int> support);

    /// Parses a string of '0' and '1' characters.
    static BinaryVector parse(std::string_view s);

    int length() const noexcept { return static_cast<int>(bits_.size()); }
    std::uint8_t bit(int i) const { return bits_.at(i); }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    int weight() const noexcept;
    BinaryVector complement() const;
    std::string to_string() const;

    friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
    friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Hamming weight (coordinate sum).
int weight(const BinaryVector& v) noexcept;

/// Dense vector with entries in {0,1,2}; the sum of two binary vectors.
class TernaryVector {
public:
    TernaryVector() = default;

    explicit TernaryVector(std::vector<std::uint8_t> entries) : entries_(std::move(entries)) {
        for (std::uint8_t e : entries_) {
            if (e > 2) throw std::invalid_argument("ternary vector entry out of {0,1,2}");
        }
    }

    int length() const noexcept { return static_cast<int>(entries_.size()); }
    std::uint8_t entry(int i) const { return entries_.at(i); }
    const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }
    std::string to_string() const;

    friend bool operator==(const TernaryVector&, const TernaryVector&) = default;
    friend auto operator<=>(const TernaryVector&, const TernaryVector&) = default;

private:
    std::vector<std::uint8_t> entries_;
};

/// Entrywise integer sum; lengths must agree.
TernaryVector operator+(const BinaryVector& a, const BinaryVector& b);

/// Widens a binary vector into the {0,1,2} alphabet.
TernaryVector widen(const BinaryVector& v);

/// An ordered list of constant-weight vectors claimed to satisfy the
/// distinct-pair-sums property. Invariants are checked by verify_b2,
/// not cached here.
struct Codebook {
    CodeParameters params;
    std::vector<BinaryVector> vectors;

    std::size_t size() const noexcept { return vectors.size(); }
};

enum class BoundVariant { SumEntropy, DiffEntropy, PrefixSuffix, Improved, Lower };

std::string_view to_string(BoundVariant v);

/// A rate bound in bits per symbol, together with the optimizing split
/// point for the two minimax variants.
struct BoundResult {
    BoundVariant variant;
    double value = 0.0;
    std::optional<double> argmin_ebar;
    std::optional<double> argmax_wprime;
};

}  // namespace b2weight
