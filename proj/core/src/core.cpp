#include "b2weight/core.hpp"

#include <algorithm>
#include <numeric>

namespace b2weight {

BinaryVector BinaryVector::from_support(int n, std::span<const int> support) {
    if (n < 0) throw std::invalid_argument("negative length");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    for (int p : support) {
        if (p < 0 || p >= n) {
            throw std::invalid_argument("support position " + std::to_string(p) +
                                        " outside [0, " + std::to_string(n) + ")");
        }
        if (bits[static_cast<std::size_t>(p)]) {
            throw DuplicateError("support position " + std::to_string(p) + " repeated");
        }
        bits[static_cast<std::size_t>(p)] = 1;
    }
    return BinaryVector(std::move(bits));
}

BinaryVector BinaryVector::parse(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("invalid character '") + c +
                                        "' in binary vector string");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryVector(std::move(bits));
}

int BinaryVector::weight() const noexcept {
    return std::accumulate(bits_.begin(), bits_.end(), 0);
}

BinaryVector BinaryVector::complement() const {
    std::vector<std::uint8_t> flipped(bits_.size());
    std::transform(bits_.begin(), bits_.end(), flipped.begin(),
                   [](std::uint8_t b) { return static_cast<std::uint8_t>(1 - b); });
    return BinaryVector(std::move(flipped));
}

std::string BinaryVector::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (std::uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

int weight(const BinaryVector& v) noexcept { return v.weight(); }

std::string TernaryVector::to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (std::uint8_t e : entries_) s.push_back(static_cast<char>('0' + e));
    return s;
}

TernaryVector operator+(const BinaryVector& a, const BinaryVector& b) {
    if (a.length() != b.length()) {
        throw std::invalid_argument("vector sum requires equal lengths");
    }
    std::vector<std::uint8_t> sum(a.bits().size());
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = static_cast<std::uint8_t>(a.bits()[i] + b.bits()[i]);
    }
    return TernaryVector(std::move(sum));
}

TernaryVector widen(const BinaryVector& v) { return TernaryVector(v.bits()); }

std::string_view to_string(BoundVariant v) {
    switch (v) {
        case BoundVariant::SumEntropy: return "sum-entropy";
        case BoundVariant::DiffEntropy: return "diff-entropy";
        case BoundVariant::PrefixSuffix: return "prefix-suffix";
        case BoundVariant::Improved: return "improved";
        case BoundVariant::Lower: return "lower";
    }
    return "unknown";
}

}  // namespace b2weight
