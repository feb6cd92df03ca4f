#include "b2weight/construction.hpp"

#include <cmath>

namespace b2weight {

IndexSplit index_split(std::int64_t k, int omega) {
    if (k < 0) throw std::invalid_argument("index must be nonnegative");
    if (omega < 1) throw std::invalid_argument("omega must be positive");
    return IndexSplit{k / omega, k % omega};
}

namespace {

// n/omega as an exact integer, or throws.
int block_count(const CodeParameters& params) {
    if (params.n % params.omega != 0) {
        throw std::invalid_argument(
            "omega must divide n (the non-integer n/omega construction has no known explicit "
            "procedure); got n=" +
            std::to_string(params.n) + " omega=" + std::to_string(params.omega));
    }
    return params.n / params.omega;
}

BigInt pow_big(std::int64_t base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

FValue map_f(const TernaryVector& c, const CodeParameters& params) {
    if (c.length() != params.n) {
        throw std::invalid_argument("vector length does not match code parameters");
    }
    const int base = block_count(params);

    // Per-digit place values (n/omega)^i, reused across coordinates.
    std::vector<BigInt> place(params.omega);
    place[0] = 1;
    for (int i = 1; i < params.omega; ++i) place[i] = place[i - 1] * base;

    FValue total = 0;
    for (int k = 0; k < params.n; ++k) {
        if (c.entry(k) == 0) continue;
        const auto [block, digit] = index_split(k, params.omega);
        total += block * place[static_cast<std::size_t>(digit)] * c.entry(k);
    }
    return total;
}

FValue map_f(const BinaryVector& c, const CodeParameters& params) {
    return map_f(widen(c), params);
}

BinaryVector unmap(const FValue& m, const CodeParameters& params) {
    const int base = block_count(params);
    if (m < 0 || m >= pow_big(base, params.omega)) {
        throw std::out_of_range("map value outside [0, (n/omega)^omega - 1]");
    }
    std::vector<int> support(params.omega);
    FValue rest = m;
    for (int i = 0; i < params.omega; ++i) {
        const int digit = static_cast<int>(rest % base);
        rest /= base;
        support[static_cast<std::size_t>(i)] = digit * params.omega + i;
    }
    return BinaryVector::from_support(params.n, support);
}

Codebook build_codebook(const CodeParameters& params) {
    const int base = block_count(params);
    if (2 * params.omega > params.n) {
        throw std::invalid_argument("construction requires omega <= n/2");
    }
    const BigInt m = pow_big(base, params.omega);
    if (m < 8) {
        throw std::invalid_argument("(n/omega)^omega must be at least 8, got " + m.str());
    }
    const std::uint64_t q = largest_prime_q(m);
    const SidonSet sidon = bose_sidon_set(q);

    Codebook cb{params, {}};
    cb.vectors.reserve(sidon.elements.size());
    for (std::uint64_t s : sidon.elements) {
        cb.vectors.push_back(unmap(FValue(s), params));
    }
    return cb;
}

BoundResult lower_bound_rate(WeightFraction wbar) {
    const double w = wbar.value();
    if (w > 0.5) {
        throw std::domain_error("lower bound rate requires wbar <= 1/2");
    }
    const double inv = 1.0 / w;
    double value;
    if (std::abs(inv - std::round(inv)) <= 1e-9) {
        value = 0.5 * w * std::log2(inv);
    } else {
        const double lo = std::floor(inv);
        const double hi = std::ceil(inv);
        const double gap = hi - lo;  // 1 for non-integer inv
        value = (w * hi - 1.0) / (2.0 * gap) * std::log2(lo) +
                (1.0 - w * lo) / (2.0 * gap) * std::log2(hi);
    }
    return BoundResult{BoundVariant::Lower, value, {}, {}};
}

}  // namespace b2weight
