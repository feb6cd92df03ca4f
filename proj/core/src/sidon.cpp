#include "b2weight/sidon.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace b2weight {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Power enumeration is O(q^2) time and the element list O(q) memory;
// beyond this q the construction stops being a desk-scale computation.
constexpr u64 kMaxBoseQ = 10'000;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 x) {
    if (x < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (x % p == 0) return x == p;
    }
    u64 d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for every 64-bit integer.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 v = powmod(a, d, x);
        if (v == 1 || v == x - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            v = mulmod(v, v, x);
            if (v == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t largest_prime_q(const BigInt& m) {
    if (m < 8) {
        throw std::domain_error("largest_prime_q requires m >= 8");
    }
    const BigInt root = boost::multiprecision::sqrt(BigInt(m + 1));  // floor
    if (root > std::numeric_limits<u64>::max()) {
        throw ScaleError("largest_prime_q: candidate prime exceeds 64 bits");
    }
    for (u64 q = root.convert_to<u64>(); q >= 2; --q) {
        if (is_prime(q)) return q;
    }
    throw std::runtime_error("no prime q >= 2 with q^2 - 1 <= m");
}

QuadraticCoeffs find_irreducible_quadratic(u64 q) {
    if (q < 2 || !is_prime(q)) {
        throw std::invalid_argument("q must be a prime >= 2");
    }
    for (u64 s = 0; s < q; ++s) {
        for (u64 t = 0; t < q; ++t) {
            bool rootless = true;
            for (u64 x = 0; x < q; ++x) {
                // x^2 - s*x - t mod q, kept nonnegative step by step
                u64 v = (mulmod(x, x, q) + q - mulmod(s, x, q)) % q;
                v = (v + q - t) % q;
                if (v == 0) {
                    rootless = false;
                    break;
                }
            }
            if (rootless) return QuadraticCoeffs{s, t};
        }
    }
    throw std::logic_error("no irreducible quadratic found");  // unreachable for prime q
}

QuadExtField::QuadExtField(u64 q) : QuadExtField(q, find_irreducible_quadratic(q)) {}

QuadExtField::QuadExtField(u64 q, QuadraticCoeffs coeffs) : q_(q), coeffs_(coeffs) {
    if (q < 2 || !is_prime(q)) {
        throw std::invalid_argument("q must be a prime >= 2");
    }
    if (coeffs_.s >= q || coeffs_.t >= q) {
        throw std::invalid_argument("quadratic coefficients must be reduced mod q");
    }
}

QuadExtElement QuadExtField::mul(QuadExtElement a, QuadExtElement b) const noexcept {
    // (a0 + a1 x)(b0 + b1 x) with x^2 = s x + t
    const u64 q = q_;
    const u64 cross = (mulmod(a.c0, b.c1, q) + mulmod(a.c1, b.c0, q)) % q;
    const u64 high = mulmod(a.c1, b.c1, q);
    const u64 c0 = (mulmod(a.c0, b.c0, q) + mulmod(high, coeffs_.t, q)) % q;
    const u64 c1 = (cross + mulmod(high, coeffs_.s, q)) % q;
    return {c0, c1};
}

QuadExtElement QuadExtField::pow(QuadExtElement a, u64 k) const noexcept {
    QuadExtElement r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

namespace {

std::vector<u64> prime_factors(u64 x) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

}  // namespace

QuadExtElement find_primitive_element(const QuadExtField& field) {
    const u64 q = field.q();
    const u64 order = field.order();
    const std::vector<u64> factors = prime_factors(order);
    for (u64 c0 = 0; c0 < q; ++c0) {
        for (u64 c1 = 0; c1 < q; ++c1) {
            const QuadExtElement el{c0, c1};
            if (el == field.zero()) continue;
            if (field.pow(el, order) != field.one()) continue;  // guards against arithmetic bugs
            bool primitive = true;
            for (u64 p : factors) {
                if (field.pow(el, order / p) == field.one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) return el;
        }
    }
    throw std::logic_error("no primitive element found");  // unreachable
}

SidonSet bose_sidon_set(u64 q) {
    if (!is_prime(q)) {
        throw std::invalid_argument("bose_sidon_set requires a prime q");
    }
    if (q > kMaxBoseQ) {
        throw ScaleError("bose_sidon_set: q=" + std::to_string(q) + " exceeds the desk-scale guard " +
                         std::to_string(kMaxBoseQ));
    }
    const QuadExtField field(q);
    const QuadExtElement theta = find_primitive_element(field);
    const u64 order = field.order();

    // theta^a - theta lies in GF(q) iff the xhat coefficients agree.
    std::vector<u64> elements;
    elements.reserve(q);
    QuadExtElement cur = field.one();
    for (u64 a = 1; a <= order; ++a) {
        cur = field.mul(cur, theta);
        if (cur.c1 == theta.c1) elements.push_back(a);
    }
    if (elements.size() != q) {
        throw std::logic_error("bose_sidon_set: expected exactly q elements, got " +
                               std::to_string(elements.size()));
    }
    return SidonSet{order, std::move(elements)};
}

std::optional<SidonViolation> sidon_violation(std::span<const u64> elements) {
    constexpr u64 kMaxElement = u64(1) << 62;
    std::unordered_set<u64> distinct;
    for (u64 e : elements) {
        if (e >= kMaxElement) {
            throw std::invalid_argument("sidon elements must be < 2^62");
        }
        if (!distinct.insert(e).second) {
            throw DuplicateError("duplicate sidon element " + std::to_string(e));
        }
    }
    std::unordered_map<u64, std::pair<u64, u64>> seen;
    seen.reserve(std::min<std::size_t>(elements.size() * (elements.size() + 1) / 2, 1u << 20));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i; j < elements.size(); ++j) {
            const u64 sum = elements[i] + elements[j];
            auto [it, inserted] = seen.emplace(sum, std::pair<u64, u64>{elements[i], elements[j]});
            if (!inserted) {
                return SidonViolation{it->second, {elements[i], elements[j]}};
            }
        }
    }
    return std::nullopt;
}

bool is_sidon(std::span<const u64> elements) { return !sidon_violation(elements).has_value(); }

}  // namespace b2weight
