#include "b2weight/entropy_bounds.hpp"

#include <cmath>

namespace b2weight {

namespace {

constexpr double kProbSlack = 1e-12;

double clamp_probability(double x, const char* what) {
    if (x < 0.0) {
        if (x < -kProbSlack) {
            throw std::domain_error(std::string(what) + " outside [0,1]: " + std::to_string(x));
        }
        return 0.0;
    }
    if (x > 1.0) {
        if (x > 1.0 + kProbSlack) {
            throw std::domain_error(std::string(what) + " outside [0,1]: " + std::to_string(x));
        }
        return 1.0;
    }
    return x;
}

// x * log2(x) with the limit value 0 at x = 0.
double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

}  // namespace

TernaryDistribution::TernaryDistribution(double p0_, double p1_, double pm1_)
    : p0(clamp_probability(p0_, "p0")),
      p1(clamp_probability(p1_, "p1")),
      pm1(clamp_probability(pm1_, "pm1")) {
    const double total = p0 + p1 + pm1;
    if (std::abs(total - 1.0) > kProbSlack) {
        throw std::domain_error("ternary distribution sums to " + std::to_string(total));
    }
}

double binary_entropy(double x) {
    x = clamp_probability(x, "entropy argument");
    return -xlog2x(x) - xlog2x(1.0 - x);
}

double ternary_entropy(const TernaryDistribution& d) {
    return -xlog2x(d.p0) - xlog2x(d.p1) - xlog2x(d.pm1);
}

double binom2_entropy(double p) {
    p = clamp_probability(p, "binom2 argument");
    return -2.0 * xlog2x(p) - 2.0 * xlog2x(1.0 - p) - 2.0 * p + 2.0 * p * p;
}

BoundResult bound_sum_entropy(WeightFraction wbar) {
    return BoundResult{BoundVariant::SumEntropy, 0.5 * binom2_entropy(wbar.value()), {}, {}};
}

BoundResult bound_diff_entropy(WeightFraction wbar) {
    const double w = wbar.value();
    const double q0 = w * w + (1.0 - w) * (1.0 - w);
    const double q1 = w * (1.0 - w);
    return BoundResult{BoundVariant::DiffEntropy,
                       0.5 * ternary_entropy(TernaryDistribution(q0, q1, q1)), {}, {}};
}

}  // namespace b2weight
