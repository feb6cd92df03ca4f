#pragma once

#include "b2weight/core.hpp"

namespace b2weight {

/// Probability distribution on {0, +1, -1}. Entries must be in [0,1] and
/// sum to 1 within 1e-12.
struct TernaryDistribution {
    double p0;
    double p1;
    double pm1;

    TernaryDistribution(double p0_, double p1_, double pm1_);
};

/// Binary Shannon entropy in bits, with the 0*log 0 = 0 convention.
/// Throws std::domain_error when x is outside [0,1] by more than 1e-12;
/// values within that slack are clamped to the boundary.
double binary_entropy(double x);

/// Entropy of a ternary distribution in bits, 0*log 0 = 0.
double ternary_entropy(const TernaryDistribution& d);

/// Entropy of a Binomial(2, p) distribution, i.e. of ((1-p)^2, 2p(1-p), p^2).
/// Evaluated in the closed form -2p log p - 2(1-p) log(1-p) - 2p + 2p^2.
double binom2_entropy(double p);

/// Upper bound on the asymptotic rate from the per-coordinate entropy of
/// codeword-pair sums: half the Binomial(2, wbar) entropy.
BoundResult bound_sum_entropy(WeightFraction wbar);

/// Upper bound on the asymptotic rate from the per-coordinate entropy of
/// codeword-pair differences: half the entropy of
/// (wbar^2 + (1-wbar)^2, wbar(1-wbar), wbar(1-wbar)).
BoundResult bound_diff_entropy(WeightFraction wbar);

}  // namespace b2weight
