#pragma once

#include <functional>

#include "b2weight/core.hpp"

namespace b2weight {

/// Normalized prefix length ebar = e/n and prefix weight wprime = w'/n.
/// Feasible for a given wbar when
///   max{0, wbar - 1 + ebar} <= wprime <= min{ebar, wbar}.
struct SplitPoint {
    double ebar;
    double wprime;
};

/// Feasible wprime interval [lo, hi] for a given ebar; never empty for
/// ebar in [0,1].
struct WprimeInterval {
    double lo;
    double hi;
};

WprimeInterval wprime_interval(double ebar, WeightFraction wbar);

/// Grid minimax controls. The coarse pass scans ebar and wprime at
/// coarse_step; each refinement round shrinks the step by refine_shrink
/// and re-scans locally around the incumbent. Ties break toward the
/// smallest ebar, then the smallest wprime.
struct OptimizerOptions {
    double coarse_step = 1e-3;
    int refine_rounds = 3;
    double refine_shrink = 0.1;
};

/// Per-split objective of the prefix-suffix decomposition bound:
/// with w'' = min{wbar - wprime, (1-ebar)/4},
///   max{ H(wprime/ebar)*ebar,
///        (1/2)[H(wprime/ebar)*ebar + H(2w''/(1-ebar))*(1-ebar) + 2w''] }.
/// Prefix and suffix terms take their limit value 0 at ebar = 0 and
/// ebar = 1 respectively. Throws std::domain_error on infeasible input.
double objective_prefix_suffix(double ebar, double wprime, WeightFraction wbar);

/// Per-split objective of the improved (ternary-suffix-entropy) bound:
/// with w'' = wbar - wprime,
///   p0 = (w''^2 + (1-ebar-w'')^2) / (1-ebar)^2, p1 = pm1 = (1-p0)/2,
///   max{ ebar*H(wprime/ebar),
///        (1/2)[ebar*H(wprime/ebar) + (1-ebar)*H(p0,p1,pm1)] }.
/// p0 is clamped into [1/2, 1]; at ebar = 1 the suffix term is 0.
double objective_improved(double ebar, double wprime, WeightFraction wbar);

struct MinimaxResult {
    double value;
    SplitPoint split;
};

/// min over ebar in [0,1] of max over feasible wprime of the objective,
/// by nested grid scan plus local refinement. Deterministic: identical
/// inputs give bit-identical results.
MinimaxResult minimax_over_splits(const std::function<double(double, double)>& objective,
                                  WeightFraction wbar, const OptimizerOptions& opts = {});

/// Prefix-suffix decomposition upper bound on the asymptotic rate.
BoundResult bound_prefix_suffix(WeightFraction wbar, const OptimizerOptions& opts = {});

/// Improved upper bound on the asymptotic rate; the tightest of the four
/// upper bounds for wbar < 1/2.
BoundResult bound_improved(WeightFraction wbar, const OptimizerOptions& opts = {});

/// Integer split of a length-n weight-omega code into a length-e prefix of
/// weight omega_prime and a length-f = n-e suffix.
struct FiniteSplit {
    int n;
    int e;
    int omega;
    int omega_prime;

    FiniteSplit(int n_, int e_, int omega_, int omega_prime_);

    int f() const noexcept { return n - e; }
    int omega_dprime() const noexcept { return omega - omega_prime; }
};

/// Finite-n upper bound on log2 of the number of codewords whose prefix
/// has weight omega_prime, ternary-suffix-entropy variant:
///   max{ e*H(w'/e) + log2 n, (1/2)[e*H(w'/e) + f*H(p0,p1,pm1)] + 1 }.
double finite_bound_improved(const FiniteSplit& fs);

/// Finite-n upper bound on the same quantity, counting variant:
///   max{ H(w'/e)*e + log2(n+1) + 1,
///        (1/2)[H(w'/e)*e + log2(n+1) + H(2w''/f)*f + 2w'' + log2(n(n+1))] + 1 }
/// with w'' = min{f/4, omega - omega_prime}.
double finite_bound_prefix_suffix(const FiniteSplit& fs);

enum class FiniteVariant { Improved, PrefixSuffix };

/// Finite-n upper bound on log2 of the maximum code size: the worst
/// per-prefix-weight-class bound plus log2 of the number of classes.
double finite_bound_code_size(int n, int e, int omega, FiniteVariant variant);

}  // namespace b2weight
