#include "b2weight/split_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "b2weight/entropy_bounds.hpp"

namespace b2weight {

namespace {

constexpr double kFeasSlack = 1e-9;
constexpr double kMinStep = 1e-9;

// Clamps (ebar, wprime) onto the feasible region, rejecting points that
// miss it by more than the slack (grid arithmetic produces only
// sub-slack excursions).
void snap_feasible(double& ebar, double& wprime, double w) {
    if (!(ebar >= -kFeasSlack && ebar <= 1.0 + kFeasSlack)) {
        throw std::domain_error("ebar outside [0,1]: " + std::to_string(ebar));
    }
    ebar = std::clamp(ebar, 0.0, 1.0);
    const double lo = std::max(0.0, w - 1.0 + ebar);
    const double hi = std::min(ebar, w);
    if (wprime < lo - kFeasSlack || wprime > hi + kFeasSlack) {
        throw std::domain_error("wprime " + std::to_string(wprime) +
                                " infeasible at ebar=" + std::to_string(ebar) +
                                " wbar=" + std::to_string(w));
    }
    wprime = std::clamp(wprime, lo, hi);
}

void validate_options(const OptimizerOptions& opts) {
    if (!(opts.coarse_step >= kMinStep)) {
        throw std::invalid_argument("coarse_step must be >= 1e-9");
    }
    if (opts.refine_rounds < 0) {
        throw std::invalid_argument("refine_rounds must be >= 0");
    }
    if (!(opts.refine_shrink > 0.0 && opts.refine_shrink < 1.0)) {
        throw std::invalid_argument("refine_shrink must lie in (0,1)");
    }
}

// Visits lo, lo+step, ..., plus hi. The endpoint may be visited twice;
// strict comparisons make that harmless.
template <typename F>
void for_grid(double lo, double hi, double step, F&& visit) {
    if (hi < lo) hi = lo;
    const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    for (long long i = 0; i <= count; ++i) {
        visit(std::min(lo + static_cast<double>(i) * step, hi));
    }
    visit(hi);
}

struct InnerBest {
    double value = -std::numeric_limits<double>::infinity();
    double wprime = 0.0;
};

void scan_wprime(const std::function<double(double, double)>& objective, double ebar,
                 double lo, double hi, double step, InnerBest& best) {
    for_grid(lo, hi, step, [&](double wp) {
        const double v = objective(ebar, wp);
        if (v > best.value) best = InnerBest{v, wp};
    });
}

// Global scan of the feasible interval at scan_step; when fine_step is
// smaller, polishes locally around the scan argmax and around the hint.
InnerBest inner_max(const std::function<double(double, double)>& objective, double ebar,
                    const WprimeInterval& iv, double scan_step, double fine_step,
                    std::optional<double> hint) {
    InnerBest best;
    scan_wprime(objective, ebar, iv.lo, iv.hi, scan_step, best);
    if (fine_step < scan_step) {
        const double c = best.wprime;
        scan_wprime(objective, ebar, std::max(iv.lo, c - scan_step),
                    std::min(iv.hi, c + scan_step), fine_step, best);
        if (hint) {
            scan_wprime(objective, ebar, std::max(iv.lo, *hint - scan_step),
                        std::min(iv.hi, *hint + scan_step), fine_step, best);
        }
    }
    return best;
}

}  // namespace

WprimeInterval wprime_interval(double ebar, WeightFraction wbar) {
    if (!(ebar >= -kFeasSlack && ebar <= 1.0 + kFeasSlack)) {
        throw std::domain_error("ebar outside [0,1]: " + std::to_string(ebar));
    }
    ebar = std::clamp(ebar, 0.0, 1.0);
    const double w = wbar.value();
    const double lo = std::max(0.0, w - 1.0 + ebar);
    const double hi = std::min(ebar, w);
    return WprimeInterval{lo, std::max(hi, lo)};
}

double objective_prefix_suffix(double ebar, double wprime, WeightFraction wbar) {
    const double w = wbar.value();
    snap_feasible(ebar, wprime, w);
    const double prefix = ebar > 0.0 ? ebar * binary_entropy(std::min(wprime / ebar, 1.0)) : 0.0;
    const double flen = 1.0 - ebar;
    const double wpp = std::max(std::min(w - wprime, flen / 4.0), 0.0);
    const double suffix =
        flen > 0.0 ? flen * binary_entropy(std::min(2.0 * wpp / flen, 1.0)) : 0.0;
    return std::max(prefix, 0.5 * (prefix + suffix + 2.0 * wpp));
}

double objective_improved(double ebar, double wprime, WeightFraction wbar) {
    const double w = wbar.value();
    snap_feasible(ebar, wprime, w);
    const double prefix = ebar > 0.0 ? ebar * binary_entropy(std::min(wprime / ebar, 1.0)) : 0.0;
    const double flen = 1.0 - ebar;
    if (flen <= 0.0) return prefix;
    const double wpp = std::max(w - wprime, 0.0);
    double p0 = (wpp * wpp + (flen - wpp) * (flen - wpp)) / (flen * flen);
    p0 = std::clamp(p0, 0.5, 1.0);
    const double p1 = 0.5 * (1.0 - p0);
    const double suffix = flen * ternary_entropy(TernaryDistribution(p0, p1, p1));
    return std::max(prefix, 0.5 * (prefix + suffix));
}

MinimaxResult minimax_over_splits(const std::function<double(double, double)>& objective,
                                  WeightFraction wbar, const OptimizerOptions& opts) {
    validate_options(opts);

    MinimaxResult best{std::numeric_limits<double>::infinity(), {0.0, 0.0}};
    const double coarse = opts.coarse_step;

    for_grid(0.0, 1.0, coarse, [&](double ebar) {
        const auto iv = wprime_interval(ebar, wbar);
        const InnerBest ib = inner_max(objective, ebar, iv, coarse, coarse, std::nullopt);
        if (ib.value < best.value) best = MinimaxResult{ib.value, {ebar, ib.wprime}};
    });

    double prev = coarse;
    for (int round = 0; round < opts.refine_rounds; ++round) {
        const double fine = prev * opts.refine_shrink;
        MinimaxResult round_best{std::numeric_limits<double>::infinity(), {0.0, 0.0}};
        for_grid(std::max(0.0, best.split.ebar - prev), std::min(1.0, best.split.ebar + prev),
                 fine, [&](double ebar) {
                     const auto iv = wprime_interval(ebar, wbar);
                     const InnerBest ib =
                         inner_max(objective, ebar, iv, coarse, fine, best.split.wprime);
                     if (ib.value < round_best.value) {
                         round_best = MinimaxResult{ib.value, {ebar, ib.wprime}};
                     }
                 });
        best = round_best;
        prev = fine;
    }
    return best;
}

BoundResult bound_prefix_suffix(WeightFraction wbar, const OptimizerOptions& opts) {
    const auto r = minimax_over_splits(
        [&](double e, double wp) { return objective_prefix_suffix(e, wp, wbar); }, wbar, opts);
    return BoundResult{BoundVariant::PrefixSuffix, r.value, r.split.ebar, r.split.wprime};
}

BoundResult bound_improved(WeightFraction wbar, const OptimizerOptions& opts) {
    const auto r = minimax_over_splits(
        [&](double e, double wp) { return objective_improved(e, wp, wbar); }, wbar, opts);
    return BoundResult{BoundVariant::Improved, r.value, r.split.ebar, r.split.wprime};
}

FiniteSplit::FiniteSplit(int n_, int e_, int omega_, int omega_prime_)
    : n(n_), e(e_), omega(omega_), omega_prime(omega_prime_) {
    if (!(0 < e && e < n)) {
        throw std::invalid_argument("finite split requires 0 < e < n");
    }
    if (!(0 < omega && omega <= n)) {
        throw std::invalid_argument("finite split requires 0 < omega <= n");
    }
    const int lo = std::max(0, omega - (n - e));
    const int hi = std::min(e, omega);
    if (omega_prime < lo || omega_prime > hi) {
        throw std::invalid_argument("omega_prime=" + std::to_string(omega_prime) +
                                    " outside feasible [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    }
}

double finite_bound_improved(const FiniteSplit& fs) {
    const double e = fs.e;
    const double f = fs.f();
    const double prefix = e * binary_entropy(fs.omega_prime / e);
    const double wpp = fs.omega_dprime();
    double p0 = (wpp * wpp + (f - wpp) * (f - wpp)) / (f * f);
    p0 = std::clamp(p0, 0.5, 1.0);
    const double p1 = 0.5 * (1.0 - p0);
    const double first = prefix + std::log2(static_cast<double>(fs.n));
    const double second =
        0.5 * (prefix + f * ternary_entropy(TernaryDistribution(p0, p1, p1))) + 1.0;
    return std::max(first, second);
}

double finite_bound_prefix_suffix(const FiniteSplit& fs) {
    const double e = fs.e;
    const double f = fs.f();
    const double n = fs.n;
    const double prefix = e * binary_entropy(fs.omega_prime / e);
    const double wpp = std::min(f / 4.0, static_cast<double>(fs.omega_dprime()));
    const double first = prefix + std::log2(n + 1.0) + 1.0;
    const double second = 0.5 * (prefix + std::log2(n + 1.0) + f * binary_entropy(2.0 * wpp / f) +
                                 2.0 * wpp + std::log2(n * (n + 1.0))) +
                          1.0;
    return std::max(first, second);
}

double finite_bound_code_size(int n, int e, int omega, FiniteVariant variant) {
    if (!(0 < e && e < n)) {
        throw std::invalid_argument("require 0 < e < n");
    }
    if (!(0 < omega && omega <= n)) {
        throw std::invalid_argument("require 0 < omega <= n");
    }
    const int lo = std::max(0, omega - (n - e));
    const int hi = std::min(e, omega);
    double worst = -std::numeric_limits<double>::infinity();
    for (int wp = lo; wp <= hi; ++wp) {
        const FiniteSplit fs(n, e, omega, wp);
        const double v = variant == FiniteVariant::Improved ? finite_bound_improved(fs)
                                                            : finite_bound_prefix_suffix(fs);
        worst = std::max(worst, v);
    }
    return worst + std::log2(static_cast<double>(hi - lo + 1));
}

}  // namespace b2weight
