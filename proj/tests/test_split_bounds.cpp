#include <doctest.h>

#include <cmath>
#include <random>

#include "b2weight/construction.hpp"
#include "b2weight/entropy_bounds.hpp"
#include "b2weight/split_bounds.hpp"

using namespace b2weight;

namespace {

// Plain-formula re-implementations, independent of the library path.
double ref_h(double x) {
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

double ref_h3(double a, double b, double c) {
    double s = 0.0;
    for (double p : {a, b, c}) {
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double ref_objective_prefix_suffix(double e, double wp, double w) {
    const double wpp = std::min(w - wp, (1.0 - e) / 4.0);
    const double first = e > 0.0 ? e * ref_h(wp / e) : 0.0;
    const double suffix = e < 1.0 ? (1.0 - e) * ref_h(2.0 * wpp / (1.0 - e)) : 0.0;
    return std::max(first, 0.5 * (first + suffix + 2.0 * wpp));
}

double ref_objective_improved(double e, double wp, double w) {
    const double first = e > 0.0 ? e * ref_h(wp / e) : 0.0;
    if (e >= 1.0) return first;
    const double wpp = w - wp;
    const double p0 = (wpp * wpp + (1.0 - e - wpp) * (1.0 - e - wpp)) /
                      ((1.0 - e) * (1.0 - e));
    return std::max(first,
                    0.5 * (first + (1.0 - e) * ref_h3(p0, (1 - p0) / 2, (1 - p0) / 2)));
}

const std::array<double, 7> kTableWbars{0.5, 0.4, 0.345, 0.2, 0.1, 0.05, 0.02};

}  // namespace

TEST_CASE("prefix-suffix objective at the degenerate splits") {
    // whole-word prefix: suffix terms vanish
    CHECK(objective_prefix_suffix(1.0, 0.3, WeightFraction(0.3)) ==
          doctest::Approx(0.8812908992306927).epsilon(1e-13));
    // empty prefix at wbar = 1/2: w'' caps at 1/4
    CHECK(objective_prefix_suffix(0.0, 0.0, WeightFraction(0.5)) ==
          doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("prefix-suffix objective mid-split cross-check") {
    CHECK(objective_prefix_suffix(0.5, 0.25, WeightFraction(0.5)) ==
          doctest::Approx(0.625).epsilon(1e-13));
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double w = 0.02 + 0.48 * dist(rng);
        const double e = dist(rng);
        const double lo = std::max(0.0, w - 1.0 + e);
        const double hi = std::min(e, w);
        const double wp = lo + (hi - lo) * dist(rng);
        CHECK(objective_prefix_suffix(e, wp, WeightFraction(w)) ==
              doctest::Approx(ref_objective_prefix_suffix(e, wp, w)).epsilon(1e-12));
    }
}

TEST_CASE("improved objective at the degenerate splits") {
    CHECK(objective_improved(1.0, 0.3, WeightFraction(0.3)) ==
          doctest::Approx(0.8812908992306927).epsilon(1e-13));
    // empty prefix at wbar = 1/2: p0 = 1/2
    CHECK(objective_improved(0.0, 0.0, WeightFraction(0.5)) ==
          doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("improved objective mid-split cross-check") {
    CHECK(objective_improved(0.5, 0.2, WeightFraction(0.4)) ==
          doctest::Approx(0.6124490326124676).epsilon(1e-13));
    CHECK(objective_improved(0.5, 0.2, WeightFraction(0.4)) ==
          doctest::Approx(ref_objective_improved(0.5, 0.2, 0.4)).epsilon(1e-13));
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double w = 0.02 + 0.48 * dist(rng);
        const double e = dist(rng);
        const double lo = std::max(0.0, w - 1.0 + e);
        const double hi = std::min(e, w);
        const double wp = lo + (hi - lo) * dist(rng);
        CHECK(objective_improved(e, wp, WeightFraction(w)) ==
              doctest::Approx(ref_objective_improved(e, wp, w)).epsilon(1e-12));
    }
}

TEST_CASE("objectives reject infeasible splits") {
    CHECK_THROWS_AS(objective_prefix_suffix(0.2, 0.3, WeightFraction(0.5)), std::domain_error);
    CHECK_THROWS_AS(objective_improved(0.9, 0.05, WeightFraction(0.5)), std::domain_error);
    CHECK_THROWS_AS(objective_improved(-0.2, 0.0, WeightFraction(0.5)), std::domain_error);
    CHECK_THROWS_AS(objective_improved(1.2, 0.5, WeightFraction(0.5)), std::domain_error);
}

TEST_CASE("minimax on a constant objective breaks ties toward zero") {
    const auto r = minimax_over_splits([](double, double) { return 0.37; }, WeightFraction(0.3));
    CHECK(r.value == 0.37);
    CHECK(r.split.ebar == 0.0);
    CHECK(r.split.wprime == 0.0);
}

TEST_CASE("minimax finds a unique interior minimum") {
    const auto r = minimax_over_splits([](double e, double) { return std::abs(e - 0.3); },
                                       WeightFraction(0.4));
    CHECK(std::abs(r.split.ebar - 0.3) < 2e-6);
    CHECK(r.value < 2e-6);
}

TEST_CASE("minimax reproduces the prefix-suffix bound at wbar one half") {
    const auto r = minimax_over_splits(
        [](double e, double wp) { return objective_prefix_suffix(e, wp, WeightFraction(0.5)); },
        WeightFraction(0.5));
    CHECK(std::abs(r.value - 0.6) < 0.002);
}

TEST_CASE("minimax is deterministic") {
    const OptimizerOptions opts{2e-3, 2, 0.1};
    const auto a = bound_improved(WeightFraction(0.2), opts);
    const auto b = bound_improved(WeightFraction(0.2), opts);
    CHECK(a.value == b.value);
    CHECK(*a.argmin_ebar == *b.argmin_ebar);
    CHECK(*a.argmax_wprime == *b.argmax_wprime);
    const auto c = bound_prefix_suffix(WeightFraction(0.345));
    const auto d = bound_prefix_suffix(WeightFraction(0.345));
    CHECK(c.value == d.value);
    CHECK(*c.argmin_ebar == *d.argmin_ebar);
}

TEST_CASE("optimizer options are validated") {
    CHECK_THROWS_AS(bound_improved(WeightFraction(0.2), OptimizerOptions{0.0, 3, 0.1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bound_improved(WeightFraction(0.2), OptimizerOptions{1e-3, -1, 0.1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bound_improved(WeightFraction(0.2), OptimizerOptions{1e-3, 3, 1.5}),
                    std::invalid_argument);
}

TEST_CASE("prefix-suffix bound reference values") {
    CHECK(std::abs(bound_prefix_suffix(WeightFraction(0.5)).value - 0.6) < 0.002);
    CHECK(std::abs(bound_prefix_suffix(WeightFraction(0.2)).value - 0.515) < 0.002);
    CHECK(std::abs(bound_prefix_suffix(WeightFraction(0.05)).value - 0.235) < 0.002);
    const auto r = bound_prefix_suffix(WeightFraction(0.5));
    CHECK(r.variant == BoundVariant::PrefixSuffix);
    REQUIRE(r.argmin_ebar.has_value());
    REQUIRE(r.argmax_wprime.has_value());
}

TEST_CASE("improved bound reference values") {
    CHECK(std::abs(bound_improved(WeightFraction(0.345)).value - 0.575) < 0.002);
    CHECK(std::abs(bound_improved(WeightFraction(0.4)).value - 0.59) < 0.002);
    CHECK(std::abs(bound_improved(WeightFraction(0.02)).value - 0.12) < 0.002);
    CHECK(bound_improved(WeightFraction(0.345)).variant == BoundVariant::Improved);
}

TEST_CASE("improved bound is below the classic constants") {
    CHECK(bound_improved(WeightFraction(0.345)).value <= 0.5753 + 1e-3);
    for (double w = 0.05; w <= 0.5 + 1e-12; w += 0.05) {
        CHECK(bound_improved(WeightFraction(w)).value <= 0.6 + 1e-3);
    }
}

TEST_CASE("bound ordering across variants") {
    for (double w : kTableWbars) {
        const double imp = bound_improved(WeightFraction(w)).value;
        const double ps = bound_prefix_suffix(WeightFraction(w)).value;
        const double sum = bound_sum_entropy(WeightFraction(w)).value;
        CHECK(imp <= ps + 0.002);
        CHECK(ps <= sum + 0.002);
        CHECK(lower_bound_rate(WeightFraction(w)).value <= imp);
    }
}

TEST_CASE("reported minimax value is attained by feasible splits") {
    const WeightFraction w(0.345);
    const double bound = bound_improved(w).value;
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double e = dist(rng);
        const auto iv = wprime_interval(e, w);
        double inner = 0.0;
        for (double wp = iv.lo; wp <= iv.hi + 1e-12; wp += 1e-3) {
            inner = std::max(inner, objective_improved(e, std::min(wp, iv.hi), w));
        }
        inner = std::max(inner, objective_improved(e, iv.hi, w));
        CHECK(inner >= bound - 0.002);
    }
}

TEST_CASE("finite split validation") {
    CHECK_THROWS_AS(FiniteSplit(10, 0, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteSplit(10, 10, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(FiniteSplit(10, 5, 4, 5), std::invalid_argument);
    // omega - f = 6 - 5 = 1 forces omega_prime >= 1
    CHECK_THROWS_AS(FiniteSplit(10, 5, 6, 0), std::invalid_argument);
    CHECK_NOTHROW(FiniteSplit(10, 5, 6, 1));
}

TEST_CASE("finite improved bound examples") {
    // omega'' = 0 makes the ternary term vanish
    const double v1 = finite_bound_improved(FiniteSplit(10, 5, 4, 4));
    const double expect1 =
        std::max(5 * ref_h(0.8) + std::log2(10.0), 0.5 * 5 * ref_h(0.8) + 1.0);
    CHECK(v1 == doctest::Approx(expect1).epsilon(1e-13));
    CHECK(v1 == doctest::Approx(6.931568569324174).epsilon(1e-13));

    // zero-weight prefix: the first branch is log2 n alone
    const double v2 = finite_bound_improved(FiniteSplit(10, 5, 2, 0));
    CHECK(v2 >= std::log2(10.0));
    CHECK(v2 == doctest::Approx(4.697113839988004).epsilon(1e-13));

    const double v3 = finite_bound_improved(FiniteSplit(20, 10, 6, 3));
    const double p0 = (9.0 + 49.0) / 100.0;
    const double expect3 = std::max(10 * ref_h(0.3) + std::log2(20.0),
                                    0.5 * (10 * ref_h(0.3) + 10 * ref_h3(p0, (1 - p0) / 2,
                                                                         (1 - p0) / 2)) +
                                        1.0);
    CHECK(v3 == doctest::Approx(expect3).epsilon(1e-13));
    CHECK(v3 == doctest::Approx(13.134837087194288).epsilon(1e-13));
}

TEST_CASE("finite prefix-suffix bound examples") {
    // omega'' = 0: both suffix terms vanish
    const double v1 = finite_bound_prefix_suffix(FiniteSplit(10, 5, 2, 2));
    const double expect1 = std::max(5 * ref_h(0.4) + std::log2(11.0) + 1.0,
                                    0.5 * (5 * ref_h(0.4) + std::log2(11.0) + std::log2(110.0)) +
                                        1.0);
    CHECK(v1 == doctest::Approx(expect1).epsilon(1e-13));
    CHECK(v1 == doctest::Approx(9.31418459091064).epsilon(1e-13));

    const double v2 = finite_bound_prefix_suffix(FiniteSplit(8, 4, 2, 1));
    const double wpp = std::min(4.0 / 4.0, 1.0);
    const double expect2 =
        std::max(4 * ref_h(0.25) + std::log2(9.0) + 1.0,
                 0.5 * (4 * ref_h(0.25) + std::log2(9.0) + 4 * ref_h(2 * wpp / 4.0) + 2 * wpp +
                        std::log2(72.0)) +
                     1.0);
    CHECK(v2 == doctest::Approx(expect2).epsilon(1e-13));
    CHECK(v2 == doctest::Approx(10.292481250360577).epsilon(1e-13));
}

TEST_CASE("finite prefix-suffix bound is at least one") {
    std::mt19937 rng(37);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng() % 30);
        const int e = 1 + static_cast<int>(rng() % (n - 1));
        const int omega = 1 + static_cast<int>(rng() % n);
        const int lo = std::max(0, omega - (n - e));
        const int hi = std::min(e, omega);
        const int wp = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
        CHECK(finite_bound_prefix_suffix(FiniteSplit(n, e, omega, wp)) >= 1.0);
    }
}

TEST_CASE("finite code-size bound enumerates weight classes") {
    const double direct = finite_bound_code_size(10, 5, 2, FiniteVariant::Improved);
    double worst = 0.0;
    for (int wp = 0; wp <= 2; ++wp) {
        worst = std::max(worst, finite_bound_improved(FiniteSplit(10, 5, 2, wp)));
    }
    CHECK(direct == doctest::Approx(worst + std::log2(3.0)).epsilon(1e-13));
    CHECK(direct == doctest::Approx(9.761643567881862).epsilon(1e-13));

    const double ps = finite_bound_code_size(12, 6, 3, FiniteVariant::PrefixSuffix);
    double worst_ps = 0.0;
    for (int wp = 0; wp <= 3; ++wp) {
        worst_ps = std::max(worst_ps, finite_bound_prefix_suffix(FiniteSplit(12, 6, 3, wp)));
    }
    CHECK(ps == doctest::Approx(worst_ps + std::log2(4.0)).epsilon(1e-13));
    CHECK(ps == doctest::Approx(15.002695972828608).epsilon(1e-13));
}

TEST_CASE("finite code-size bound with a single weight class") {
    // omega = n pins the prefix weight to e: no class slack
    const double v = finite_bound_code_size(10, 5, 10, FiniteVariant::Improved);
    CHECK(v == doctest::Approx(finite_bound_improved(FiniteSplit(10, 5, 10, 5))).epsilon(1e-13));
}
