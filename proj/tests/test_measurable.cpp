#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "sugeno/measurable.hpp"

using namespace sugeno;

TEST_CASE("construction rejects values outside [0,1] and bad lengths") {
    const FiniteSpace s(3);
    CHECK_THROWS_AS(MeasurableFn(s, {0.1, 1.2, 0.0}), Error);
    CHECK_THROWS_AS(MeasurableFn(s, {0.1, -0.0001, 0.0}), Error);
    CHECK_THROWS_AS(MeasurableFn(s, {0.1, 0.2}), Error);
}

TEST_CASE("level_set uses exact >=") {
    const FiniteSpace s(4);
    const MeasurableFn f(s, {0.25, 0.5, 0.75, 1.0});
    CHECK(level_set(f, 0.5) == 0b1110U);
    CHECK(level_set(f, 0.0) == s.full());
    CHECK(level_set(f, 0.75 + 1e-12) == 0b1000U);
    CHECK(level_set(f, 0.75) == 0b1100U);
    CHECK(level_set(f, 1.0) == 0b1000U);
    CHECK_THROWS_AS(level_set(f, 1.5), Error);
    CHECK_THROWS_AS(level_set(f, -1e-300), Error);
}

TEST_CASE("strict_support") {
    CHECK(strict_support(MeasurableFn::zero(FiniteSpace(5))) == 0U);
    CHECK(strict_support(MeasurableFn(FiniteSpace(3), {0.0, 0.001, 0.0})) == 0b010U);
    const FiniteSpace s(6);
    for (double a : {1.0, 0.5, 1e-300}) CHECK(strict_support(MeasurableFn::constant(s, a)) == s.full());
}

TEST_CASE("residual") {
    const FiniteSpace s(2);
    const MeasurableFn f(s, {0.8, 0.2});
    const MeasurableFn g(s, {0.5, 0.5});
    const auto r = residual(f, g);
    CHECK(r[0] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(r[1] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(residual(f, f) == MeasurableFn::zero(s));
    CHECK(residual(f, MeasurableFn::zero(s)) == f);
    CHECK_THROWS_AS(residual(f, MeasurableFn::zero(FiniteSpace(3))), Error);
}

TEST_CASE("survival") {
    const FiniteSpace s4(4);
    const auto u = Capacity::uniform_additive(s4);
    const MeasurableFn f(s4, {0.25, 0.5, 0.75, 1.0});
    CHECK(survival(u, f, 0.0) == 1.0);
    CHECK(survival(u, f, 0.6) == oracle::uniform_count(0b1100, 4));
    CHECK(survival(u, f, 0.6) == 0.5);

    const std::vector<double> w{1.0, 0.3};
    const auto p = Capacity::from_possibility(FiniteSpace(2), w);
    CHECK(survival(p, MeasurableFn(FiniteSpace(2), {0.0, 1.0}), 0.5) == 0.3);
    CHECK(survival(p, MeasurableFn(FiniteSpace(2), {1.0, 0.0}), 0.5) == 1.0);
    CHECK_THROWS_AS(survival(p, f, 0.1), Error);
}

TEST_CASE("distinct_values") {
    const FiniteSpace s3(3);
    CHECK(distinct_values(MeasurableFn(s3, {0.5, 0.5, 0.5})) == std::vector<double>{0.5});
    CHECK(distinct_values(MeasurableFn(FiniteSpace(4), {0.25, 1.0, 0.25, 0.5})) ==
          std::vector<double>{0.25, 0.5, 1.0});
    CHECK(distinct_values(MeasurableFn::zero(s3)) == std::vector<double>{0.0});
}

TEST_CASE("level sets are nested and survival is non-increasing") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const FiniteSpace s(1 + trial % 8);
        std::vector<double> v(s.size());
        for (double& x : v) x = trial % 3 == 0 ? std::floor(unit(rng) * 5) / 4.0 : unit(rng);
        for (double& x : v) x = std::min(x, 1.0);
        const MeasurableFn f(s, v);
        for (int i = 0; i <= 100; ++i) {
            for (int j = i; j <= 100; ++j) {
                const Mask lo = level_set(f, i / 100.0);
                const Mask hi = level_set(f, j / 100.0);
                REQUIRE((hi & lo) == hi);
            }
        }
        const auto c = random_capacity(s, rng, CapacityFamily::Mixed);
        std::vector<double> surv;
        for (int k = 0; k <= 1000; ++k) surv.push_back(survival(c, f, k / 1000.0));
        CHECK(oracle::non_increasing(surv));

        // strict support is the limit of level sets as t decreases to 0.
        double min_positive = 2.0;
        for (double x : v) {
            if (x > 0.0) min_positive = std::min(min_positive, x);
        }
        const Mask expected = min_positive <= 1.0 ? level_set(f, min_positive) : Mask{0};
        CHECK(strict_support(f) == expected);
    }
}

TEST_CASE("pointwise domination") {
    const FiniteSpace s(2);
    CHECK(MeasurableFn(s, {0.1, 0.2}).dominated_by(MeasurableFn(s, {0.1, 0.3})));
    CHECK_FALSE(MeasurableFn(s, {0.4, 0.2}).dominated_by(MeasurableFn(s, {0.1, 0.3})));
}
