#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "sugeno/integral.hpp"

using namespace sugeno;

namespace {

oracle::Binary closed_form(Semicopula::Kind kind) {
    switch (kind) {
        case Semicopula::Kind::Min: return [](double a, double b) { return a < b ? a : b; };
        case Semicopula::Kind::Product: return [](double a, double b) { return a * b; };
        case Semicopula::Kind::ProdMax: return [](double a, double b) { return oracle::prod_max(a, b); };
        default: return [](double a, double b) { return a + b - 1.0 > 0.0 ? a + b - 1.0 : 0.0; };
    }
}

oracle::SetFunction as_set_function(const Capacity& c) {
    std::vector<double> t(c.table().begin(), c.table().end());
    return [t](std::uint32_t m) { return t[m]; };
}

MeasurableFn random_fn(const FiniteSpace& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> v(s.size());
    const bool lattice = unit(rng) < 0.5;
    for (double& x : v) x = lattice ? std::floor(unit(rng) * 9.0) / 8.0 : unit(rng);
    return MeasurableFn(s, v);
}

const FiniteSpace kFour(4);
const std::vector<double> kWorked{0.25, 0.5, 0.75, 1.0};

}  // namespace

TEST_CASE("worked example: goldens confirmed by an independent grid sup") {
    const auto u = Capacity::uniform_additive(kFour);
    const MeasurableFn f(kFour, kWorked);
    auto mu = [](std::uint32_t m) { return oracle::uniform_count(m, 4); };

    struct Golden {
        Semicopula s;
        double value;
        double argmax;
    };
    const std::vector<Golden> goldens{
        {Semicopula::min(), 0.5, 0.5},
        {Semicopula::product(), 0.375, 0.5},
        {Semicopula::lukasiewicz(), 0.25, 0.25},
        {Semicopula::prod_max(), 0.28125, 0.5},
    };
    for (const auto& g : goldens) {
        CAPTURE(g.s.name());
        const double brute = oracle::grid_sup(closed_form(g.s.kind()), mu, kWorked, 100001);
        CHECK(std::abs(brute - g.value) <= 1e-5);
        const auto r = integrate(g.s, u, f);
        CHECK(r.value == doctest::Approx(g.value).epsilon(1e-15));
        CHECK(r.argmax_threshold == g.argmax);
        CHECK(r.candidates_inspected == 4);
        CHECK(g.s(r.argmax_threshold, survival(u, f, r.argmax_threshold)) == r.value);
    }
}

TEST_CASE("sugeno and shilkret wrappers are bit-identical delegations") {
    const auto u = Capacity::uniform_additive(kFour);
    const MeasurableFn f(kFour, kWorked);
    CHECK(sugeno_integral(u, f).value == 0.5);
    CHECK(shilkret_integral(u, f).value == 0.375);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const auto c = random_capacity(kFour, rng, CapacityFamily::Mixed);
        const auto g = random_fn(kFour, rng);
        CHECK(sugeno_integral(c, g).value == integrate(Semicopula::min(), c, g).value);
        CHECK(shilkret_integral(c, g).argmax_threshold == integrate(Semicopula::product(), c, g).argmax_threshold);
        for (double a : {0.0, 0.3, 1.0}) {
            CHECK(sugeno_integral(c, MeasurableFn::constant(kFour, a)).value == a);
            CHECK(shilkret_integral(c, MeasurableFn::constant(kFour, a)).value == a);
        }
    }
}

TEST_CASE("constant, zero and indicator identities") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 6; ++n) {
        const FiniteSpace s(n);
        for (int trial = 0; trial < 5; ++trial) {
            const auto c = random_capacity(s, rng, CapacityFamily::Mixed);
            for (const auto& sc : Semicopula::builtins()) {
                CHECK(integrate(sc, c, MeasurableFn::zero(s)).value == 0.0);
                for (int k = 1; k <= 20; ++k) {
                    const double a = 1.0 / k;
                    CHECK(integrate(sc, c, MeasurableFn::constant(s, a)).value == a);
                }
                for (Mask m = 0; m < s.subset_count(); ++m) {
                    REQUIRE(integrate(sc, c, MeasurableFn::indicator(s, m)).value == c.measure(m));
                }
            }
        }
    }
    // Indicator sup is reached only at t = 1, so the grid must include it.
    const auto u = Capacity::uniform_additive(kFour);
    const auto ind = MeasurableFn::indicator(kFour, 0b0110);
    CHECK(integrate_grid_oracle(Semicopula::product(), u, ind, 100001) == 0.5);
    CHECK(integrate_grid_oracle(Semicopula::min(), u, MeasurableFn::zero(kFour), 2) == 0.0);
}

TEST_CASE("grid oracle lower-bounds the exact value and converges to it") {
    const auto u = Capacity::uniform_additive(kFour);
    const MeasurableFn f(kFour, kWorked);
    CHECK(std::abs(integrate_grid_oracle(Semicopula::min(), u, f, 100001) - 0.5) <= 1e-5);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const FiniteSpace s(1 + trial % 8);
        const auto c = random_capacity(s, rng, CapacityFamily::Mixed);
        const auto g = random_fn(s, rng);
        for (const auto& sc : Semicopula::builtins()) {
            const double exact = integrate(sc, c, g).value;
            const double grid = integrate_grid_oracle(sc, c, g, 20001);
            CHECK(grid <= exact);
            CHECK(exact - grid <= 2.0 / 20000.0 + 1e-15);
            const double brute = oracle::grid_sup(closed_form(sc.kind()), as_set_function(c),
                                                  std::vector<double>(g.values().begin(), g.values().end()), 20001);
            CHECK(std::abs(brute - grid) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(integrate_grid_oracle(Semicopula::min(), u, f, 1), Error);
}

TEST_CASE("monotonicity in f and in mu, dominance by min") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const FiniteSpace s(1 + trial % 6);
        const auto c = random_capacity(s, rng, CapacityFamily::Mixed);
        const auto f = random_fn(s, rng);
        std::vector<double> up(f.values().begin(), f.values().end());
        for (double& x : up) x = std::min(1.0, x + unit(rng) * (1.0 - x));
        const MeasurableFn g(s, up);

        // c' >= c setwise: distorting by a concave g keeps the boundary.
        const std::vector<double> concave{0.0, 0.7, 1.0};
        const auto bigger = Capacity::from_distortion(c, concave);
        REQUIRE(c.dominated_by(bigger));

        for (const auto& sc : Semicopula::builtins()) {
            CHECK(integrate(sc, c, f).value <= integrate(sc, c, g).value);
            CHECK(integrate(sc, c, f).value <= integrate(sc, bigger, f).value);
            CHECK(integrate(sc, c, f).value <= integrate(Semicopula::min(), c, f).value);
        }
    }
}

TEST_CASE("argmax tie-breaking picks the smallest threshold") {
    // Lukasiewicz on the worked example ties at every candidate.
    const auto u = Capacity::uniform_additive(kFour);
    CHECK(integrate(Semicopula::lukasiewicz(), u, MeasurableFn(kFour, kWorked)).argmax_threshold == 0.25);
    // f = 0 has the single candidate 0.
    const auto z = integrate(Semicopula::min(), u, MeasurableFn::zero(kFour));
    CHECK(z.argmax_threshold == 0.0);
    CHECK(z.candidates_inspected == 1);
}

TEST_CASE("table semicopula integrates like the function it tabulates") {
    std::vector<std::vector<double>> grid(11, std::vector<double>(11));
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j) grid[i][j] = (i / 10.0) * (j / 10.0);
    const auto t = Semicopula::table(grid);
    const auto u = Capacity::uniform_additive(kFour);
    const MeasurableFn f(kFour, kWorked);
    CHECK(integrate(t, u, f).value == doctest::Approx(0.375).epsilon(1e-12));
}

TEST_CASE("space mismatch") {
    CHECK_THROWS_AS(integrate(Semicopula::min(), Capacity::uniform_additive(FiniteSpace(3)),
                              MeasurableFn(kFour, kWorked)),
                    Error);
}
