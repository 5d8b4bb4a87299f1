#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "growthlab/master_eq.hpp"

using namespace growthlab;

TEST_CASE("known grid values") {
    const QGrid g = solve_q(10, 10);
    CHECK(g.at(0, 1) == 0.5);
    CHECK(g.at(1, 1) == 0.5 / 3.0);
    CHECK(g.at(2, 1) == doctest::Approx(1.0 / 30.0).epsilon(1e-14));
    CHECK(g.at(0, 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    for (std::size_t k = 0; k <= g.kmax; ++k) CHECK(g.at(k, 0) == 0.0);
}

TEST_CASE("recurrence residual and nonnegativity") {
    const QGrid g = solve_q(200, 200);
    double worst = 0.0;
    for (std::size_t l = 1; l <= g.lmax; ++l) {
        for (std::size_t k = 0; k <= g.kmax; ++k) {
            CHECK(g.at(k, l) >= 0.0);
            double rhs = k >= 1 ? static_cast<double>(k - 1) * g.value(k - 1, l) : 0.0;
            rhs += static_cast<double>(k + 1) * g.value(k + 1, l - 1);
            if (l == 1 && k <= 1) rhs += 0.5;
            worst = std::max(
                worst, std::abs(static_cast<double>(2 * k + 1) * g.at(k, l) - rhs));
        }
    }
    CHECK(worst <= 1e-14);
}

TEST_CASE("monotone mass under grid enlargement") {
    const QGrid small = solve_q(50, 50);
    const QGrid large = solve_q(100, 100);
    double mass_small = 0.0, mass_large_restricted = 0.0;
    for (std::size_t k = 0; k <= 50; ++k) {
        for (std::size_t l = 0; l <= 50; ++l) {
            CHECK(large.at(k, l) >= small.at(k, l));
            mass_small += small.at(k, l);
            mass_large_restricted += large.at(k, l);
        }
    }
    CHECK(truncation_mass(large) <= truncation_mass(small));
    CHECK(mass_large_restricted >= mass_small);
    CHECK(truncation_mass(small) >= 0.0);
    CHECK(truncation_mass(small) <= 1.0);
}

TEST_CASE("degree distribution values") {
    const QGrid g = solve_q(60, 60);
    const auto p = degree_distribution(g, 40);
    CHECK(p[1] == 0.5);
    CHECK(p[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    double total = 0.0;
    for (double v : p) total += v;
    CHECK(total <= 1.0 + 1e-12);

    CHECK_THROWS_AS(degree_distribution(g, 61), std::invalid_argument);
}

TEST_CASE("default truncation leaves < 1e-6 mass") {
    const QGrid g = solve_q(kQGridDefault, kQGridDefault);
    CHECK(truncation_mass(g) < 1e-6);
    const auto p = degree_distribution(g, kQGridDefault);
    double total = 0.0;
    for (double v : p) total += v;
    CHECK(1.0 - total < 1e-6);
}

TEST_CASE("tiny grid truncation mass") {
    const QGrid g = solve_q(1, 1);
    CHECK(truncation_mass(g) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("bounds validation") {
    CHECK_THROWS_AS(solve_q(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(solve_q(5, 0), std::invalid_argument);
}
