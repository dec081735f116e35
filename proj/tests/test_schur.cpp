#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "boxball/schur.hpp"
#include "oracles.hpp"

using namespace boxball;
using Rational = boost::multiprecision::cpp_rational;

namespace {

std::vector<double> random_density(oracle::SmallRng& rng, int kappa) {
    std::vector<double> p(static_cast<std::size_t>(kappa) + 1);
    double sum = 0.0;
    for (double& x : p) {
        x = 0.05 + rng.uniform();
        sum += x;
    }
    for (double& x : p) x /= sum;
    return p;
}

}  // namespace

TEST_CASE("schur basics") {
    const std::vector<double> p{0.5, 0.3, 0.2};
    CHECK(schur(Partition{1}, p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(schur(Partition{1, 1}, std::vector<double>{2.0, 3.0}) == doctest::Approx(6.0));
    // more parts than variables vanishes
    CHECK(schur(Partition{1, 1, 1}, std::vector<double>{2.0, 3.0}) == 0.0);
    CHECK(schur(Partition{}, p) == 1.0);
    CHECK(schur(Partition{0, 0}, p) == 1.0);
}

TEST_CASE("Z_5^(1) for two colors is the degree-5 complete sum") {
    const std::vector<double> p{0.5, 0.3, 0.2};
    double direct = 0.0;
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b) {
            const int c = 5 - a - b;
            direct += std::pow(p[0], a) * std::pow(p[1], b) * std::pow(p[2], c);
        }
    CHECK(partition_Z(5, 1, p) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("single-color partition function closed form") {
    for (double p1 : {0.3, 0.5, 0.7}) {
        const std::vector<double> p{1.0 - p1, p1};
        const double q = p1 / (1.0 - p1);
        for (long long c = 1; c <= 8; ++c) {
            const double z = partition_Z(c, 1, p);
            if (p1 == 0.5)
                CHECK(z == doctest::Approx((c + 1.0) / std::pow(2.0, c)).epsilon(1e-13));
            else
                CHECK(z == doctest::Approx(std::pow(p[0], c) * (1.0 - std::pow(q, c + 1)) / (1.0 - q))
                               .epsilon(1e-13));
        }
    }
}

TEST_CASE("bialternant equals Jacobi-Trudi away from repeated variables") {
    auto rng = oracle::SmallRng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 2 + static_cast<int>(rng.next() % 5);
        std::vector<double> w(static_cast<std::size_t>(r));
        for (double& x : w) x = 0.1 + rng.uniform();
        Partition lambda;
        long long prev = 1 + static_cast<long long>(rng.next() % 9);
        for (int k = 0; k < r && prev > 0; ++k) {
            lambda.push_back(prev);
            prev = static_cast<long long>(rng.next() % static_cast<std::uint64_t>(prev + 1));
        }
        // both determinant routes, evaluated exactly, give the same value
        std::vector<Rational> rw(w.begin(), w.end());
        const Rational jt = schur_jacobi_trudi(lambda, rw);
        const Rational ba = schur_bialternant(lambda, rw);
        CHECK(jt == ba);
        // and the double entry point reproduces it to roundoff
        const double rounded = schur(lambda, w);
        CHECK(std::abs(rounded - jt.convert_to<double>()) <=
              1e-14 * std::max(1.0, std::abs(rounded)));
    }
}

TEST_CASE("bialternant rejects repeated variables; Jacobi-Trudi does not") {
    const std::vector<double> w{0.4, 0.4, 0.2};
    CHECK_THROWS_AS(schur_bialternant(Partition{2, 1}, w), std::invalid_argument);
    CHECK(schur_jacobi_trudi(Partition{1}, w) == doctest::Approx(1.0));
}

TEST_CASE("exact rational Jacobi-Trudi equals the tableau generating sum") {
    const std::vector<Rational> p{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
    for (const auto& [c, a] : {std::pair{1, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
        const auto table = stationary_pi(c, a, p);
        CHECK(table.partition == schur_jacobi_trudi(rect_partition(c, a), p));
    }
}

TEST_CASE("stationary measure is the normalized product form") {
    const std::vector<Rational> p{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
    const auto table = stationary_pi(5, 1, p);
    auto rpow = [](Rational base, long long e) {
        Rational r = 1;
        for (long long k = 0; k < e; ++k) r *= base;
        return r;
    };
    Rational total = 0;
    for (std::size_t s = 0; s < table.states.size(); ++s) {
        const auto m = table.states[s].letter_counts(2);
        const Rational expected =
            rpow(p[0], m[0]) * rpow(p[1], m[1]) * rpow(p[2], m[2]) / table.partition;
        CHECK(table.pi[s] == expected);
        total += table.pi[s];
    }
    CHECK(total == 1);
}

TEST_CASE("pi_1^(1) is the density itself") {
    const std::vector<Rational> p{Rational(2, 5), Rational(2, 5), Rational(1, 5)};
    const auto table = stationary_pi(1, 1, p);
    REQUIRE(table.states.size() == 3);
    for (std::size_t s = 0; s < 3; ++s) {
        const Letter x = table.states[s].at(0, 0);
        CHECK(table.pi[s] == p[static_cast<std::size_t>(x)]);
    }
}

TEST_CASE("state cap guard") {
    const std::vector<double> p{0.5, 0.3, 0.2};
    CHECK_THROWS_AS(stationary_pi(50, 2, p, 100), std::invalid_argument);
}

TEST_CASE("epsilon closed forms") {
    SUBCASE("single color") {
        for (double p1 : {0.3, 0.5}) {
            const std::vector<double> p{1.0 - p1, p1};
            const double q = p1 / (1.0 - p1);
            for (long long c = 1; c <= 6; ++c) {
                const double expected = p1 == 0.5
                                            ? c / (2.0 * (c + 1.0))
                                            : p1 * (1.0 - std::pow(q, c)) / (1.0 - std::pow(q, c + 1));
                CHECK(epsilon(c, 1, p) == doctest::Approx(expected).epsilon(1e-13));
            }
        }
    }
    SUBCASE("two colors, capacity one") {
        const std::vector<double> p{0.5, 0.3, 0.2};
        CHECK(epsilon(1, 1, p) ==
              doctest::Approx(p[0] * p[1] + p[1] * p[2] + p[2] * p[0]).epsilon(1e-13));
    }
    SUBCASE("two colors uniform, capacity two") {
        const std::vector<double> p{1.0 / 3, 1.0 / 3, 1.0 / 3};
        CHECK(epsilon(2, 1, p) == doctest::Approx(4.0 / 9).epsilon(1e-13));
    }
}

TEST_CASE("epsilon ratio form equals the stationary sum form") {
    auto rng = oracle::SmallRng(55);
    for (int trial = 0; trial < 20; ++trial) {
        const int kappa = 1 + static_cast<int>(rng.next() % 3);
        const auto p = random_density(rng, kappa);
        const int a = 1 + static_cast<int>(rng.next() % kappa);
        const long long c = 1 + static_cast<long long>(rng.next() % 3);
        CHECK(epsilon(c, a, p) == doctest::Approx(epsilon_sum_form(c, a, p)).epsilon(1e-12));
    }
}

TEST_CASE("epsilon lies in (0,1)") {
    auto rng = oracle::SmallRng(66);
    for (int trial = 0; trial < 50; ++trial) {
        const int kappa = 1 + static_cast<int>(rng.next() % 4);
        const auto p = random_density(rng, kappa);
        const int a = 1 + static_cast<int>(rng.next() % kappa);
        const long long c = 1 + static_cast<long long>(rng.next() % 6);
        const double e = epsilon(c, a, p);
        CHECK(e > 0.0);
        CHECK(e < 1.0);
    }
}

TEST_CASE("eta closed forms and row duality") {
    SUBCASE("critical single color") {
        const std::vector<double> p{0.5, 0.5};
        for (long long i = 1; i <= 8; ++i)
            CHECK(eta(i, 1, p) == doctest::Approx(1.0 / (2.0 * i * (i + 1))).epsilon(1e-12));
    }
    SUBCASE("two colors uniform") {
        const std::vector<double> p{1.0 / 3, 1.0 / 3, 1.0 / 3};
        CHECK(eta(1, 1, p) == doctest::Approx(1.0 / 3).epsilon(1e-12));
        CHECK(eta(2, 1, p) == doctest::Approx(1.0 / 9).epsilon(1e-12));
    }
    SUBCASE("off-critical single color") {
        // eta_i = q^i (1-q)^2 / ((1+q)(1-q^i)(1-q^{i+1})) with q = p1/p0
        const double p1 = 0.4;
        const std::vector<double> p{1.0 - p1, p1};
        const double q = p1 / (1.0 - p1);
        for (long long i = 1; i <= 8; ++i) {
            const double expected = std::pow(q, i) * (1.0 - q) * (1.0 - q) /
                                    ((1.0 + q) * (1.0 - std::pow(q, i)) * (1.0 - std::pow(q, i + 1)));
            CHECK(eta(i, 1, p) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("row duality under density swap") {
        for (double p1 : {1.0 / 3, 0.25, 0.6}) {
            const std::vector<double> p{1.0 - p1, p1};
            const std::vector<double> swapped{p1, 1.0 - p1};
            for (long long i = 1; i <= 6; ++i)
                CHECK(eta(i, 1, p) == doctest::Approx(eta(i, 1, swapped)).epsilon(1e-12));
        }
    }
}

TEST_CASE("eta equals the epsilon difference on a random grid") {
    auto rng = oracle::SmallRng(77);
    int done = 0;
    while (done < 120) {
        const int kappa = 1 + static_cast<int>(rng.next() % 5);
        const auto p = random_density(rng, kappa);
        const int a = 1 + static_cast<int>(rng.next() % kappa);
        const long long i = 1 + static_cast<long long>(rng.next() % 10);
        const double lhs = eta(i, a, p);
        const double rhs = epsilon(i, a, p) - epsilon(i - 1, a, p);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        CHECK(lhs > 0.0);
        CHECK(lhs <= 1.0 + 1e-15);
        ++done;
    }
}

TEST_CASE("density validation") {
    CHECK_THROWS_AS(validate_density(std::vector<double>{0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(validate_density(std::vector<double>{1.2, -0.2}), std::invalid_argument);
    CHECK(is_strictly_decreasing(std::vector<double>{0.5, 0.3, 0.2}));
    CHECK(!is_strictly_decreasing(std::vector<double>{0.4, 0.4, 0.2}));
    CHECK(is_weakly_decreasing(std::vector<double>{0.4, 0.4, 0.2}));
}
