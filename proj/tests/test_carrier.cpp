#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxball/carrier.hpp"
#include "oracles.hpp"

using namespace boxball;

namespace {

const std::string kRunning = "11214010121420442012";

Configuration cfg(const std::string& digits, int kappa = 4) {
    return parse_configuration(digits, kappa);
}

}  // namespace

TEST_CASE("carrier path satisfies the R recursion and reproduces Figure 2") {
    const Configuration x = cfg("12203100", 3);
    const CarrierPath path = run_carrier(x, 2, 3);
    const std::vector<Letter> expected{1, 0, 0, 1, 1, 2, 2, 0};
    REQUIRE(path.emissions.size() >= 7);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const Letter got = i < path.emissions.size() ? path.emissions[i] : 0;
        CHECK(got == expected[i]);
    }
    CHECK(path.states.front() == ground_state(2, 3));
    for (std::size_t k = 0; k < path.emissions.size(); ++k) {
        RectTableau s = path.states[k];
        const Letter in = k < 8 ? x.at(k + 1) : 0;
        CHECK(local_energy(s, in) == path.energies[k]);
        const Letter y = combinatorial_R_inplace(s, in);
        CHECK(y == path.emissions[k]);
        CHECK(s == path.states[k + 1]);
    }
}

TEST_CASE("carrier path over an empty configuration") {
    const CarrierPath path = run_carrier(cfg("000", 2), 1, 2);
    CHECK(path.total_energy() == 0);
    for (const auto& s : path.states) CHECK(s == ground_state(1, 2));
}

TEST_CASE("single-color two-ball energies by hand") {
    // kappa=1, X=(1,1,0,...), c=1: hand-run trace gives H = (1,0,0): the
    // first ball loads, the full carrier passes the second through, and
    // unloading onto the empty site scores nothing.
    const CarrierPath path = run_carrier(cfg("110", 1), 1, 1);
    REQUIRE(path.energies.size() >= 3);
    CHECK(path.energies[0] == 1);
    CHECK(path.energies[1] == 0);
    CHECK(path.energies[2] == 0);
    CHECK(path.total_energy() == 1);
}

TEST_CASE("energy matrix of the running example") {
    const EnergyMatrix em = energy_matrix(cfg(kRunning));
    REQUIRE(em.row_count() == 5);
    const std::vector<std::vector<long long>> expected = {
        {10, 5, 2, 1}, {13, 7, 3, 2}, {15, 8, 4, 3}, {16, 9, 4, 4}, {16, 9, 4, 4}};
    for (int c = 1; c <= 5; ++c)
        for (int a = 1; a <= 4; ++a) CHECK(em.at(c, a) == expected[c - 1][a - 1]);
    for (bool flag : em.stabilized) CHECK(flag);
}

TEST_CASE("energy matrix edge cases") {
    const EnergyMatrix zero = energy_matrix(cfg("0000", 3));
    CHECK(zero.row_count() == 1);
    for (int a = 1; a <= 3; ++a) CHECK(zero.at(1, a) == 0);

    const EnergyMatrix one = energy_matrix(cfg("00300", 3));
    for (int c = 1; c <= one.row_count(); ++c)
        for (int a = 1; a <= 3; ++a) CHECK(one.at(c, a) == 1);
}

TEST_CASE("stabilization certifies even when the diagram is maximally deep") {
    // one soliton of length 3: mu^(1) = (1,1,1) has as many rows as balls,
    // so certification needs the row at c = balls + 1
    const EnergyMatrix em = energy_matrix(cfg("111", 1));
    REQUIRE(em.row_count() == 4);
    for (bool flag : em.stabilized) CHECK(flag);
    const YoungTuple y = young_diagrams(em);
    CHECK(y.diagrams[0] == std::vector<long long>{1, 1, 1});
}

TEST_CASE("Young diagrams of the running example") {
    const YoungTuple y = young_diagrams(energy_matrix(cfg(kRunning)));
    CHECK(y.diagrams[0] == std::vector<long long>{10, 3, 2, 1});
    CHECK(y.diagrams[1] == std::vector<long long>{5, 2, 1, 1});
    CHECK(y.diagrams[2] == std::vector<long long>{2, 1, 1});
    CHECK(y.diagrams[3] == std::vector<long long>{1, 1, 1, 1});
    // column multiplicities and partial sums are consistent
    CHECK(y.column_multiplicity(1, 1) == 7);
    CHECK(y.partial_sum(1, 2) == 13);
    long long dual = 0;
    for (int j = 1; j <= 10; ++j) dual += std::min<long long>(2, j) * y.column_multiplicity(1, j);
    CHECK(dual == 13);
}

TEST_CASE("young_diagrams rejects concavity violations") {
    EnergyMatrix bad;
    bad.kappa = 1;
    bad.rows = {{1}, {3}};  // rho_2 = 2 > rho_1 = 1
    CHECK_THROWS_AS(young_diagrams(bad), std::invalid_argument);
}

TEST_CASE("diagram sizes count balls of color >= a") {
    auto rng = oracle::SmallRng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int kappa = 1 + static_cast<int>(rng.next() % 4);
        const Configuration x = oracle::random_configuration(rng, kappa, 30);
        const YoungTuple y = young_diagrams(energy_matrix(x));
        for (int a = 1; a <= kappa; ++a) CHECK(y.size(a) == x.ball_count_at_least(a));
    }
}

TEST_CASE("time invariance of the energy matrix") {
    auto rng = oracle::SmallRng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const int kappa = 1 + static_cast<int>(rng.next() % 4);
        Configuration x = oracle::random_configuration(rng, kappa, 40);
        const EnergyMatrix e0 = energy_matrix(x);
        for (int t = 0; t < 8; ++t) {
            x = evolve(x);
            CHECK(energy_matrix(x).rows == e0.rows);
        }
    }
}

TEST_CASE("vacancies of the running example") {
    const YoungTuple y = young_diagrams(energy_matrix(cfg(kRunning)));
    const VacancyTable v = vacancies(y, 20);
    // v_1^(1) = 20 - 2*10 + 5
    CHECK(v.at(1, 1) == 5);
    // the initial state is not highest, so realizability fails somewhere
    CHECK(!v.nonnegative);
    CHECK(v.at(2, 4) == -1);
    CHECK_THROWS_AS(vacancies(y, 20, 0, true), std::invalid_argument);
}

TEST_CASE("vacancies for empty diagrams") {
    const YoungTuple y = young_diagrams(energy_matrix(cfg("000", 2)));
    const VacancyTable v = vacancies(y, 12, 3);
    for (int i = 1; i <= 3; ++i) {
        CHECK(v.at(i, 1) == 12);
        CHECK(v.at(i, 2) == 0);
    }
}

TEST_CASE("v_infinity consistency from sizes") {
    auto rng = oracle::SmallRng(808);
    for (int trial = 0; trial < 50; ++trial) {
        const int kappa = 1 + static_cast<int>(rng.next() % 3);
        const Configuration x = oracle::random_configuration(rng, kappa, 24);
        const YoungTuple y = young_diagrams(energy_matrix(x));
        const VacancyTable v = vacancies(y, 24);
        for (int a = 1; a <= kappa; ++a) {
            long long expected = (a == 1) ? 24 : 0;
            for (int b = 1; b <= kappa; ++b) expected -= cartan(a, b) * y.size(b);
            CHECK(v.v_infinity[a - 1] == expected);
        }
    }
}

TEST_CASE("negative vacancy is rejected in strict mode") {
    const YoungTuple y = young_diagrams(energy_matrix(cfg("11110", 1)));
    CHECK_THROWS_AS(vacancies(y, 4, 0, true), std::invalid_argument);
    CHECK(!vacancies(y, 4).nonnegative);
}
