#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "boxball/tableau.hpp"
#include "oracles.hpp"

using namespace boxball;

TEST_CASE("row insertion reproduces the worked chain") {
    Tableau t({{1, 2}, {3, 4}});
    t = row_insert(t, 1);
    CHECK(t == Tableau({{1, 1}, {2, 4}, {3}}));
    t = row_insert(t, 3);
    CHECK(t == Tableau({{1, 1, 3}, {2, 4}, {3}}));
    t = row_insert(t, 4);
    CHECK(t == Tableau({{1, 1, 3, 4}, {2, 4}, {3}}));
    CHECK(t.is_semistandard());
}

TEST_CASE("row insertion edge cases") {
    CHECK(row_insert(Tableau{}, 5) == Tableau(std::vector<std::vector<Letter>>{{5}}));
    CHECK(row_insert(Tableau({{0, 0}}), 0) == Tableau({{0, 0, 0}}));
}

TEST_CASE("column insertion") {
    // single column (1,2): the 0 lands on top, the 1 bumps right
    CHECK(column_insert(Tableau({{1}, {2}}), 0) == Tableau({{0, 1}, {2}}));
    CHECK(column_insert(Tableau{}, 7) == Tableau(std::vector<std::vector<Letter>>{{7}}));
    // inserting 0 into a ground state slides the top row right
    const RectTableau u = ground_state(3, 3);
    const Tableau shifted = column_insert(u.to_tableau(), 0);
    CHECK(shifted == Tableau({{0, 0, 0, 0}, {1, 1, 1}, {2, 2, 2}}));
}

TEST_CASE("row words") {
    const Tableau t({{1, 2}, {3, 4}});
    CHECK(row_word(t) == Word{3, 4, 1, 2});
    CHECK(reverse_row_word(t) == Word{2, 1, 4, 3});
    CHECK(row_word(Tableau({{0, 1}})) == Word{0, 1});
}

TEST_CASE("plactic product") {
    const Tableau s({{1, 2}, {3, 4}});
    CHECK(product(s, Tableau{}) == s);
    CHECK(product(s, Tableau({{1, 3, 4}})) == Tableau({{1, 1, 3, 4}, {2, 4}, {3}}));
}

TEST_CASE("product letter counts add on random pairs") {
    const int kappa = 3;
    auto rng = oracle::SmallRng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        const Tableau s = oracle::random_sst(rng, kappa, 3);
        const Tableau t = oracle::random_sst(rng, kappa, 3);
        const Tableau st = product(s, t);
        REQUIRE(st.is_semistandard());
        const auto ms = s.letter_counts(kappa);
        const auto mt = t.letter_counts(kappa);
        const auto mst = st.letter_counts(kappa);
        for (int i = 0; i <= kappa; ++i) CHECK(mst[i] == ms[i] + mt[i]);
    }
}

TEST_CASE("combinatorial R worked examples") {
    const int kappa = 5;
    SUBCASE("reverse bumping") {
        auto [y, s] = combinatorial_R(parse_rect_tableau("011/234"), 3, kappa);
        CHECK(y == 1);
        CHECK(s == parse_rect_tableau("012/334"));
    }
    SUBCASE("column insertion emits from the last column") {
        auto [y, s] = combinatorial_R(parse_rect_tableau("011/234"), 2, kappa);
        CHECK(y == 4);
        CHECK(s == parse_rect_tableau("011/223"));
    }
    SUBCASE("three-row column insertion") {
        auto [y, s] = combinatorial_R(parse_rect_tableau("011/224/445"), 3, kappa);
        CHECK(y == 4);
        CHECK(s == parse_rect_tableau("011/224/345"));
    }
    SUBCASE("inserting 0 slides the top row") {
        auto [y, s] = combinatorial_R(parse_rect_tableau("011/224/445"), 0, kappa);
        CHECK(y == 1);
        CHECK(s == parse_rect_tableau("001/224/445"));
    }
    SUBCASE("ground state absorbs 0") {
        for (int a = 1; a <= 3; ++a)
            for (int c = 1; c <= 3; ++c) {
                auto [y, s] = combinatorial_R(ground_state(a, c), 0, kappa);
                CHECK(y == 0);
                CHECK(s == ground_state(a, c));
            }
    }
}

TEST_CASE("combinatorial R rejects malformed input") {
    CHECK_THROWS_AS(combinatorial_R(RectTableau(2, 2, {3, 1, 0, 2}), 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(combinatorial_R(ground_state(1, 1), 9, 3), std::invalid_argument);
}

TEST_CASE("local energy characterization") {
    const int kappa = 4;
    CHECK(local_energy(parse_rect_tableau("12/34"), 0) == 0);
    CHECK(local_energy(ground_state(2, 3), kappa) == 1);
    for (int c = 1; c <= 3; ++c) {
        CHECK(local_energy(ground_state(1, c), 0) == 0);
        CHECK(local_energy(ground_state(2, c), kappa) == 1);
    }
}

TEST_CASE("row-overflow energy for a width-three row tableau") {
    // H counts the cells beyond row max(a, r) of the product; inserting
    // row(young(12,34)) = 3 4 1 2 into young(134) overflows by one cell
    const Tableau b({{1, 3, 4}});
    const Tableau c({{1, 2}, {3, 4}});
    const Tableau prod = row_insert(b, row_word(c));
    std::size_t overflow = 0;
    for (std::size_t i = 2; i < prod.rows().size(); ++i) overflow += prod.rows()[i].size();
    CHECK(overflow == 1);
}

TEST_CASE("H agrees with the row-overflow definition on enumerated instances") {
    for (const auto& [kappa, a, c] : {std::tuple{2, 1, 3}, std::tuple{3, 2, 2}, std::tuple{4, 3, 1}}) {
        for (const RectTableau& t : enumerate_rect_tableaux(a, c, kappa))
            for (Letter x = 0; x <= kappa; ++x)
                CHECK(local_energy(t, x) == oracle::local_energy_by_product(t, x));
    }
}

TEST_CASE("R is a bijection with weight conservation and factorization") {
    for (const auto& [kappa, a, c] :
         {std::tuple{2, 1, 4}, std::tuple{2, 2, 3}, std::tuple{3, 2, 2}, std::tuple{4, 1, 2}}) {
        const auto space = enumerate_rect_tableaux(a, c, kappa);
        std::set<std::pair<Letter, std::vector<Letter>>> images;
        for (const RectTableau& t : space) {
            for (Letter x = 0; x <= kappa; ++x) {
                auto [y, s] = combinatorial_R(t, x, kappa);
                REQUIRE(s.is_semistandard());
                images.insert({y, s.entries()});
                // weight conservation
                auto before = t.letter_counts(kappa);
                ++before[x];
                auto after = s.letter_counts(kappa);
                ++after[y];
                CHECK(before == after);
                // (S <- y) = (x -> T), the factorization identity
                CHECK(row_insert(s.to_tableau(), y) == column_insert(t.to_tableau(), x));
            }
        }
        CHECK(images.size() == space.size() * (kappa + 1));
    }
}

TEST_CASE("lowest-tableau identities from the irreducibility proof") {
    for (const auto& [kappa, a, c] : {std::tuple{2, 1, 3}, std::tuple{3, 2, 2}, std::tuple{2, 2, 2}}) {
        const RectTableau v = lowest_state(a, c, kappa);
        for (const RectTableau& t : enumerate_rect_tableaux(a, c, kappa)) {
            RectTableau walk = t;
            for (Letter x : reverse_row_word(v.to_tableau())) combinatorial_R_inplace(walk, x);
            CHECK(walk == v);
            RectTableau back = v;
            for (Letter x : reverse_row_word(t.to_tableau())) combinatorial_R_inplace(back, x);
            CHECK(back == t);
        }
    }
}

TEST_CASE("count-vector carrier matches the dense path") {
    const int kappa = 3;
    auto rng = oracle::SmallRng(777);
    for (int c = 1; c <= 5; ++c) {
        RowCarrier fast(c, kappa);
        RectTableau dense = ground_state(1, c);
        for (int step = 0; step < 400; ++step) {
            const Letter x = static_cast<Letter>(rng.next() % (kappa + 1));
            CHECK(fast.energy(x) == local_energy(dense, x));
            const Letter fast_out = fast.step(x);
            const Letter dense_out = combinatorial_R_inplace(dense, x);
            CHECK(fast_out == dense_out);
            CHECK(fast.to_rect() == dense);
        }
    }
}

TEST_CASE("tableau text form round-trips") {
    for (const std::string text : {"011/234", "0", "0011", "012/123/234"}) {
        const RectTableau t = parse_rect_tableau(text);
        CHECK(to_text(t) == text);
    }
    CHECK_THROWS(parse_rect_tableau("21/13"));
    CHECK_THROWS(parse_rect_tableau("01/0"));
}
