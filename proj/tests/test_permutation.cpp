#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "redword/permutation.hpp"

using namespace redword;

TEST_CASE("construction validates one-line input") {
    CHECK(Permutation({2, 5, 4, 3, 1}).size() == 5);
    CHECK(Permutation({1, 2, 3}) == Permutation::identity(3));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 4, 2}), std::invalid_argument);
}

TEST_CASE("text round-trips") {
    CHECK(Permutation::parse("25431") == Permutation({2, 5, 4, 3, 1}));
    CHECK(Permutation::parse("2,5,4,3,1") == Permutation({2, 5, 4, 3, 1}));
    CHECK(Permutation::parse("25431").str() == "2,5,4,3,1");
    CHECK(Permutation::parse("25431").compact_str() == "25431");
    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("12345678910"), std::invalid_argument);
    // Digit form is reserved for n <= 9; larger alphabets need commas.
    std::string big = "10,9,8,7,6,5,4,3,2,1";
    CHECK(Permutation::parse(big).size() == 10);
    CHECK(Permutation::parse(big).str() == big);
}

TEST_CASE("inversions and length") {
    const Permutation w = Permutation::parse("25431");
    const std::vector<InversionPair> expected = {{2, 1}, {3, 1}, {4, 1}, {4, 3},
                                                 {5, 1}, {5, 3}, {5, 4}};
    CHECK(inversions(w) == expected);
    CHECK(length(w) == 7);
    CHECK(inversions(Permutation::identity(4)).empty());
    CHECK(inversions(Permutation::parse("321")) ==
          std::vector<InversionPair>{{2, 1}, {3, 1}, {3, 2}});
    CHECK(length(Permutation::identity(5)) == 0);
    CHECK(length(Permutation::reversal(6)) == 15);
}

TEST_CASE("descent sets") {
    CHECK(descent_set(Permutation::parse("25431")) == std::vector<int>{2, 3, 4});
    CHECK(descent_set(Permutation::identity(5)).empty());
    CHECK(descent_set(Permutation::parse("4321")) == std::vector<int>{1, 2, 3});
}

TEST_CASE("321-triples") {
    const std::vector<Triple321> expected = {{1, 3, 4}, {1, 3, 5}, {1, 3, 6},
                                             {2, 3, 4}, {2, 3, 5}, {2, 3, 6}};
    CHECK(triples_321(Permutation::parse("456312")) == expected);
    CHECK(triples_321(Permutation::parse("312")).empty());
    CHECK(triples_321(Permutation::reversal(6)).size() == 20);
    CHECK(triples_321(Permutation::parse("25431")) ==
          std::vector<Triple321>{{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {3, 4, 5}});
}

TEST_CASE("rothe diagram cells") {
    const std::vector<RotheCell> expected = {{1, 1}, {2, 1}, {2, 3}, {2, 4},
                                             {3, 1}, {3, 3}, {4, 1}};
    CHECK(rothe_diagram(Permutation::parse("25431")) == expected);
    CHECK(rothe_diagram(Permutation::identity(3)).empty());

    std::vector<RotheCell> staircase;
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; i + j <= 5; ++j) staircase.push_back({i, j});
    }
    std::sort(staircase.begin(), staircase.end());
    CHECK(rothe_diagram(Permutation::parse("54321")) == staircase);
}

TEST_CASE("diagram size and hook transitivity, exhaustive small n") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& w : oracles::all_permutations(n)) {
            const auto cells = rothe_diagram(w);
            REQUIRE(static_cast<int>(cells.size()) == length(w));
            REQUIRE(cells.size() == inversions(w).size());
            std::set<std::pair<int, int>> cell_set;
            for (const auto& c : cells) cell_set.emplace(c.row, c.col);
            for (const auto& a : cells) {
                for (const auto& b : cells) {
                    // a's column names the value sitting at b's row: the two
                    // cells are the end cells of a hook whose corner must exist.
                    if (a.col != w(b.row)) continue;
                    REQUIRE(cell_set.count({a.row, b.col}) == 1);
                }
            }
        }
    }
}

TEST_CASE("pattern containment") {
    CHECK(contains_pattern(Permutation::parse("456312"), Permutation::parse("321")));
    CHECK_FALSE(contains_pattern(Permutation::parse("312"), Permutation::parse("321")));
    // 25431 is unimodal, so it avoids 213; the brute-force oracle agrees.
    CHECK_FALSE(contains_pattern(Permutation::parse("25431"), Permutation::parse("213")));
    CHECK_FALSE(
        oracles::contains_pattern_brute(Permutation::parse("25431"), Permutation::parse("213")));
    CHECK_THROWS_AS(contains_pattern(Permutation::parse("21"), Permutation::parse("321")),
                    std::invalid_argument);
}

TEST_CASE("pattern containment matches the subset oracle") {
    std::mt19937_64 rng(20240817);
    const Permutation patterns[] = {Permutation::parse("321"), Permutation::parse("312"),
                                    Permutation::parse("213"), Permutation::parse("2143"),
                                    Permutation::parse("1234")};
    for (int trial = 0; trial < 200; ++trial) {
        const Permutation w = oracles::random_permutation(6, rng);
        for (const auto& p : patterns) {
            CHECK(contains_pattern(w, p) == oracles::contains_pattern_brute(w, p));
        }
    }
}

TEST_CASE("fully commutative means 321-avoiding") {
    CHECK(is_fully_commutative(Permutation::parse("312")));
    CHECK_FALSE(is_fully_commutative(Permutation::parse("456312")));
    CHECK(is_fully_commutative(Permutation::identity(4)));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : oracles::all_permutations(n)) {
            CHECK(is_fully_commutative(w) == triples_321(w).empty());
        }
    }
}

TEST_CASE("unimodal peaks") {
    CHECK(unimodal_peak(Permutation::parse("25431")) == 2);
    CHECK(unimodal_peak(Permutation::reversal(5)) == 1);
    CHECK_FALSE(unimodal_peak(Permutation::parse("456312")).has_value());
    CHECK(unimodal_peak(Permutation::identity(4)) == 4);
}

TEST_CASE("unimodal iff avoiding 312 and 213; counted by powers of two") {
    const Permutation p312 = Permutation::parse("312");
    const Permutation p213 = Permutation::parse("213");
    for (int n = 3; n <= 6; ++n) {
        long long count = 0;
        for (const auto& w : oracles::all_permutations(n)) {
            const bool avoids = !contains_pattern(w, p312) && !contains_pattern(w, p213);
            CHECK(unimodal_peak(w).has_value() == avoids);
            if (avoids) ++count;
        }
        CHECK(count == (1LL << (n - 1)));
    }
}

TEST_CASE("inverse") {
    CHECK(Permutation::parse("25431").inverse() == Permutation::parse("51432"));
    CHECK(Permutation::identity(5).inverse() == Permutation::identity(5));
    CHECK(Permutation::parse("4321").inverse() == Permutation::parse("4321"));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation w = oracles::random_permutation(8, rng);
        CHECK(w.inverse().inverse() == w);
        CHECK(w.compose(w.inverse()) == Permutation::identity(8));
        CHECK(w.inverse().compose(w) == Permutation::identity(8));
    }
}
