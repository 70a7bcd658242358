#include <doctest.h>

#include <algorithm>
#include <set>

#include "parkstat/words.hpp"

using namespace parkstat;

TEST_CASE("content") {
    CHECK(content({1, 1, 2, 2, 2, 6, 7, 7}) == WeakComposition{2, 3, 0, 0, 0, 1, 2});
    CHECK(content({1, 1, 1}) == WeakComposition{3});
    CHECK(content({2, 2, 4}) == WeakComposition{0, 2, 0, 1});
    CHECK(content({}) == WeakComposition{});
    CHECK_THROWS_AS(content({0, 1}), std::invalid_argument);
}

TEST_CASE("basic statistics") {
    CHECK(statistic({3, 2, 1}, BasicStat::inv) == 3);
    CHECK(statistic({2, 3, 6, 8, 4, 1, 7, 5, 9}, BasicStat::asc) == 5);
    CHECK(statistic({1, 3, 2}, BasicStat::pk) == 1);
    CHECK(statistic({3, 2, 1}, BasicStat::pk) == 0);
    CHECK(statistic({3, 2, 1}, BasicStat::dtop) == 5);
    CHECK(statistic({3, 2, 1}, BasicStat::maj) == 3);
    CHECK(statistic({1, 1, 2}, BasicStat::tie) == 1);
    CHECK(statistic({3, 1, 2}, BasicStat::sdes) == 0);
    CHECK(statistic({3, 1, 2}, BasicStat::sinv) == 1);  // the pair (1,3): 3 = 2+1

    // empty word: every statistic is 0
    for (auto s : {BasicStat::inv, BasicStat::des, BasicStat::asc, BasicStat::tie, BasicStat::maj,
                   BasicStat::sdes, BasicStat::sinv, BasicStat::bdes, BasicStat::binv,
                   BasicStat::dtop, BasicStat::itop, BasicStat::pk, BasicStat::hz})
        CHECK(statistic(Word{}, s) == 0);
}

TEST_CASE("statistic id registry") {
    CHECK(statistic({3, 2, 1}, StatisticId::parse("inv")) == 3);
    CHECK_THROWS_AS(StatisticId::parse("frobulate"), std::invalid_argument);

    Digraph d(3, {{1, 2}});
    CHECK(statistic({1, 2, 3}, StatisticId::graphical_inv(d)) == 1);
    CHECK_THROWS_AS(Digraph(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(statistic({1, 4}, StatisticId::graphical_inv(d)), std::invalid_argument);
}

TEST_CASE("graphical statistic counts pairs whose values form an edge") {
    Digraph d(3, {{1, 2}});
    // (2,1,3): pairs (w_i,w_j): (2,1),(2,3),(1,3) - none is the edge 1->2
    CHECK(statistic({2, 1, 3}, StatisticId::graphical_inv(d)) == 0);
    // (1,2,3): pairs (1,2),(1,3),(2,3) - exactly (1,2)
    CHECK(statistic({1, 2, 3}, StatisticId::graphical_inv(d)) == 1);
    CHECK(statistic({1, 2, 3}, StatisticId::graphical_des(d)) == 1);
    CHECK(statistic({1, 3, 2}, StatisticId::graphical_des(d)) == 0);
}

TEST_CASE("sdes/bdes split descents, sinv/binv split inversions") {
    for_each_word(4, 4, [](const Word& w) {
        CHECK(statistic(w, BasicStat::inv) ==
              statistic(w, BasicStat::sinv) + statistic(w, BasicStat::binv));
        CHECK(statistic(w, BasicStat::des) ==
              statistic(w, BasicStat::sdes) + statistic(w, BasicStat::bdes));
    });
}

TEST_CASE("sinv(sigma) = des(sigma inverse) on permutations") {
    for_each_permutation(5, [](const Word& w) {
        CHECK(statistic(w, BasicStat::sinv) == statistic(inverse_permutation(w), BasicStat::des));
        CHECK(statistic(w, BasicStat::inv) == statistic(inverse_permutation(w), BasicStat::inv));
    });
}

TEST_CASE("pattern_count") {
    CHECK(pattern_count({1, 3, 2}, {1, 3, 2}, false) == 1);
    CHECK(pattern_count({2, 1, 4, 3}, {2, 1}, true) == 2);
    CHECK_THROWS_AS(pattern_count({1}, {2, 1}, false), std::invalid_argument);

    // pattern 21 recovers inv / des
    for_each_word(4, 3, [](const Word& w) {
        CHECK(pattern_count(w, {2, 1}, false) == statistic(w, BasicStat::inv));
        CHECK(pattern_count(w, {2, 1}, true) == statistic(w, BasicStat::des));
    });

    // horizon total over S_3: #132 + #231 summed = C(3,3)*3!/3 = 2
    long long total = 0;
    for_each_permutation(3, [&](const Word& w) {
        total += pattern_count(w, {1, 3, 2}, false) + pattern_count(w, {2, 3, 1}, false);
    });
    CHECK(total == 2);

    // hz and pk agree with the pattern pair on permutations
    for_each_permutation(5, [](const Word& w) {
        CHECK(statistic(w, BasicStat::hz) ==
              pattern_count(w, {1, 3, 2}, false) + pattern_count(w, {2, 3, 1}, false));
        CHECK(statistic(w, BasicStat::pk) ==
              pattern_count(w, {1, 3, 2}, true) + pattern_count(w, {2, 3, 1}, true));
    });
}

TEST_CASE("orbit") {
    CHECK(orbit({1, 1, 2}) == std::vector<Word>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(orbit({1, 2, 3}).size() == 6);
    CHECK(orbit({2, 1, 1}).front() == Word{1, 1, 2});

    Word w{1, 1, 2, 2, 3};
    auto orb = orbit(w);
    CHECK(static_cast<int>(orb.size()) == multinomial(content(w)).get_si());
    CHECK(std::is_sorted(orb.begin(), orb.end()));
}

TEST_CASE("compositions and weak compositions") {
    auto c3 = compositions(3);
    CHECK(c3 == std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    CHECK(weak_compositions(2, 2).size() == 3);
    CHECK(compositions(5).size() == 16);
    CHECK(compositions(0) == std::vector<Composition>{{}});
    CHECK(compositions(4, 2) == std::vector<Composition>{{1, 3}, {2, 2}, {3, 1}});
    for (auto& v : {weak_compositions(3, 2), weak_compositions(0, 0)})
        CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("cayley membership and enumeration") {
    CHECK(is_cayley({2, 2, 4, 5, 2, 1, 4, 3, 5}));
    CHECK_FALSE(is_cayley({1, 3}));
    CHECK_FALSE(is_cayley({2, 2, 4, 5, 2, 4, 3, 5, 5}));  // 1 missing
    CHECK(is_cayley({}));

    CHECK(enumerate_cayley(3).size() == 13);
    for (int n = 0; n <= 6; ++n) {
        // brute-force cross-check against filtering [n]^n
        long long brute = 0;
        for_each_word(n, std::max(n, 1), [&](const Word& w) {
            if (is_cayley(w)) ++brute;
        });
        if (n == 0) brute = 1;
        auto cs = enumerate_cayley(n);
        CHECK(static_cast<long long>(cs.size()) == brute);
        CHECK(fubini_number(n) == BigInt(static_cast<long>(brute)));
        CHECK(std::is_sorted(cs.begin(), cs.end()));
        for (const auto& w : cs) CHECK(is_cayley(w));
    }
}

TEST_CASE("permutation helpers") {
    CHECK(is_permutation({2, 3, 1}));
    CHECK_FALSE(is_permutation({2, 2, 1}));
    CHECK(inverse_permutation({2, 3, 6, 8, 4, 1, 7, 5, 9}) == Word{6, 1, 2, 5, 8, 3, 7, 4, 9});
    CHECK(act({2, 1, 3}, {5, 6, 7}) == Word{6, 5, 7});
    CHECK(enumerate_permutations(4).size() == 24);
}
