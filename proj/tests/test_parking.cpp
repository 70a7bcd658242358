#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "parkstat/parking.hpp"

using namespace parkstat;

TEST_CASE("park") {
    auto out = park({1, 1, 2, 2, 2, 6, 7, 7});
    REQUIRE(out.has_value());
    CHECK(out->car_to_spot == Word{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(out->spot_to_car == Word{1, 2, 3, 4, 5, 6, 7, 8});

    auto ones = park({1, 1, 1, 1});
    REQUIRE(ones.has_value());
    CHECK(ones->car_to_spot == Word{1, 2, 3, 4});

    CHECK_FALSE(park({2, 2}).has_value());
    CHECK(park(Word{}).has_value());
    CHECK_THROWS_AS(park({3, 1}), std::invalid_argument);  // entry > n
}

TEST_CASE("is_parking_function") {
    CHECK(is_parking_function({3, 1, 2}));
    CHECK_FALSE(is_parking_function({3, 3, 1}));
    CHECK(is_parking_function(Word{}));
    long long count = 0;
    for_each_word(3, 3, [&](const Word& w) {
        if (is_parking_function(w)) ++count;
    });
    CHECK(count == 16);
}

TEST_CASE("enumerate_pf") {
    CHECK(enumerate_pf(2) == std::vector<Word>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(enumerate_pf(4).size() == 125);
    CHECK(enumerate_pf(0).size() == 1);
    for (int n = 1; n <= 5; ++n) {
        auto pfs = enumerate_pf(n);
        CHECK(BigInt(static_cast<long>(pfs.size())) == int_pow(n + 1, n - 1));
        CHECK(std::is_sorted(pfs.begin(), pfs.end()));
        // matches plain filtration of [n]^n
        std::vector<Word> brute;
        for_each_word(n, n, [&](const Word& w) {
            if (is_parking_function(w)) brute.push_back(w);
        });
        CHECK(pfs == brute);
    }
}

TEST_CASE("upf membership and enumeration") {
    CHECK(is_upf({1, 1, 2}));
    CHECK_FALSE(is_upf({1, 2, 1}));  // car 3 is displaced by 2
    CHECK_FALSE(is_upf({1, 1, 1}));
    CHECK(is_upf({1, 1, 3}));
    CHECK(enumerate_upf(3).size() == 13);
    for (int n = 0; n <= 6; ++n) {
        auto upfs = enumerate_upf(n);
        CHECK(BigInt(static_cast<long>(upfs.size())) == fubini_number(n));
        // UPF is contained in PF
        for (const auto& w : upfs) CHECK(is_parking_function(w));
    }
}

TEST_CASE("block structure") {
    auto bs = block_structure({1, 1, 2});
    REQUIRE(bs.blocks.size() == 1);
    CHECK(bs.sizes == Composition{3});
    CHECK(bs.blocks[0].start_value == 1);
    CHECK(bs.blocks[0].positions == std::vector<int>{1, 2, 3});

    auto bs2 = block_structure({1, 2, 3});
    CHECK(bs2.sizes == Composition{1, 1, 1});

    auto bs3 = block_structure({2, 2, 6, 8, 3, 1, 6, 5, 8});
    CHECK(bs3.sizes == Composition{1, 3, 1, 2, 2});

    CHECK_THROWS_AS(block_structure({1, 1, 1}), std::invalid_argument);

    // the number of UPFs with block sizes c is the multinomial of c
    std::map<Composition, long long> census;
    for (const auto& w : enumerate_upf(5)) census[block_structure(w).sizes]++;
    for (const auto& [c, cnt] : census) CHECK(BigInt(static_cast<long>(cnt)) == multinomial(c));
    CHECK(census.size() == compositions(5).size());
}

TEST_CASE("psi") {
    CHECK(psi({1, 1, 2}) == Word{1, 1, 1});
    CHECK(psi({1, 2, 3}) == Word{1, 2, 3});
    CHECK(psi_inverse({2, 2, 4, 5, 2, 1, 4, 3, 5}) == Word{2, 2, 6, 8, 3, 1, 6, 5, 8});
    CHECK(psi({2, 2, 6, 8, 3, 1, 6, 5, 8}) == Word{2, 2, 4, 5, 2, 1, 4, 3, 5});
    CHECK_THROWS_AS(psi({1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(psi_inverse({1, 3, 3}), std::invalid_argument);

    // round trips + exact Inv-set preservation, exhaustively for n <= 6
    for (int n = 0; n <= 6; ++n) {
        auto upfs = enumerate_upf(n);
        std::set<Word> images;
        for (const auto& a : upfs) {
            Word w = psi(a);
            CHECK(is_cayley(w));
            CHECK(psi_inverse(w) == a);
            CHECK(inversion_set(w) == inversion_set(a));
            images.insert(w);
        }
        CHECK(images.size() == upfs.size());
        CHECK(images.size() == enumerate_cayley(n).size());
    }
}

TEST_CASE("eta") {
    CHECK(eta({2, 3, 6, 8, 4, 1, 7, 5, 9}, {2, 3, 6, 8}) == Word{2, 2, 4, 5, 2, 1, 4, 3, 5});
    CHECK(eta({1, 2, 3}, {}) == Word{1, 2, 3});
    CHECK_THROWS_AS(eta({1, 2, 3}, {5}), std::invalid_argument);
    CHECK_THROWS_AS(eta({3, 2, 1}, {1}), std::invalid_argument);  // Asc(sigma^{-1}) is empty

    auto [sigma, S] = eta_inverse({2, 2, 4, 5, 2, 1, 4, 3, 5});
    CHECK(sigma == Word{2, 3, 6, 8, 4, 1, 7, 5, 9});
    CHECK(S == std::set<int>{2, 3, 6, 8});

    // eta is a bijection P_n -> C_n with inv preserved, n <= 5
    for (int n = 1; n <= 5; ++n) {
        std::set<Word> images;
        long long domain = 0;
        for_each_permutation(n, [&](const Word& sig) {
            Word inv = inverse_permutation(sig);
            auto ascents = ascent_set(inv);
            int a = static_cast<int>(ascents.size());
            for (unsigned mask = 0; mask < (1u << a); ++mask) {
                std::set<int> s;
                for (int b = 0; b < a; ++b)
                    if (mask & (1u << b)) s.insert(ascents[b]);
                Word w = eta(sig, s);
                CHECK(is_cayley(w));
                // the inversion count is preserved and Inv(sigma) embeds in
                // Inv(w), so the inversion sets coincide
                CHECK(statistic(w, BasicStat::inv) == statistic(sig, BasicStat::inv));
                CHECK(inversion_set(w) == inversion_set(sig));
                auto [back_sigma, back_s] = eta_inverse(w);
                CHECK(back_sigma == sig);
                CHECK(back_s == s);
                images.insert(w);
                ++domain;
            }
        });
        CHECK(BigInt(static_cast<long>(domain)) == fubini_number(n));
        CHECK(images.size() == enumerate_cayley(n).size());
    }
}

TEST_CASE("pollak_reduce") {
    CHECK(pollak_reduce({3, 3}) == Word{1, 1});
    for (const auto& a : enumerate_pf(4)) CHECK(pollak_reduce(a) == a);
    CHECK_THROWS_AS(pollak_reduce({4, 1}), std::invalid_argument);

    // fibers over PF_n all have size n+1, for n <= 5
    for (int n = 1; n <= 5; ++n) {
        std::map<Word, long long> fiber;
        for_each_word(n, n + 1, [&](const Word& w) { fiber[pollak_reduce(w)]++; });
        CHECK(BigInt(static_cast<long>(fiber.size())) == int_pow(n + 1, n - 1));
        for (const auto& [a, cnt] : fiber) {
            CHECK(cnt == n + 1);
            CHECK(is_parking_function(a));
        }
    }

    // ties / small descents in position 1 correspond to residue classes of w1-w2
    int n = 4, m = n + 1;
    for_each_word(n, m, [&](const Word& w) {
        Word a = pollak_reduce(w);
        CHECK((a[0] == a[1]) == ((w[0] - w[1]) % m == 0));
        CHECK((a[0] == a[1] + 1) == (((w[0] - w[1]) % m + m) % m == 1));
    });
}

TEST_CASE("hess sequences") {
    auto hs = hess_sequences(3);
    CHECK(hs == std::vector<WeakComposition>{{1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {3, 0, 0}});
    CHECK(BigInt(static_cast<long>(hess_sequences(5).size())) == catalan_number(5));
    CHECK_FALSE(is_hess({0, 3, 0}));
    CHECK(is_hess({2, 0, 1}));

    // exactly the PF contents: w in [n]^n is a PF iff its padded content is Hess
    for (int n = 1; n <= 5; ++n) {
        std::set<WeakComposition> pf_contents;
        for_each_word(n, n, [&](const Word& w) {
            CHECK(is_parking_function(w) == is_hess(pad_content(content(w), n)));
            if (is_parking_function(w)) pf_contents.insert(pad_content(content(w), n));
        });
        auto hess = hess_sequences(n);
        CHECK(pf_contents == std::set<WeakComposition>(hess.begin(), hess.end()));
    }
}

TEST_CASE("area") {
    CHECK(area({1, 1, 2, 2, 2, 6, 7, 7}) == 8);
    CHECK(area({1, 2, 3, 4}) == 0);
    CHECK(area({1, 1, 1, 1}) == 6);  // C(4,2)
    CHECK_THROWS_AS(area({3, 3, 1}), std::invalid_argument);

    // constant on S_n-orbits
    for (const auto& a : enumerate_pf(4))
        for (const auto& u : orbit(a))
            if (is_parking_function(u)) CHECK(area(u) == area(a));
}

TEST_CASE("ties in position 1 count") {
    // |{alpha in PF_n : alpha_1 = alpha_2}| = (n+1)^{n-2}
    for (int n = 2; n <= 6; ++n) {
        long long ties1 = 0;
        for_each_pf(n, [&](const Word& a) {
            if (a[0] == a[1]) ++ties1;
        });
        CHECK(BigInt(static_cast<long>(ties1)) == int_pow(n + 1, n - 2));
    }
}
