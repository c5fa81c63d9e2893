#include "doctest.h"

#include <algorithm>
#include <random>

#include "test_oracles.hpp"
#include "z4oa/z4.hpp"

using namespace z4oa;

namespace {

std::vector<Word> sorted_unpacked(const Z4Code& c) {
    std::vector<Word> out = unpacked_words(c);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("packed SWAR arithmetic matches plain mod-4 arithmetic") {
    for (int n : {1, 2, 3}) {
        const std::uint64_t lo = z4_lo_mask(n);
        for (const Word& u : oracle::all_words(n, 4)) {
            PackedWord pu = z4_pack(u);
            CHECK(z4_unpack(pu, n) == u);
            CHECK(z4_hamming_weight(pu, lo) == oracle::hamming_weight(u));
            CHECK(z4_lee_weight(pu, lo) == oracle::lee_weight(u));
            CHECK(z4_unpack(z4_neg(pu, lo), n) == oracle::z4_scale(3, u));
            for (int s = 0; s < 4; ++s)
                CHECK(z4_unpack(z4_scale(pu, s, lo), n) == oracle::z4_scale(s, u));
            for (const Word& v : oracle::all_words(n, 4))
                CHECK(z4_unpack(z4_add(pu, z4_pack(v), lo), n) == oracle::z4_add(u, v));
        }
    }
}

TEST_CASE("packed arithmetic at full width n = 32") {
    std::mt19937_64 rng(7);
    const int n = 32;
    const std::uint64_t lo = z4_lo_mask(n);
    for (int trial = 0; trial < 200; ++trial) {
        Word u(n), v(n);
        for (int i = 0; i < n; ++i) {
            u[i] = static_cast<Symbol>(rng() & 3);
            v[i] = static_cast<Symbol>(rng() & 3);
        }
        PackedWord pu = z4_pack(u), pv = z4_pack(v);
        CHECK(z4_unpack(z4_add(pu, pv, lo), n) == oracle::z4_add(u, v));
        CHECK(z4_lee_weight(pu, lo) == oracle::lee_weight(u));
        CHECK(z4_hamming_weight(pu, lo) == oracle::hamming_weight(u));
    }
}

TEST_CASE("z4_pack rejects bad inputs") {
    CHECK_THROWS_AS(z4_pack(Word{}), std::invalid_argument);
    CHECK_THROWS_AS(z4_pack(Word(33, 0)), std::invalid_argument);
    CHECK_THROWS_AS(z4_pack(Word{4}), std::invalid_argument);
}

TEST_CASE("Lee weights and distances") {
    CHECK(lee_weight(Symbol{0}) == 0);
    CHECK(lee_weight(Symbol{1}) == 1);
    CHECK(lee_weight(Symbol{2}) == 2);
    CHECK(lee_weight(Symbol{3}) == 1);
    CHECK(lee_weight(Word{1, 2, 0, 3}) == 4);
    CHECK(lee_weight(Word{0, 0, 0, 0, 0}) == 0);

    CHECK(lee_distance(Word{1}, Word{3}) == 2);
    CHECK(lee_distance(Word{0, 0}, Word{2, 2}) == 4);
    CHECK(lee_distance(Word{1, 3, 2}, Word{1, 3, 2}) == 0);
    CHECK_THROWS_AS(lee_distance(Word{1}, Word{1, 2}), std::invalid_argument);

    // d_L(u, v) = w_L(u - v), exhaustively at n = 2.
    for (const Word& u : oracle::all_words(2, 4))
        for (const Word& v : oracle::all_words(2, 4)) {
            CHECK(lee_distance(u, v) == oracle::lee_distance(u, v));
            CHECK(lee_distance(u, v) == lee_distance(v, u));
        }
}

TEST_CASE("Hamming vs Lee weight sandwich w_H <= w_L <= 2 w_H") {
    for (const Word& u : oracle::all_words(3, 4)) {
        int wh = oracle::hamming_weight(u);
        int wl = lee_weight(u);
        CHECK(wh <= wl);
        CHECK(wl <= 2 * wh);
    }
}

TEST_CASE("z4_code_from_matrix spans the rows") {
    Z4Code diag = z4_code_from_matrix({{1, 1}}, 2);
    CHECK(sorted_unpacked(diag) == std::vector<Word>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});

    Z4Code twos = z4_code_from_matrix({{2, 0}, {0, 2}}, 2);
    CHECK(sorted_unpacked(twos) == std::vector<Word>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});

    Z4Code full = z4_code_from_matrix({{1, 0}, {0, 1}}, 2);
    CHECK(full.words.size() == 16);

    Z4Code zero = z4_code_from_matrix({}, 2);
    CHECK(zero.words == std::vector<PackedWord>{0});
}

TEST_CASE("spans agree with the coefficient-enumeration oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % 3);
        std::vector<Word> gens;
        for (int i = 0; i < k; ++i) {
            Word g(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) g[j] = static_cast<Symbol>(rng() & 3);
            gens.push_back(g);
        }
        CHECK(sorted_unpacked(z4_code_from_matrix(gens, n)) == oracle::z4_span(gens, n));
    }
}

TEST_CASE("z4_dual matches the brute-force oracle and Prop-2 sizing") {
    Z4Code diag = z4_code_from_matrix({{1, 1}}, 2);
    Z4Code dual = z4_dual(diag);
    CHECK(sorted_unpacked(dual) == std::vector<Word>{{0, 0}, {1, 3}, {2, 2}, {3, 1}});
    CHECK(sorted_unpacked(dual) == oracle::z4_dual(unpacked_words(diag), 2));
    CHECK(dual.words.size() * diag.words.size() == 16);

    Z4Code full = z4_code_from_matrix({{1, 0}, {0, 1}}, 2);
    CHECK(z4_dual(full).words == std::vector<PackedWord>{0});

    Z4Code twos = z4_code_from_matrix({{2, 0}, {0, 2}}, 2);
    CHECK(z4_dual(twos).words == twos.words);

    // Dual generators regenerate the dual.
    Z4Code again = z4_code_from_matrix(dual.generators, 2);
    CHECK(again.words == dual.words);

    CHECK_THROWS_AS(z4_dual(diag, 8), BudgetError);
}

TEST_CASE("double dual is the identity on Z4 codes") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        int k1 = static_cast<int>(rng() % (n + 1));
        int k2 = static_cast<int>(rng() % (n - k1 + 1));
        Z4Code c = random_z4_code(n, k1, k2, rng());
        CHECK(z4_dual(z4_dual(c)).words == c.words);
    }
}

TEST_CASE("minimum weights and the zero-code sentinels") {
    Z4Code dual_diag = z4_code_from_matrix({{1, 3}}, 2);
    CHECK(min_lee_weight(dual_diag) == 2);  // weights 2, 4, 2

    Z4Code twos = z4_code_from_matrix({{2, 0}, {0, 2}}, 2);
    CHECK(min_lee_weight(twos) == 2);
    CHECK(min_hamming_weight(twos) == 1);

    Z4Code zero = z4_code_from_matrix({}, 2);
    CHECK(min_lee_weight(zero) == 5);      // 2n + 1
    CHECK(min_hamming_weight(zero) == 3);  // n + 1

    // Linearity: minimum weight equals minimum pairwise distance.
    Z4Code diag = z4_code_from_matrix({{1, 1}}, 2);
    std::vector<Word> ws = unpacked_words(diag);
    int min_dist = 100;
    for (const Word& u : ws)
        for (const Word& v : ws)
            if (u != v) min_dist = std::min(min_dist, oracle::lee_distance(u, v));
    CHECK(min_dist == min_lee_weight(diag));
}

TEST_CASE("z4_type recovers (k1, k2)") {
    CHECK(z4_type(z4_code_from_matrix({{1, 1}}, 2)) == std::pair<int, int>{1, 0});
    CHECK(z4_type(z4_code_from_matrix({{2, 0}, {0, 2}}, 2)) == std::pair<int, int>{0, 2});
    CHECK(z4_type(z4_code_from_matrix({{1, 0}, {0, 1}}, 2)) == std::pair<int, int>{2, 0});
    CHECK(z4_type(z4_code_from_matrix({{1, 0}, {0, 2}}, 2)) == std::pair<int, int>{1, 1});
    CHECK(z4_type(z4_code_from_matrix({}, 2)) == std::pair<int, int>{0, 0});
}

TEST_CASE("standard form assembles [I A B; 0 2I 2C]") {
    Z4StandardForm sf;
    sf.n = 4;
    sf.k1 = 1;
    sf.k2 = 1;
    sf.a = {{3}};        // k1 x k2
    sf.b = {{1, 2}};     // k1 x k3
    sf.c = {{1, 0}};     // k2 x k3 over Z2
    REQUIRE(sf.k3() == 2);

    std::vector<Word> g = standard_form_matrix(sf);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == Word{1, 3, 1, 2});
    CHECK(g[1] == Word{0, 2, 2, 0});

    Z4Code c = standard_form_code(sf);
    CHECK(c.words.size() == 8);  // 4^1 * 2^1
    REQUIRE(c.type_exponents.has_value());
    CHECK(*c.type_exponents == std::pair<int, int>{1, 1});
    CHECK(z4_type(c) == std::pair<int, int>{1, 1});
}

TEST_CASE("standard_form_dual equals the brute-force dual") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        int k1 = static_cast<int>(rng() % (n + 1));
        int k2 = static_cast<int>(rng() % (n - k1 + 1));
        Z4StandardForm sf = random_standard_form(n, k1, k2, rng());
        Z4Code c = standard_form_code(sf);
        Z4Code d_fast = standard_form_dual(sf);
        Z4Code d_scan = z4_dual(c);
        CHECK(d_fast.words == d_scan.words);
        REQUIRE(d_fast.type_exponents.has_value());
        CHECK(*d_fast.type_exponents == std::pair<int, int>{sf.k3(), k2});
    }
}

TEST_CASE("random_z4_code is deterministic in the seed with the promised size") {
    Z4Code a = random_z4_code(4, 1, 1, 99);
    Z4Code b = random_z4_code(4, 1, 1, 99);
    Z4Code c = random_z4_code(4, 1, 1, 100);
    CHECK(a.words == b.words);
    CHECK(a.generators == b.generators);
    CHECK(a.words.size() == 8);
    CHECK(c.words.size() == 8);

    CHECK(random_z4_code(3, 3, 0, 5).words.size() == 64);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Z4Code forced = random_z4_code(2, 0, 2, seed);
        CHECK(sorted_unpacked(forced) ==
              std::vector<Word>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
    }

    CHECK_THROWS_AS(random_z4_code(2, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("z4_generating_set regenerates the span") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        int k1 = static_cast<int>(rng() % (n + 1));
        int k2 = static_cast<int>(rng() % (n - k1 + 1));
        Z4Code c = random_z4_code(n, k1, k2, rng());
        std::vector<Word> gens = z4_generating_set(c.words, n);
        CHECK(z4_code_from_matrix(gens, n).words == c.words);
    }
}
