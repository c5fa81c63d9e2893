#include "doctest.h"

#include "z4oa/common.hpp"

using namespace z4oa;

TEST_CASE("pack_word and unpack_word round-trip with coordinate 0 leading") {
    Word w{1, 0, 3, 2};
    PackedWord p = pack_word(w, 4);
    CHECK(p == ((1 * 4 + 0) * 4 + 3) * 4 + 2);
    CHECK(unpack_word(p, 4, 4) == w);

    // Integer order on packed words equals lexicographic order on symbols.
    CHECK(pack_word({0, 3}, 4) < pack_word({1, 0}, 4));
    CHECK(pack_word({1, 1, 1}, 2) == 0b111);
}

TEST_CASE("pack_word handles every small alphabet") {
    for (int alphabet : {2, 3, 4, 6, 8, 16}) {
        Word w;
        for (int i = 0; i < 5; ++i)
            w.push_back(static_cast<Symbol>((i * 7 + 3) % alphabet));
        CHECK(unpack_word(pack_word(w, alphabet), 5, alphabet) == w);
    }
}

TEST_CASE("checked_pow computes and enforces budgets") {
    CHECK(checked_pow(4, 3, 1000, "test") == 64);
    CHECK(checked_pow(2, 0, 1, "test") == 1);
    CHECK(checked_pow(10, 6, 1'000'000, "test") == 1'000'000);
    CHECK_THROWS_AS(checked_pow(10, 7, 1'000'000, "test"), BudgetError);
    CHECK_THROWS_AS(checked_pow(2, 64, UINT64_MAX / 2, "test"), BudgetError);
}

TEST_CASE("mix64 is deterministic and spreads nearby seeds") {
    CHECK(mix64(42) == mix64(42));
    CHECK(mix64(0) != mix64(1));
    CHECK(mix64(1) != mix64(2));
    // No tiny cycle on iterated application.
    std::uint64_t x = 7;
    for (int i = 0; i < 8; ++i) x = mix64(x);
    CHECK(x != 7);
}

TEST_CASE("word_to_string formats tuples") {
    CHECK(word_to_string({1, 0, 3}) == "(1,0,3)");
    CHECK(word_to_string({}) == "()");
    CHECK(word_to_string({2}) == "(2)");
}
