#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_oracles.hpp"
#include "z4oa/ring.hpp"

using namespace z4oa;

namespace {

std::vector<Word> sorted_unpacked(const RingCode& c) {
    std::vector<Word> out = unpacked_words(c);
    std::sort(out.begin(), out.end());
    return out;
}

Ideal ideal_of(std::initializer_list<Symbol> members) {
    Ideal i;
    i.members = members;
    return i;
}

}  // namespace

TEST_CASE("make_zn matches plain modular arithmetic") {
    for (int n = 2; n <= 16; ++n) {
        FiniteRing r = make_zn(n);
        CHECK(r.size == n);
        CHECK(r.zero == 0);
        CHECK(r.one == 1);
        for (int a = 0; a < n; ++a) {
            CHECK(r.neg(static_cast<Symbol>(a)) == (n - a) % n);
            CHECK(r.element_names[a] == std::to_string(a));
            for (int b = 0; b < n; ++b) {
                CHECK(r.add(static_cast<Symbol>(a), static_cast<Symbol>(b)) == (a + b) % n);
                CHECK(r.mul(static_cast<Symbol>(a), static_cast<Symbol>(b)) == (a * b) % n);
            }
        }
        CHECK_NOTHROW(validate_ring(r));
    }
    CHECK_THROWS_AS(make_zn(1), std::invalid_argument);
    CHECK_THROWS_AS(make_zn(17), std::invalid_argument);
}

TEST_CASE("product rings multiply componentwise") {
    FiniteRing z2 = make_zn(2), z3 = make_zn(3);
    FiniteRing p = make_product(z2, z3);
    CHECK(p.size == 6);
    CHECK_NOTHROW(validate_ring(p));
    // id = a*|R2| + b for the pair (a, b).
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 3; ++b1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 3; ++b2) {
                    Symbol x = static_cast<Symbol>(a1 * 3 + b1);
                    Symbol y = static_cast<Symbol>(a2 * 3 + b2);
                    CHECK(p.add(x, y) == ((a1 + a2) % 2) * 3 + (b1 + b2) % 3);
                    CHECK(p.mul(x, y) == ((a1 * a2) % 2) * 3 + (b1 * b2) % 3);
                }
    CHECK(p.one == 1 * 3 + 1);
}

TEST_CASE("Z2 x Z3 is isomorphic to Z6 (exhaustive bijection search)") {
    CHECK(oracle::rings_isomorphic(make_product(make_zn(2), make_zn(3)), make_zn(6)));
    // Sanity on the oracle itself: Z4 is not isomorphic to Z2 x Z2.
    CHECK(!oracle::rings_isomorphic(make_product(make_zn(2), make_zn(2)), make_zn(4)));
}

TEST_CASE("R8 relations: 2a = 0, a^2 = 0, char 4") {
    FiniteRing r = make_r8();
    CHECK(r.size == 8);
    CHECK_NOTHROW(validate_ring(r));
    Symbol one = r.one, a = 0;
    // Locate a by name; ids encode x + y*a as 2x + y.
    for (int i = 0; i < 8; ++i)
        if (r.element_names[i] == "a") a = static_cast<Symbol>(i);
    CHECK(a == 1);
    CHECK(r.element_names[r.one] == "1");
    Symbol two = r.add(one, one);
    CHECK(r.element_names[two] == "2");
    CHECK(r.mul(a, a) == r.zero);
    CHECK(r.add(a, a) == r.zero);                      // 2a = 0
    CHECK(r.mul(two, a) == r.zero);                    // 2 * a = 0
    CHECK(r.add(two, two) == r.zero);                  // char 4
    CHECK(r.add(r.add(one, one), r.add(one, one)) == r.zero);
    CHECK(r.element_names[r.add(two, a)] == "2+a");
    CHECK(r.mul(r.add(two, a), r.add(two, a)) == r.zero);  // (2+a)^2 = 0
}

TEST_CASE("R8 has exactly six ideals") {
    FiniteRing r = make_r8();
    std::vector<Ideal> ideals = enumerate_ideals(r);
    REQUIRE(ideals.size() == 6);
    // ids: 0, a=1, 2=4, 2+a=5; J = {0, a, 2, 2+a}.
    std::set<std::vector<Symbol>> got;
    for (const Ideal& i : ideals) got.insert(i.members);
    CHECK(got.count({0}) == 1);
    CHECK(got.count({0, 1}) == 1);           // (a)
    CHECK(got.count({0, 4}) == 1);           // (2)
    CHECK(got.count({0, 5}) == 1);           // (2+a)
    CHECK(got.count({0, 1, 4, 5}) == 1);     // J
    CHECK(got.count({0, 1, 2, 3, 4, 5, 6, 7}) == 1);
    for (const Ideal& i : ideals) CHECK(is_ideal(r, i.members));
}

TEST_CASE("annihilators over R8: J is its own annihilator") {
    FiniteRing r = make_r8();
    Ideal j = ideal_of({0, 1, 4, 5});
    Ideal ann = annihilator(r, j);
    CHECK(ann.members == j.members);
    CHECK(ann.members.size() * j.members.size() == 16);  // 4 * 4 != |R| = 8

    // Every other ideal satisfies |ann(I)| * |I| = |R|.
    int violators = 0;
    for (const Ideal& i : enumerate_ideals(r)) {
        std::size_t product = annihilator(r, i).members.size() * i.members.size();
        if (product != static_cast<std::size_t>(r.size)) {
            ++violators;
            CHECK(i.members == j.members);
        }
    }
    CHECK(violators == 1);
}

TEST_CASE("annihilator of the zero ideal is the whole ring") {
    for (const FiniteRing& r : {make_zn(6), make_zn(4), make_r8()}) {
        Ideal zero = ideal_of({0});
        CHECK(annihilator(r, zero).members.size() == static_cast<std::size_t>(r.size));
        Ideal whole;
        for (int i = 0; i < r.size; ++i) whole.members.push_back(static_cast<Symbol>(i));
        CHECK(annihilator(r, whole).members == std::vector<Symbol>{0});
    }
}

TEST_CASE("ideal enumeration of Z_n matches divisor count") {
    // Ideals of Z_n are (d) for d | n.
    auto divisors = [](int n) {
        int c = 0;
        for (int d = 1; d <= n; ++d) c += n % d == 0;
        return c;
    };
    for (int n : {2, 3, 4, 6, 8, 12, 16})
        CHECK(enumerate_ideals(make_zn(n)).size() == static_cast<std::size_t>(divisors(n)));
}

TEST_CASE("property (+) holds for every supported test ring") {
    for (int n = 2; n <= 16; ++n) CHECK(has_property_plus(make_zn(n)).holds);
    CHECK(has_property_plus(make_product(make_zn(2), make_zn(3))).holds);
    CHECK(has_property_plus(make_product(make_zn(4), make_zn(4))).holds);
    CHECK(has_property_plus(make_r8()).holds);
}

TEST_CASE("columns_independent over Z4") {
    FiniteRing z4 = make_zn(4);
    CHECK(!columns_independent(z4, {{2}}));       // 2 * 2 = 0
    CHECK(columns_independent(z4, {{1}}));
    CHECK(columns_independent(z4, {{1, 0}, {0, 1}}));
    CHECK(!columns_independent(z4, {{1, 1}}));    // c = (1, -1)
    CHECK_THROWS_AS(columns_independent(z4, {{1, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("row_space examples") {
    FiniteRing z4 = make_zn(4);
    CHECK(row_space(z4, {{1, 0}, {0, 1}}).words.size() == 16);
    RingCode two = row_space(z4, {{2, 0}});
    CHECK(sorted_unpacked(two) == std::vector<Word>{{0, 0}, {2, 0}});

    FiniteRing z6 = make_zn(6);
    CHECK(row_space(z6, {{2}, {3}}).words.size() == 6);  // 3 - 2 = 1 generates
}

TEST_CASE("check_property_star examples") {
    FiniteRing z4 = make_zn(4);
    CHECK(check_property_star(z4, {{1, 0}, {0, 1}}));
    CHECK(check_property_star(z4, {{1, 0}, {0, 1}, {1, 1}, {2, 3}}));
    CHECK(check_property_star(make_zn(6), {{5}}));
    // Dependent columns are a precondition violation, not a failure.
    CHECK_THROWS_AS(check_property_star(z4, {{2}}), std::invalid_argument);
}

TEST_CASE("ring_code_from_generators spans submodules") {
    FiniteRing z4 = make_zn(4);
    RingCode c1 = ring_code_from_generators(z4, 2, {{2, 0}, {0, 2}});
    CHECK(sorted_unpacked(c1) == std::vector<Word>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});

    RingCode c2 = ring_code_from_generators(z4, 2, {{1, 1}});
    CHECK(sorted_unpacked(c2) == std::vector<Word>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});

    FiniteRing r8 = make_r8();
    RingCode c3 = ring_code_from_generators(r8, 1, {{4}, {1}});  // {2, a}
    CHECK(sorted_unpacked(c3) == std::vector<Word>{{0}, {1}, {4}, {5}});

    RingCode zero = ring_code_from_generators(z4, 3, {});
    CHECK(zero.words == std::vector<PackedWord>{0});
    CHECK(min_hamming_weight(zero) == 4);  // sentinel n + 1

    CHECK_THROWS_AS(ring_code_from_generators(z4, 2, {{1}}), std::invalid_argument);
}

TEST_CASE("spans agree with the naive closure oracle") {
    FiniteRing r8 = make_r8();
    FiniteRing z6 = make_zn(6);
    std::vector<std::pair<const FiniteRing*, std::vector<Word>>> cases = {
        {&r8, {{1, 4}}},
        {&r8, {{2, 0}, {0, 6}}},
        {&z6, {{2, 3}}},
        {&z6, {{4, 2}, {3, 3}}},
    };
    for (const auto& [ring, gens] : cases) {
        RingCode c = ring_code_from_generators(*ring, 2, gens);
        CHECK(sorted_unpacked(c) == oracle::ring_span(*ring, gens, 2));
    }
}

TEST_CASE("dual_code agrees with the brute-force oracle") {
    FiniteRing z4 = make_zn(4);
    RingCode diag = ring_code_from_generators(z4, 2, {{1, 1}});
    RingCode dual = dual_code(diag);
    CHECK(sorted_unpacked(dual) == std::vector<Word>{{0, 0}, {1, 3}, {2, 2}, {3, 1}});
    CHECK(sorted_unpacked(dual) == oracle::ring_dual(z4, unpacked_words(diag), 2));

    RingCode twos = ring_code_from_generators(z4, 2, {{2, 0}, {0, 2}});
    CHECK(sorted_unpacked(dual_code(twos)) == sorted_unpacked(twos));  // self-dual

    FiniteRing r8 = make_r8();
    RingCode j = ring_code_from_generators(r8, 1, {{4}, {1}});
    RingCode jd = dual_code(j);
    CHECK(sorted_unpacked(jd) == sorted_unpacked(j));  // equal to its annihilator
    CHECK(jd.words.size() == 4);                       // not |R|/|C| = 2
    CHECK(sorted_unpacked(jd) == oracle::ring_dual(r8, unpacked_words(j), 1));
}

TEST_CASE("double dual contains the code; equality over Z_n") {
    FiniteRing z4 = make_zn(4);
    FiniteRing z6 = make_zn(6);
    FiniteRing r8 = make_r8();

    auto contains = [](const RingCode& big, const RingCode& small) {
        return std::includes(big.words.begin(), big.words.end(),
                             small.words.begin(), small.words.end());
    };

    for (const auto& gens : std::vector<std::vector<Word>>{{{1, 1}}, {{2, 0}}, {{1, 2}, {0, 2}}}) {
        RingCode c = ring_code_from_generators(z4, 2, gens);
        CHECK(dual_code(dual_code(c)).words == c.words);
    }
    for (const auto& gens : std::vector<std::vector<Word>>{{{2}}, {{3}}, {{2, 3}}}) {
        int n = static_cast<int>(gens.front().size());
        RingCode c = ring_code_from_generators(z6, n, gens);
        CHECK(dual_code(dual_code(c)).words == c.words);
    }

    // Over R8 the double dual can be strictly larger: C = {0, 2} has
    // dual J, and dual(J) = J again.
    RingCode two = ring_code_from_generators(r8, 1, {{4}});
    RingCode dd = dual_code(dual_code(two));
    CHECK(two.words.size() == 2);
    CHECK(dd.words.size() == 4);
    CHECK(contains(dd, two));
}

TEST_CASE("generating_set reproduces the span it came from") {
    FiniteRing r8 = make_r8();
    RingCode c = ring_code_from_generators(r8, 2, {{1, 4}, {0, 2}});
    std::vector<Word> gens = generating_set(r8, 2, c.words);
    RingCode rebuilt = ring_code_from_generators(r8, 2, gens);
    CHECK(rebuilt.words == c.words);
    CHECK(!gens.empty());
    CHECK(gens.size() < c.words.size());

    // The zero code regenerates from no generators.
    RingCode zero = ring_code_from_generators(r8, 1, {});
    CHECK(generating_set(r8, 1, zero.words).empty());
}

TEST_CASE("min_hamming_weight of ring codes") {
    FiniteRing z4 = make_zn(4);
    CHECK(min_hamming_weight(ring_code_from_generators(z4, 2, {{2, 0}, {0, 2}})) == 1);
    CHECK(min_hamming_weight(ring_code_from_generators(z4, 2, {{1, 1}})) == 2);
}

TEST_CASE("to_array lays codewords out as rows") {
    FiniteRing z4 = make_zn(4);
    RingCode c = ring_code_from_generators(z4, 2, {{1, 1}});
    OaArray a = to_array(c);
    CHECK(a.rows == 4);
    CHECK(a.cols == 2);
    CHECK(a.alphabet == 4);
    CHECK(a.at(1, 0) == 1);
    CHECK(a.at(3, 1) == 3);
}
