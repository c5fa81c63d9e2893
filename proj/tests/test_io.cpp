#include "doctest.h"

#include <cstdio>
#include <sstream>

#include "z4oa/io.hpp"

using namespace z4oa;

TEST_CASE("parse_ring_spec accepts the documented grammar") {
    CHECK(parse_ring_spec("Z4").name == "Z4");
    CHECK(parse_ring_spec("Z16").size == 16);
    CHECK(parse_ring_spec("R8").size == 8);
    CHECK(parse_ring_spec("Z2xZ3").size == 6);
    CHECK(parse_ring_spec("Z4xZ4").size == 16);

    CHECK_THROWS_AS(parse_ring_spec("Z1"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Z17"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Q8"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Z4x"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec(""), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("ZZ"), ParseError);
}

TEST_CASE("parse_z4_matrix reads rows, skips blanks and comments") {
    std::istringstream in("# generator matrix\n1 1 0\n\n2 0 2\n");
    std::vector<Word> rows = parse_z4_matrix(in, "test");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == Word{1, 1, 0});
    CHECK(rows[1] == Word{2, 0, 2});
}

TEST_CASE("parse_z4_matrix rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_z4_matrix(in, "test"), ParseError);
    };
    reject("1 4\n");        // symbol out of range
    reject("1 x\n");        // not a number
    reject("1 1\n1\n");     // ragged
    reject("");             // empty matrix
    std::string wide;
    for (int i = 0; i < 33; ++i) wide += "1 ";
    reject(wide + "\n");    // longer than the packing limit
}

TEST_CASE("parse_ring_matrix validates ids against the ring") {
    FiniteRing r8 = parse_ring_spec("R8");
    std::istringstream good("0 7\n4 1\n");
    std::vector<Word> rows = parse_ring_matrix(good, "test", r8);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == Word{4, 1});

    std::istringstream bad("0 8\n");
    CHECK_THROWS_AS(parse_ring_matrix(bad, "test", r8), ParseError);
}

TEST_CASE("parse_binary_code reads 0/1 runs") {
    std::istringstream in("# image\n0000\n0101\n1111\n1010\n");
    std::vector<Word> rows = parse_binary_code(in, "test");
    REQUIRE(rows.size() == 4);
    CHECK(rows[1] == Word{0, 1, 0, 1});

    std::istringstream bad("0102\n");
    CHECK_THROWS_AS(parse_binary_code(bad, "test"), ParseError);
    std::istringstream ragged("00\n000\n");
    CHECK_THROWS_AS(parse_binary_code(ragged, "test"), ParseError);
}

TEST_CASE("parse_oa_file requires the f= header") {
    std::istringstream in("f=4\n0 0\n1 1\n2 2\n3 3\n");
    OaArray a = parse_oa_file(in, "test");
    CHECK(a.alphabet == 4);
    CHECK(a.rows == 4);
    CHECK(a.cols == 2);
    CHECK(a.at(3, 1) == 3);

    std::istringstream missing("0 0\n1 1\n");
    CHECK_THROWS_AS(parse_oa_file(missing, "test"), ParseError);
    std::istringstream huge("f=300\n0 0\n");
    CHECK_THROWS_AS(parse_oa_file(huge, "test"), ParseError);
    std::istringstream tiny("f=1\n0\n");
    CHECK_THROWS_AS(parse_oa_file(tiny, "test"), ParseError);
    std::istringstream overflow("f=2\n0 2\n");
    CHECK_THROWS_AS(parse_oa_file(overflow, "test"), ParseError);
    std::istringstream empty("f=2\n");
    CHECK_THROWS_AS(parse_oa_file(empty, "test"), ParseError);
}

TEST_CASE("matrix_to_text round-trips through parse_z4_matrix") {
    std::vector<Word> rows{{1, 0, 3}, {0, 2, 2}};
    std::string text = matrix_to_text(rows);
    std::istringstream in(text);
    CHECK(parse_z4_matrix(in, "round-trip") == rows);
}

TEST_CASE("binary_code_to_text round-trips through parse_binary_code") {
    BinaryCode c = binary_code_from_words({{0, 1, 1}, {1, 0, 0}}, 3);
    std::string text = binary_code_to_text(c);
    std::istringstream in(text);
    std::vector<Word> rows = parse_binary_code(in, "round-trip");
    BinaryCode back = binary_code_from_words(rows, 3);
    CHECK(back.words == c.words);
}

TEST_CASE("enumerator_to_json serializes exact integers as strings") {
    Enumerator e;
    e.coefficients = {BigInt(1), BigInt(0), BigInt("123456789012345678901234567890")};
    e.scale = 3;
    Json j = enumerator_to_json(e);
    CHECK(j["coefficients"][0] == "1");
    CHECK(j["coefficients"][2] == "123456789012345678901234567890");
    CHECK(j["scale"] == "3");
}

TEST_CASE("oa_report_to_json carries the failure witness") {
    OaArray a = make_array({{0, 0}, {1, 1}, {2, 2}, {3, 3}}, 4);
    Json j = oa_report_to_json(strength(a));
    CHECK(j["strength"] == 1);
    CHECK(j["index"] == 1);
    REQUIRE(!j["failure"].is_null());
    CHECK(j["failure"]["columns"] == Json::array({0, 1}));
    CHECK(j["failure"]["tuple"] == Json::array({0, 1}));
    CHECK(j["failure"]["count"] == 0);

    Json full = oa_report_to_json(strength(make_array({{0}, {1}}, 2)));
    CHECK(full["strength"] == 1);
    CHECK(full["failure"].is_null());
}

TEST_CASE("theorem reports serialize to JSON and TSV") {
    TheoremReport r;
    r.theorem = "demo_theorem";
    r.instance = "Z4 n=1\tgens";  // embedded tab must be sanitized in TSV
    r.lhs = 3;
    r.rhs = 3;
    r.verdict = Verdict::pass;
    r.detail = "line1\nline2";

    Json j = theorem_report_to_json(r);
    CHECK(j["theorem"] == "demo_theorem");
    CHECK(j["verdict"] == "pass");
    CHECK(j["lhs"] == 3);

    std::string tsv = reports_to_tsv({r});
    CHECK(tsv.find("demo_theorem") != std::string::npos);
    CHECK(tsv.find("line1 line2") != std::string::npos);
    CHECK(tsv.find('\t') != std::string::npos);          // column separators
    CHECK(tsv.find("n=1\tgens") == std::string::npos);  // no stray field tabs
}

TEST_CASE("pair tables round-trip through JSON") {
    PairTable t = search_pairs(2, 6, 42, 1);
    Json j = pair_table_to_json(t);
    PairTable back = pair_table_from_json(j);
    CHECK(back.n_max == t.n_max);
    CHECK(back.samples_per_shape == t.samples_per_shape);
    CHECK(back.seed == t.seed);
    CHECK(back.exhaustive_n == t.exhaustive_n);
    CHECK(back.codes_examined == t.codes_examined);
    REQUIRE(back.pairs.size() == t.pairs.size());
    for (const auto& [key, witness] : t.pairs) {
        REQUIRE(back.pairs.count(key) == 1);
        const PairWitness& b = back.pairs.at(key);
        CHECK(b.n == witness.n);
        CHECK(b.k1 == witness.k1);
        CHECK(b.k2 == witness.k2);
        CHECK(b.seed == witness.seed);
        CHECK(b.generators == witness.generators);
        CHECK(revalidate(b));
    }
}

TEST_CASE("pair witness seeds survive the full 64-bit range") {
    PairWitness w;
    w.n = 1;
    w.k1 = 1;
    w.k2 = 0;
    w.seed = UINT64_MAX;
    w.generators = {{1}};
    w.t = 1;
    w.t_prime = 2;
    PairWitness back = pair_witness_from_json(pair_witness_to_json(w));
    CHECK(back.seed == UINT64_MAX);
    CHECK(back.generators == w.generators);
}

TEST_CASE("pair_table_to_tsv covers the full t grid") {
    PairTable t = search_pairs(2, 6, 42, 1);
    std::string tsv = pair_table_to_tsv(t);
    CHECK(tsv.find("found") != std::string::npos);
    CHECK(tsv.find("not_found") != std::string::npos);
    // Every t in 0..n_max appears with t' up to 2t+1.
    CHECK(tsv.find("\n2\t5\t") != std::string::npos);
    CHECK(tsv.find("n_max=2") != std::string::npos);
}

TEST_CASE("sweep_to_json reports counts") {
    SweepResult s = sweep_all_codes(make_zn(6), 1);
    Json j = sweep_to_json(s);
    CHECK(j["codes_checked"] == 4);
    CHECK(j["failures"] == 0);
    CHECK(j["reports"].is_array());
}

TEST_CASE("read_file and write_file round-trip bytes") {
    std::string path = "io_test_scratch.txt";
    write_file(path, "alpha\nbeta\n");
    CHECK(read_file(path) == "alpha\nbeta\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("definitely_missing_file.xyz"), ParseError);
}
