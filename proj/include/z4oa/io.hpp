#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "z4oa/enumerators.hpp"
#include "z4oa/gray.hpp"
#include "z4oa/oa.hpp"
#include "z4oa/ring.hpp"
#include "z4oa/verify.hpp"
#include "z4oa/z4.hpp"

namespace z4oa {

using Json = nlohmann::ordered_json;

// Raised on malformed input with a "<source>:<line>: <reason>" message.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// "Z<n>" (2 <= n <= 16), "Z<a>xZ<b>", or "R8".
FiniteRing parse_ring_spec(const std::string& spec);

// Matrix files: one generator per line, space-separated symbols; blank lines
// and lines starting with '#' are ignored; all rows must share one length.
std::vector<Word> parse_z4_matrix(std::istream& in, const std::string& source);
std::vector<Word> parse_ring_matrix(std::istream& in, const std::string& source,
                                    const FiniteRing& ring);

// Binary code files: one word per line as a run of 0/1 characters.
std::vector<Word> parse_binary_code(std::istream& in, const std::string& source);

// Array files: a header line "f=<int>", then space-separated symbol rows.
OaArray parse_oa_file(std::istream& in, const std::string& source);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// --- JSON / TSV emission -------------------------------------------------------
// Exact integers are serialized as decimal strings; key order is fixed.

Json enumerator_to_json(const Enumerator& e);
Json oa_report_to_json(const OaReport& r);
Json theorem_report_to_json(const TheoremReport& r);
Json sweep_to_json(const SweepResult& s);
Json pair_witness_to_json(const PairWitness& w);
Json pair_table_to_json(const PairTable& t);
PairWitness pair_witness_from_json(const Json& j);
PairTable pair_table_from_json(const Json& j);

std::string reports_to_tsv(const std::vector<TheoremReport>& reports);

// Coverage grid over all t <= t' <= 2t+1 with t <= n_max, one row per pair,
// found rows carrying their witness; bound violations appended as comments.
std::string pair_table_to_tsv(const PairTable& t);

std::string matrix_to_text(const std::vector<Word>& rows);
std::string binary_code_to_text(const BinaryCode& c);

}  // namespace z4oa
