#include "z4oa/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace z4oa {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Yields trimmed content lines; blank lines and '#' comments are skipped.
struct LineReader {
    std::istream& in;
    const std::string& source;
    int lineno = 0;

    bool next(std::string& line) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            line = trimmed(raw);
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    }

    ParseError error(const std::string& msg) const {
        return ParseError(source + ":" + std::to_string(lineno) + ": " + msg);
    }
};

int parse_symbol(const LineReader& reader, const std::string& token, int bound,
                 const std::string& what) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(token, &consumed);
    } catch (const std::exception&) {
        throw reader.error("expected " + what + ", got '" + token + "'");
    }
    if (consumed != token.size() || value < 0 || value >= bound)
        throw reader.error("expected " + what + ", got '" + token + "'");
    return value;
}

std::vector<Word> parse_matrix_lines(std::istream& in, const std::string& source,
                                     int bound, const std::string& what) {
    LineReader reader{in, source};
    std::vector<Word> rows;
    std::string line;
    while (reader.next(line)) {
        std::istringstream ls(line);
        Word row;
        std::string token;
        while (ls >> token)
            row.push_back(
                static_cast<Symbol>(parse_symbol(reader, token, bound, what)));
        if (!rows.empty() && row.size() != rows.front().size())
            throw reader.error("row has " + std::to_string(row.size()) +
                               " entries, expected " +
                               std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError(source + ":" + std::to_string(reader.lineno) +
                         ": no rows found");
    return rows;
}

std::string sanitize_tsv(std::string s) {
    for (char& c : s)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    return s;
}

}  // namespace

FiniteRing parse_ring_spec(const std::string& spec) {
    try {
        if (spec == "R8") return make_r8();
        if (!spec.empty() && spec[0] == 'Z') {
            std::size_t x = spec.find('x');
            if (x == std::string::npos) {
                std::size_t consumed = 0;
                int n = std::stoi(spec.substr(1), &consumed);
                if (consumed + 1 != spec.size())
                    throw std::invalid_argument("trailing characters");
                return make_zn(n);
            }
            std::string left = spec.substr(0, x), right = spec.substr(x + 1);
            if (left.size() < 2 || right.size() < 2 || left[0] != 'Z' ||
                right[0] != 'Z')
                throw std::invalid_argument("expected Z<a>xZ<b>");
            std::size_t ca = 0, cb = 0;
            int a = std::stoi(left.substr(1), &ca);
            int b = std::stoi(right.substr(1), &cb);
            if (ca + 1 != left.size() || cb + 1 != right.size())
                throw std::invalid_argument("trailing characters");
            return make_product(make_zn(a), make_zn(b));
        }
        throw std::invalid_argument("unrecognized form");
    } catch (const std::exception& e) {
        throw ParseError("ring spec '" + spec +
                         "': expected Z<n> (2..16), Z<a>xZ<b>, or R8 (" +
                         e.what() + ")");
    }
}

std::vector<Word> parse_z4_matrix(std::istream& in, const std::string& source) {
    std::vector<Word> rows = parse_matrix_lines(in, source, 4, "a digit 0-3");
    if (rows.front().size() > 32)
        throw ParseError(source + ": rows longer than 32 are not supported");
    return rows;
}

std::vector<Word> parse_ring_matrix(std::istream& in, const std::string& source,
                                    const FiniteRing& ring) {
    return parse_matrix_lines(in, source, ring.size,
                              "an element id 0-" + std::to_string(ring.size - 1));
}

std::vector<Word> parse_binary_code(std::istream& in, const std::string& source) {
    LineReader reader{in, source};
    std::vector<Word> rows;
    std::string line;
    while (reader.next(line)) {
        Word row;
        for (char c : line) {
            if (c != '0' && c != '1')
                throw reader.error(std::string("expected a run of 0/1, got '") +
                                   c + "'");
            row.push_back(static_cast<Symbol>(c - '0'));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw reader.error("word has " + std::to_string(row.size()) +
                               " bits, expected " +
                               std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(source + ": no words found");
    if (rows.front().size() > 64)
        throw ParseError(source + ": words longer than 64 are not supported");
    return rows;
}

OaArray parse_oa_file(std::istream& in, const std::string& source) {
    LineReader reader{in, source};
    std::string line;
    if (!reader.next(line)) throw ParseError(source + ": missing f=<int> header");
    if (line.rfind("f=", 0) != 0) throw reader.error("expected f=<int> header");
    int f = parse_symbol(reader, line.substr(2), 257, "f=<int> with 2 <= f <= 256");
    if (f < 2) throw reader.error("alphabet size must be at least 2");
    std::vector<Word> rows;
    while (reader.next(line)) {
        std::istringstream ls(line);
        Word row;
        std::string token;
        while (ls >> token)
            row.push_back(static_cast<Symbol>(parse_symbol(
                reader, token, f, "a symbol below f=" + std::to_string(f))));
        if (!rows.empty() && row.size() != rows.front().size())
            throw reader.error("row has " + std::to_string(row.size()) +
                               " entries, expected " +
                               std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(source + ": array has no rows");
    return make_array(rows, f);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content;
    if (!out) throw std::runtime_error(path + ": write failed");
}

Json enumerator_to_json(const Enumerator& e) {
    Json coeffs = Json::array();
    for (const BigInt& c : e.coefficients) coeffs.push_back(c.str());
    return Json{{"coefficients", coeffs}, {"scale", e.scale.str()}};
}

Json oa_report_to_json(const OaReport& r) {
    Json j{{"strength", r.strength}, {"index", r.index}};
    if (r.failure) {
        j["failure"] = Json{{"columns", r.failure->columns},
                            {"tuple", Json::array()},
                            {"count", r.failure->count}};
        for (Symbol s : r.failure->tuple)
            j["failure"]["tuple"].push_back(static_cast<int>(s));
    } else {
        j["failure"] = nullptr;
    }
    return j;
}

Json theorem_report_to_json(const TheoremReport& r) {
    return Json{{"theorem", r.theorem}, {"instance", r.instance},
                {"lhs", r.lhs},         {"rhs", r.rhs},
                {"verdict", verdict_name(r.verdict)}, {"detail", r.detail}};
}

Json sweep_to_json(const SweepResult& s) {
    Json reports = Json::array();
    for (const TheoremReport& r : s.reports)
        reports.push_back(theorem_report_to_json(r));
    return Json{{"codes_checked", s.codes_checked},
                {"failures", s.failures()},
                {"reports", reports}};
}

Json pair_witness_to_json(const PairWitness& w) {
    Json gens = Json::array();
    for (const Word& g : w.generators) {
        Json row = Json::array();
        for (Symbol s : g) row.push_back(static_cast<int>(s));
        gens.push_back(row);
    }
    return Json{{"t", w.t},   {"t_prime", w.t_prime},
                {"n", w.n},   {"k1", w.k1},
                {"k2", w.k2}, {"seed", std::to_string(w.seed)},
                {"generators", gens}};
}

Json pair_table_to_json(const PairTable& t) {
    Json pairs = Json::array();
    for (const auto& [key, w] : t.pairs) pairs.push_back(pair_witness_to_json(w));
    return Json{{"n_max", t.n_max},
                {"samples_per_shape", t.samples_per_shape},
                {"seed", std::to_string(t.seed)},
                {"exhaustive_n", t.exhaustive_n},
                {"codes_examined", t.codes_examined},
                {"pairs", pairs},
                {"bound_violations", t.bound_violations}};
}

PairWitness pair_witness_from_json(const Json& j) {
    PairWitness w;
    w.t = j.at("t").get<int>();
    w.t_prime = j.at("t_prime").get<int>();
    w.n = j.at("n").get<int>();
    w.k1 = j.at("k1").get<int>();
    w.k2 = j.at("k2").get<int>();
    w.seed = std::stoull(j.at("seed").get<std::string>());
    for (const Json& row : j.at("generators")) {
        Word g;
        for (const Json& v : row) g.push_back(static_cast<Symbol>(v.get<int>()));
        w.generators.push_back(std::move(g));
    }
    return w;
}

PairTable pair_table_from_json(const Json& j) {
    PairTable t;
    t.n_max = j.at("n_max").get<int>();
    t.samples_per_shape = j.at("samples_per_shape").get<int>();
    t.seed = std::stoull(j.at("seed").get<std::string>());
    t.exhaustive_n = j.at("exhaustive_n").get<int>();
    t.codes_examined = j.at("codes_examined").get<std::uint64_t>();
    for (const Json& p : j.at("pairs")) {
        PairWitness w = pair_witness_from_json(p);
        t.pairs.emplace(std::make_pair(w.t, w.t_prime), std::move(w));
    }
    for (const Json& v : j.at("bound_violations"))
        t.bound_violations.push_back(v.get<std::string>());
    return t;
}

std::string reports_to_tsv(const std::vector<TheoremReport>& reports) {
    std::string out = "theorem\tinstance\tlhs\trhs\tverdict\tdetail\n";
    for (const TheoremReport& r : reports) {
        out += sanitize_tsv(r.theorem) + "\t" + sanitize_tsv(r.instance) + "\t" +
               std::to_string(r.lhs) + "\t" + std::to_string(r.rhs) + "\t" +
               verdict_name(r.verdict) + "\t" + sanitize_tsv(r.detail) + "\n";
    }
    return out;
}

std::string pair_table_to_tsv(const PairTable& t) {
    std::string out =
        "# strength pairs: n_max=" + std::to_string(t.n_max) +
        " samples_per_shape=" + std::to_string(t.samples_per_shape) +
        " seed=" + std::to_string(t.seed) +
        " exhaustive_n=" + std::to_string(t.exhaustive_n) +
        " codes_examined=" + std::to_string(t.codes_examined) + "\n";
    out += "t\tt_prime\tstatus\tn\tk1\tk2\tseed\tgenerators\n";
    auto emit = [&out](const std::pair<int, int>& key, const PairWitness* w) {
        out += std::to_string(key.first) + "\t" + std::to_string(key.second);
        if (w) {
            std::string gens;
            for (std::size_t i = 0; i < w->generators.size(); ++i) {
                if (i) gens += " ";
                gens += word_to_string(w->generators[i]);
            }
            out += "\tfound\t" + std::to_string(w->n) + "\t" +
                   std::to_string(w->k1) + "\t" + std::to_string(w->k2) + "\t" +
                   std::to_string(w->seed) + "\t" + gens + "\n";
        } else {
            out += "\tnot_found\t-\t-\t-\t-\t-\n";
        }
    };
    for (int t0 = 0; t0 <= t.n_max; ++t0)
        for (int t1 = t0; t1 <= 2 * t0 + 1; ++t1) {
            auto it = t.pairs.find({t0, t1});
            emit({t0, t1}, it == t.pairs.end() ? nullptr : &it->second);
        }
    // Anything recorded outside the grid (never expected) still gets a row.
    for (const auto& [key, w] : t.pairs)
        if (key.first > t.n_max || key.second > 2 * key.first + 1 ||
            key.second < key.first)
            emit(key, &w);
    for (const std::string& v : t.bound_violations)
        out += "# bound violation: " + sanitize_tsv(v) + "\n";
    return out;
}

std::string matrix_to_text(const std::vector<Word>& rows) {
    std::string out;
    for (const Word& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(static_cast<int>(row[i]));
        }
        out += "\n";
    }
    return out;
}

std::string binary_code_to_text(const BinaryCode& c) {
    std::string out;
    for (const Word& w : unpacked_words(c)) {
        for (Symbol s : w) out += static_cast<char>('0' + s);
        out += "\n";
    }
    return out;
}

}  // namespace z4oa
