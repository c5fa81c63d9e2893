#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "z4oa/enumerators.hpp"
#include "z4oa/gray.hpp"
#include "z4oa/io.hpp"
#include "z4oa/oa.hpp"
#include "z4oa/ring.hpp"
#include "z4oa/verify.hpp"
#include "z4oa/z4.hpp"

namespace {

using namespace z4oa;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::vector<Word> load_z4_matrix(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream in(text);
    return parse_z4_matrix(in, path);
}

std::string words_line(const std::vector<Word>& words) {
    std::string s;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) s += " ";
        s += word_to_string(words[i]);
    }
    return s.empty() ? "-" : s;
}

int cmd_analyze(const std::string& path, const std::string& format,
                const std::string& out) {
    std::vector<Word> rows = load_z4_matrix(path);
    int n = static_cast<int>(rows.front().size());
    Z4Code c = z4_code_from_matrix(rows, n);
    auto [k1, k2] = z4_type(c);
    Z4Code dual = z4_dual(c);
    BinaryCode img = gray_image(c);
    int str_c = strength(to_array(c)).strength;
    int str_img = strength(to_array(img)).strength;
    bool linear_image = is_linear_binary(img);
    Enumerator hwe = hamming_weight_enumerator(c);
    Enumerator lwe = lee_weight_enumerator(c);

    if (format == "json") {
        Json j{{"n", n},
               {"size", c.words.size()},
               {"k1", k1},
               {"k2", k2},
               {"min_hamming_weight", min_hamming_weight(c)},
               {"min_lee_weight", min_lee_weight(c)},
               {"strength", str_c},
               {"gray_strength", str_img},
               {"gray_image_linear", linear_image},
               {"hamming_enumerator", enumerator_to_json(hwe)},
               {"lee_enumerator", enumerator_to_json(lwe)},
               {"dual_size", dual.words.size()},
               {"dual_min_hamming_weight", min_hamming_weight(dual)},
               {"dual_min_lee_weight", min_lee_weight(dual)},
               {"dual_generators", Json::array()}};
        for (const Word& g : dual.generators) {
            Json row = Json::array();
            for (Symbol s : g) row.push_back(static_cast<int>(s));
            j["dual_generators"].push_back(row);
        }
        emit(j.dump(2) + "\n", out);
    } else {
        std::string s;
        s += "n\t" + std::to_string(n) + "\n";
        s += "size\t" + std::to_string(c.words.size()) + "\n";
        s += "type\t(" + std::to_string(k1) + "," + std::to_string(k2) + ")\n";
        s += "min_hamming_weight\t" + std::to_string(min_hamming_weight(c)) + "\n";
        s += "min_lee_weight\t" + std::to_string(min_lee_weight(c)) + "\n";
        s += "strength\t" + std::to_string(str_c) + "\n";
        s += "gray_strength\t" + std::to_string(str_img) + "\n";
        s += std::string("gray_image_linear\t") + (linear_image ? "true" : "false") + "\n";
        s += "hamming_enumerator\t" + enumerator_to_string(hwe) + "\n";
        s += "lee_enumerator\t" + enumerator_to_string(lwe) + "\n";
        s += "dual_size\t" + std::to_string(dual.words.size()) + "\n";
        s += "dual_generators\t" + words_line(dual.generators) + "\n";
        s += "dual_min_hamming_weight\t" + std::to_string(min_hamming_weight(dual)) + "\n";
        s += "dual_min_lee_weight\t" + std::to_string(min_lee_weight(dual)) + "\n";
        emit(s, out);
    }
    return 0;
}

int cmd_verify(const std::string& ring_spec, int max_n, int gen_max, int samples,
               int random_n, std::uint64_t seed, bool all_codes,
               const std::string& format, const std::string& out) {
    FiniteRing ring = parse_ring_spec(ring_spec);
    int n_max = max_n > 0 ? max_n : (is_z4(ring) ? 3 : 2);

    SweepResult total;
    auto merge = [&total](SweepResult&& part) {
        total.codes_checked += part.codes_checked;
        for (TheoremReport& r : part.reports)
            total.reports.push_back(std::move(r));
    };
    merge(exhaustive_small_sweep(ring, n_max, gen_max));
    if (all_codes) merge(sweep_all_codes(ring, n_max));
    if (is_z4(ring) && samples > 0)
        merge(random_z4_sweep(samples, random_n, seed));

    int hypothesis_flags = 0;
    for (const TheoremReport& r : total.reports)
        if (r.verdict == Verdict::hypothesis_not_met) ++hypothesis_flags;

    if (format == "json") {
        Json j = sweep_to_json(total);
        Json wrapped{{"ring", ring.name},
                     {"n_max", n_max},
                     {"hypothesis_flags", hypothesis_flags}};
        wrapped.update(j);
        emit(wrapped.dump(2) + "\n", out);
    } else {
        std::string s = "# ring=" + ring.name + " n_max=" + std::to_string(n_max) +
                        " codes_checked=" + std::to_string(total.codes_checked) +
                        " failures=" + std::to_string(total.failures()) +
                        " hypothesis_flags=" + std::to_string(hypothesis_flags) +
                        "\n";
        s += reports_to_tsv(total.reports);
        emit(s, out);
    }
    return total.failures() == 0 ? 0 : 1;
}

int cmd_search_pairs(int max_n, int samples, std::uint64_t seed, int exhaustive_n,
                     const std::string& format, const std::string& out) {
    PairTable table = search_pairs(max_n, samples, seed, exhaustive_n);
    if (format == "json")
        emit(pair_table_to_json(table).dump(2) + "\n", out);
    else
        emit(pair_table_to_tsv(table), out);
    return table.bound_violations.empty() ? 0 : 1;
}

int cmd_oa(const std::string& path, const std::string& format,
           const std::string& out) {
    std::string text = read_file(path);
    std::istringstream in(text);
    OaArray a = parse_oa_file(in, path);
    OaReport r = strength(a);
    if (format == "json") {
        Json j{{"rows", a.rows}, {"cols", a.cols}, {"alphabet", a.alphabet}};
        j.update(oa_report_to_json(r));
        emit(j.dump(2) + "\n", out);
    } else {
        std::string s;
        s += "rows\t" + std::to_string(a.rows) + "\n";
        s += "cols\t" + std::to_string(a.cols) + "\n";
        s += "alphabet\t" + std::to_string(a.alphabet) + "\n";
        s += "strength\t" + std::to_string(r.strength) + "\n";
        s += "index\t" + std::to_string(r.index) + "\n";
        if (r.failure) {
            std::string cols;
            for (std::size_t i = 0; i < r.failure->columns.size(); ++i) {
                if (i) cols += " ";
                cols += std::to_string(r.failure->columns[i]);
            }
            s += "failure_columns\t" + cols + "\n";
            s += "failure_tuple\t" + word_to_string(r.failure->tuple) + "\n";
            s += "failure_count\t" + std::to_string(r.failure->count) + "\n";
        } else {
            s += "failure_columns\t-\n";
        }
        emit(s, out);
    }
    return 0;
}

int cmd_gray(const std::string& path, const std::string& format,
             const std::string& out) {
    std::vector<Word> rows = load_z4_matrix(path);
    Z4Code c = z4_code_from_matrix(rows, static_cast<int>(rows.front().size()));
    BinaryCode img = gray_image(c);
    bool linear = is_linear_binary(img);
    if (format == "json") {
        Json words = Json::array();
        for (const Word& w : unpacked_words(img)) {
            std::string bits;
            for (Symbol s : w) bits += static_cast<char>('0' + s);
            words.push_back(bits);
        }
        Json j{{"n", c.n},
               {"m", img.m},
               {"size", img.words.size()},
               {"linear", linear},
               {"words", words}};
        emit(j.dump(2) + "\n", out);
    } else {
        std::string s = "# gray image: n=" + std::to_string(c.n) +
                        " m=" + std::to_string(img.m) +
                        " size=" + std::to_string(img.words.size()) +
                        " linear=" + (linear ? "true" : "false") + "\n";
        s += binary_code_to_text(img);
        emit(s, out);
    }
    return 0;
}

int cmd_dual(const std::string& path, const std::string& ring_spec,
             const std::string& format, const std::string& out) {
    FiniteRing ring = parse_ring_spec(ring_spec);
    if (is_z4(ring)) {
        std::vector<Word> rows = load_z4_matrix(path);
        Z4Code c = z4_code_from_matrix(rows, static_cast<int>(rows.front().size()));
        Z4Code d = z4_dual(c);
        if (format == "json") {
            Json gens = Json::array();
            for (const Word& g : d.generators) {
                Json row = Json::array();
                for (Symbol s : g) row.push_back(static_cast<int>(s));
                gens.push_back(row);
            }
            Json j{{"ring", ring.name},
                   {"n", c.n},
                   {"size", c.words.size()},
                   {"dual_size", d.words.size()},
                   {"dual_min_hamming_weight", min_hamming_weight(d)},
                   {"dual_min_lee_weight", min_lee_weight(d)},
                   {"dual_generators", gens}};
            emit(j.dump(2) + "\n", out);
        } else {
            std::string s = "# dual over Z4: n=" + std::to_string(c.n) +
                            " |C|=" + std::to_string(c.words.size()) +
                            " |C_dual|=" + std::to_string(d.words.size()) +
                            " w_H=" + std::to_string(min_hamming_weight(d)) +
                            " w_L=" + std::to_string(min_lee_weight(d)) + "\n";
            s += matrix_to_text(d.generators);
            emit(s, out);
        }
        return 0;
    }
    std::string text = read_file(path);
    std::istringstream in(text);
    std::vector<Word> rows = parse_ring_matrix(in, path, ring);
    RingCode c =
        ring_code_from_generators(ring, static_cast<int>(rows.front().size()), rows);
    RingCode d = dual_code(c);
    std::vector<Word> gens = generating_set(ring, d.n, d.words);
    if (format == "json") {
        Json jgens = Json::array();
        for (const Word& g : gens) {
            Json row = Json::array();
            for (Symbol s : g) row.push_back(static_cast<int>(s));
            jgens.push_back(row);
        }
        Json j{{"ring", ring.name},
               {"n", c.n},
               {"size", c.words.size()},
               {"dual_size", d.words.size()},
               {"dual_min_hamming_weight", min_hamming_weight(d)},
               {"dual_generators", jgens}};
        emit(j.dump(2) + "\n", out);
    } else {
        std::string s = "# dual over " + ring.name + ": n=" + std::to_string(c.n) +
                        " |C|=" + std::to_string(c.words.size()) +
                        " |C_dual|=" + std::to_string(d.words.size()) +
                        " w_H=" + std::to_string(min_hamming_weight(d)) + "\n";
        s += matrix_to_text(gens);
        emit(s, out);
    }
    return 0;
}

int cmd_ring_check(const std::string& ring_spec, const std::string& format,
                   const std::string& out) {
    FiniteRing ring = parse_ring_spec(ring_spec);  // constructors validate axioms
    std::vector<Ideal> ideals = enumerate_ideals(ring);
    PropertyPlusResult plus = has_property_plus(ring);

    auto ideal_names = [&ring](const Ideal& ideal) {
        std::string s = "{";
        for (std::size_t i = 0; i < ideal.members.size(); ++i) {
            if (i) s += ",";
            s += ring.element_names[ideal.members[i]];
        }
        return s + "}";
    };

    bool hypothesis = true;
    std::vector<std::pair<const Ideal*, Ideal>> rows;
    for (const Ideal& ideal : ideals) {
        Ideal ann = annihilator(ring, ideal);
        if (ann.members.size() * ideal.members.size() !=
            static_cast<std::size_t>(ring.size))
            hypothesis = false;
        rows.emplace_back(&ideal, std::move(ann));
    }

    if (format == "json") {
        Json jideals = Json::array();
        for (const auto& [ideal, ann] : rows) {
            jideals.push_back(
                Json{{"members", ideal_names(*ideal)},
                     {"annihilator", ideal_names(ann)},
                     {"size", ideal->members.size()},
                     {"annihilator_size", ann.members.size()},
                     {"ann_size_matches_quotient",
                      ann.members.size() * ideal->members.size() ==
                          static_cast<std::size_t>(ring.size)}});
        }
        Json j{{"ring", ring.name},
               {"size", ring.size},
               {"property_plus", plus.holds},
               {"ann_hypothesis", hypothesis},
               {"ideals", jideals}};
        if (!plus.holds && plus.violating)
            j["property_plus_violation"] = ideal_names(*plus.violating);
        emit(j.dump(2) + "\n", out);
    } else {
        std::string s;
        s += "ring\t" + ring.name + "\n";
        s += "size\t" + std::to_string(ring.size) + "\n";
        s += std::string("property_plus\t") + (plus.holds ? "true" : "false") + "\n";
        if (!plus.holds && plus.violating)
            s += "property_plus_violation\t" + ideal_names(*plus.violating) + "\n";
        s += std::string("ann_hypothesis\t") + (hypothesis ? "true" : "false") + "\n";
        s += "ideal\tannihilator\t|I|\t|ann|\t|I|*|ann|==|R|\n";
        for (const auto& [ideal, ann] : rows) {
            bool ok = ann.members.size() * ideal->members.size() ==
                      static_cast<std::size_t>(ring.size);
            s += ideal_names(*ideal) + "\t" + ideal_names(ann) + "\t" +
                 std::to_string(ideal->members.size()) + "\t" +
                 std::to_string(ann.members.size()) + "\t" +
                 (ok ? "true" : "false") + "\n";
        }
        emit(s, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Workbench for linear codes over Z4 and small finite commutative "
        "rings: Gray images, enumerators, duals, orthogonal-array strength, "
        "and identity verification."};
    app.require_subcommand(1);

    std::string an_path, an_fmt = "tsv", an_out;
    auto* analyze =
        app.add_subcommand("analyze", "Analyze a Z4 code from a generator matrix");
    analyze->add_option("matrix", an_path, "generator matrix file (digits 0-3)")
        ->required();
    analyze->add_option("--format", an_fmt, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    analyze->add_option("--out", an_out, "write output to this file");

    std::string vf_ring = "Z4", vf_fmt = "tsv", vf_out;
    int vf_max_n = 0, vf_gen_max = 2, vf_samples = 50, vf_random_n = 5;
    std::uint64_t vf_seed = 1;
    bool vf_all_codes = false;
    auto* verify = app.add_subcommand(
        "verify", "Sweep codes over a ring and check the strength/dual identities");
    verify->add_option("--ring", vf_ring, "ring spec: Z<n>, Z<a>xZ<b>, or R8");
    verify->add_option("--max-n", vf_max_n,
                       "exhaustive sweep length bound (0 = per-ring default)");
    verify->add_option("--gen-max", vf_gen_max, "generators per code in the sweep");
    verify->add_option("--samples", vf_samples,
                       "random standard-form codes (Z4 only; 0 disables)");
    verify->add_option("--random-n", vf_random_n, "length bound for random codes");
    verify->add_option("--seed", vf_seed, "random sweep seed");
    verify->add_flag("--all-codes", vf_all_codes,
                     "also sweep every submodule up to max-n");
    verify->add_option("--format", vf_fmt)->check(CLI::IsMember({"tsv", "json"}));
    verify->add_option("--out", vf_out, "write output to this file");

    int sp_max_n = 4, sp_samples = 40, sp_exhaustive = 0;
    std::uint64_t sp_seed = 1;
    std::string sp_fmt = "tsv", sp_out;
    auto* pairs = app.add_subcommand(
        "search-pairs", "Search for attainable (Str(C), Str(C')) pairs");
    pairs->add_option("--max-n", sp_max_n, "largest code length");
    pairs->add_option("--samples", sp_samples, "random draws per (n, k1, k2) shape");
    pairs->add_option("--seed", sp_seed, "search seed");
    pairs->add_option("--exhaustive-n", sp_exhaustive,
                      "enumerate every standard form up to this length first");
    pairs->add_option("--format", sp_fmt)->check(CLI::IsMember({"tsv", "json"}));
    pairs->add_option("--out", sp_out, "write output to this file");

    std::string oa_path, oa_fmt = "tsv", oa_out;
    auto* oa = app.add_subcommand("oa", "Strength and index of a raw array");
    oa->add_option("array", oa_path, "array file with an f=<int> header")
        ->required();
    oa->add_option("--format", oa_fmt)->check(CLI::IsMember({"tsv", "json"}));
    oa->add_option("--out", oa_out, "write output to this file");

    std::string gr_path, gr_fmt = "tsv", gr_out;
    auto* gray = app.add_subcommand("gray", "Gray image of a Z4 code");
    gray->add_option("matrix", gr_path, "generator matrix file (digits 0-3)")
        ->required();
    gray->add_option("--format", gr_fmt)->check(CLI::IsMember({"tsv", "json"}));
    gray->add_option("--out", gr_out, "write output to this file");

    std::string du_path, du_ring = "Z4", du_fmt = "tsv", du_out;
    auto* dual = app.add_subcommand("dual", "Dual code of a generator matrix");
    dual->add_option("matrix", du_path, "generator matrix file")->required();
    dual->add_option("--ring", du_ring, "ring spec: Z<n>, Z<a>xZ<b>, or R8");
    dual->add_option("--format", du_fmt)->check(CLI::IsMember({"tsv", "json"}));
    dual->add_option("--out", du_out, "write output to this file");

    std::string rc_ring, rc_fmt = "tsv", rc_out;
    auto* ring_check =
        app.add_subcommand("ring-check", "Ideals, annihilators, and ring properties");
    ring_check->add_option("--ring", rc_ring, "ring spec: Z<n>, Z<a>xZ<b>, or R8")
        ->required();
    ring_check->add_option("--format", rc_fmt)
        ->check(CLI::IsMember({"tsv", "json"}));
    ring_check->add_option("--out", rc_out, "write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(an_path, an_fmt, an_out);
        if (*verify)
            return cmd_verify(vf_ring, vf_max_n, vf_gen_max, vf_samples,
                              vf_random_n, vf_seed, vf_all_codes, vf_fmt, vf_out);
        if (*pairs)
            return cmd_search_pairs(sp_max_n, sp_samples, sp_seed, sp_exhaustive,
                                    sp_fmt, sp_out);
        if (*oa) return cmd_oa(oa_path, oa_fmt, oa_out);
        if (*gray) return cmd_gray(gr_path, gr_fmt, gr_out);
        if (*dual) return cmd_dual(du_path, du_ring, du_fmt, du_out);
        if (*ring_check) return cmd_ring_check(rc_ring, rc_fmt, rc_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
