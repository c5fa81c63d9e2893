#include "z4oa/z4.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace z4oa {

namespace {

void check_length(int n) {
    if (n < 1 || n > 32)
        throw std::invalid_argument("Z4 word length must be in [1, 32], got " +
                                    std::to_string(n));
}

// Per-coordinate product mod 4, packed.  For lanes a = 2a1 + a0 and
// b = 2b1 + b0 the product mod 4 has low bit a0 b0 and high bit
// a1 b0 + a0 b1 (mod 2).
int z4_dot(PackedWord a, PackedWord b, std::uint64_t lo) {
    std::uint64_t lo_bits = a & b & lo;
    std::uint64_t hi_bits = (((a >> 1) & b) ^ (a & (b >> 1))) & lo;
    return (2 * __builtin_popcountll(hi_bits) + __builtin_popcountll(lo_bits)) & 3;
}

// Smallest subgroup containing `words` (already a subgroup) and g.  A sum of
// subgroups closed under Z4 scalars stays closed, so one product pass is
// enough.
void grow_span(std::vector<PackedWord>& words, PackedWord g, std::uint64_t lo) {
    PackedWord mult[4];
    for (int s = 0; s < 4; ++s) mult[s] = z4_scale(g, s, lo);
    if (words.size() > kMaxZ4Scan / 4)
        throw BudgetError("z4 span exceeds " + std::to_string(kMaxZ4Scan) +
                          " words");
    std::vector<PackedWord> next;
    next.reserve(words.size() * 4);
    for (PackedWord w : words)
        for (int s = 0; s < 4; ++s) next.push_back(z4_add(w, mult[s], lo));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    words = std::move(next);
}

}  // namespace

PackedWord z4_pack(const Word& w) {
    check_length(static_cast<int>(w.size()));
    for (Symbol s : w)
        if (s > 3)
            throw std::invalid_argument("Z4 symbol out of range: " +
                                        std::to_string(static_cast<int>(s)));
    return pack_word(w, 4);
}

Word z4_unpack(PackedWord p, int n) {
    check_length(n);
    return unpack_word(p, n, 4);
}

int lee_weight(Symbol s) {
    static constexpr int kLee[4] = {0, 1, 2, 1};
    if (s > 3)
        throw std::invalid_argument("Z4 symbol out of range: " +
                                    std::to_string(static_cast<int>(s)));
    return kLee[s];
}

int lee_weight(const Word& w) {
    int total = 0;
    for (Symbol s : w) total += lee_weight(s);
    return total;
}

int lee_distance(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("lee_distance: length mismatch");
    int total = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        total += lee_weight(static_cast<Symbol>((4 + u[i] - v[i]) & 3));
    return total;
}

Z4Code z4_code_from_matrix(const std::vector<Word>& rows, int n) {
    check_length(n);
    Z4Code c;
    c.n = n;
    c.generators = rows;
    std::uint64_t lo = z4_lo_mask(n);
    c.words = {0};
    for (const Word& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument(
                "generator row has length " + std::to_string(row.size()) +
                ", expected " + std::to_string(n));
        grow_span(c.words, z4_pack(row), lo);
    }
    return c;
}

Z4Code z4_dual(const Z4Code& c, std::uint64_t scan_budget) {
    std::uint64_t total = checked_pow(4, c.n, scan_budget, "z4_dual scan");
    std::uint64_t lo = z4_lo_mask(c.n);
    std::vector<PackedWord> basis;
    if (!c.generators.empty()) {
        for (const Word& g : c.generators) basis.push_back(z4_pack(g));
    } else {
        basis = c.words;
    }
    Z4Code d;
    d.n = c.n;
    for (PackedWord x = 0; x < total; ++x) {
        bool orth = true;
        for (PackedWord b : basis)
            if (z4_dot(x, b, lo) != 0) {
                orth = false;
                break;
            }
        if (orth) d.words.push_back(x);
    }
    if (c.words.size() * d.words.size() != total)
        throw std::logic_error("z4_dual: |C| * |C_dual| != 4^n");
    d.generators = z4_generating_set(d.words, d.n);
    return d;
}

int min_lee_weight(const Z4Code& c) {
    int best = 2 * c.n + 1;
    std::uint64_t lo = z4_lo_mask(c.n);
    for (PackedWord w : c.words)
        if (w != 0) best = std::min(best, z4_lee_weight(w, lo));
    return best;
}

int min_hamming_weight(const Z4Code& c) {
    int best = c.n + 1;
    std::uint64_t lo = z4_lo_mask(c.n);
    for (PackedWord w : c.words)
        if (w != 0) best = std::min(best, z4_hamming_weight(w, lo));
    return best;
}

std::pair<int, int> z4_type(const Z4Code& c) {
    std::uint64_t lo = z4_lo_mask(c.n);
    std::vector<PackedWord> doubled;
    doubled.reserve(c.words.size());
    for (PackedWord w : c.words) doubled.push_back(z4_scale(w, 2, lo));
    std::sort(doubled.begin(), doubled.end());
    doubled.erase(std::unique(doubled.begin(), doubled.end()), doubled.end());
    auto log2_exact = [](std::uint64_t v) {
        int e = 0;
        while (v > 1) {
            if (v & 1) throw std::logic_error("z4_type: size not a power of 2");
            v >>= 1;
            ++e;
        }
        return e;
    };
    int k1 = log2_exact(doubled.size());
    int k2 = log2_exact(c.words.size()) - 2 * k1;
    if (k2 < 0) throw std::logic_error("z4_type: inconsistent code size");
    return {k1, k2};
}

std::vector<Word> z4_generating_set(const std::vector<PackedWord>& words, int n) {
    check_length(n);
    std::uint64_t lo = z4_lo_mask(n);
    std::vector<PackedWord> span = {0};
    std::vector<Word> gens;
    for (PackedWord w : words) {
        if (span.size() == words.size()) break;
        if (std::binary_search(span.begin(), span.end(), w)) continue;
        gens.push_back(z4_unpack(w, n));
        grow_span(span, w, lo);
    }
    return gens;
}

Z4StandardForm random_standard_form(int n, int k1, int k2, std::uint64_t seed) {
    check_length(n);
    if (k1 < 0 || k2 < 0 || k1 + k2 > n)
        throw std::invalid_argument("standard form requires k1, k2 >= 0 and "
                                    "k1 + k2 <= n");
    Z4StandardForm sf;
    sf.n = n;
    sf.k1 = k1;
    sf.k2 = k2;
    int k3 = sf.k3();
    // Fixed draw order (A, then B, then C, row-major) keeps a given seed
    // reproducible across platforms; mt19937_64 output is specified exactly.
    std::mt19937_64 rng(seed);
    sf.a.assign(static_cast<std::size_t>(k1), Word(static_cast<std::size_t>(k2)));
    for (auto& row : sf.a)
        for (auto& x : row) x = static_cast<Symbol>(rng() & 3);
    sf.b.assign(static_cast<std::size_t>(k1), Word(static_cast<std::size_t>(k3)));
    for (auto& row : sf.b)
        for (auto& x : row) x = static_cast<Symbol>(rng() & 3);
    sf.c.assign(static_cast<std::size_t>(k2), Word(static_cast<std::size_t>(k3)));
    for (auto& row : sf.c)
        for (auto& x : row) x = static_cast<Symbol>(rng() & 1);
    return sf;
}

std::vector<Word> standard_form_matrix(const Z4StandardForm& sf) {
    int k3 = sf.k3();
    std::vector<Word> rows;
    for (int i = 0; i < sf.k1; ++i) {
        Word row(static_cast<std::size_t>(sf.n), 0);
        row[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < sf.k2; ++j)
            row[static_cast<std::size_t>(sf.k1 + j)] = sf.a[i][j];
        for (int j = 0; j < k3; ++j)
            row[static_cast<std::size_t>(sf.k1 + sf.k2 + j)] = sf.b[i][j];
        rows.push_back(std::move(row));
    }
    for (int i = 0; i < sf.k2; ++i) {
        Word row(static_cast<std::size_t>(sf.n), 0);
        row[static_cast<std::size_t>(sf.k1 + i)] = 2;
        for (int j = 0; j < k3; ++j)
            row[static_cast<std::size_t>(sf.k1 + sf.k2 + j)] =
                static_cast<Symbol>(2 * sf.c[i][j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

Z4Code standard_form_code(const Z4StandardForm& sf) {
    Z4Code c = z4_code_from_matrix(standard_form_matrix(sf), sf.n);
    std::uint64_t expect =
        checked_pow(4, sf.k1, kMaxZ4Scan, "standard_form_code size") *
        checked_pow(2, sf.k2, kMaxZ4Scan, "standard_form_code size");
    if (c.words.size() != expect)
        throw std::logic_error("standard form rows are not independent");
    c.type_exponents = {sf.k1, sf.k2};
    return c;
}

Z4Code standard_form_dual(const Z4StandardForm& sf) {
    int k1 = sf.k1, k2 = sf.k2, k3 = sf.k3();
    std::vector<Word> rows;
    // [ -(B^T + C^T A^T)   C^T   I_k3 ]
    for (int r = 0; r < k3; ++r) {
        Word row(static_cast<std::size_t>(sf.n), 0);
        for (int j = 0; j < k1; ++j) {
            int v = sf.b[j][r];
            for (int m = 0; m < k2; ++m) v += sf.c[m][r] * sf.a[j][m];
            row[static_cast<std::size_t>(j)] = static_cast<Symbol>((4 - v % 4) & 3);
        }
        for (int m = 0; m < k2; ++m)
            row[static_cast<std::size_t>(k1 + m)] = sf.c[m][r];
        row[static_cast<std::size_t>(k1 + k2 + r)] = 1;
        rows.push_back(std::move(row));
    }
    // [ 2A^T   2I_k2   0 ]
    for (int m = 0; m < k2; ++m) {
        Word row(static_cast<std::size_t>(sf.n), 0);
        for (int j = 0; j < k1; ++j)
            row[static_cast<std::size_t>(j)] =
                static_cast<Symbol>((2 * sf.a[j][m]) & 3);
        row[static_cast<std::size_t>(k1 + m)] = 2;
        rows.push_back(std::move(row));
    }
    Z4Code d = z4_code_from_matrix(rows, sf.n);
    std::uint64_t expect =
        checked_pow(4, k3, kMaxZ4Scan, "standard_form_dual size") *
        checked_pow(2, k2, kMaxZ4Scan, "standard_form_dual size");
    if (d.words.size() != expect)
        throw std::logic_error("standard form dual has unexpected size");
    d.type_exponents = {k3, k2};
    return d;
}

Z4Code random_z4_code(int n, int k1, int k2, std::uint64_t seed) {
    return standard_form_code(random_standard_form(n, k1, k2, seed));
}

std::vector<Word> unpacked_words(const Z4Code& c) {
    std::vector<Word> out;
    out.reserve(c.words.size());
    for (PackedWord w : c.words) out.push_back(z4_unpack(w, c.n));
    return out;
}

OaArray to_array(const Z4Code& c) {
    return make_array(unpacked_words(c), 4);
}

}  // namespace z4oa
