#include "z4oa/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace z4oa {

namespace {

void fill_neg_table(FiniteRing& r) {
    r.neg_table.assign(static_cast<std::size_t>(r.size), 0);
    for (int a = 0; a < r.size; ++a) {
        bool found = false;
        for (int b = 0; b < r.size; ++b) {
            if (r.add(Symbol(a), Symbol(b)) == r.zero) {
                r.neg_table[static_cast<std::size_t>(a)] = Symbol(b);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error(r.name + ": element " + std::to_string(a) +
                                   " has no additive inverse");
    }
}

std::vector<Symbol> sorted_unique(std::vector<Symbol> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

FiniteRing make_zn(int n) {
    if (n < 2 || n > 16)
        throw std::invalid_argument("make_zn: n = " + std::to_string(n) +
                                    " outside supported range 2..16");
    FiniteRing r;
    r.name = "Z" + std::to_string(n);
    r.size = n;
    r.add_table.resize(static_cast<std::size_t>(n) * n);
    r.mul_table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add_table[static_cast<std::size_t>(a) * n + b] = Symbol((a + b) % n);
            r.mul_table[static_cast<std::size_t>(a) * n + b] = Symbol((a * b) % n);
        }
    r.zero = 0;
    r.one = 1;
    for (int a = 0; a < n; ++a) r.element_names.push_back(std::to_string(a));
    fill_neg_table(r);
    validate_ring(r);
    return r;
}

FiniteRing make_product(const FiniteRing& r1, const FiniteRing& r2) {
    const int m = r1.size * r2.size;
    if (m > 64)
        throw std::invalid_argument("make_product: |R1|*|R2| = " +
                                    std::to_string(m) + " exceeds 64");
    FiniteRing r;
    r.name = r1.name + "x" + r2.name;
    r.size = m;
    r.add_table.resize(static_cast<std::size_t>(m) * m);
    r.mul_table.resize(static_cast<std::size_t>(m) * m);
    auto id = [&](int a1, int a2) { return a1 * r2.size + a2; };
    for (int a1 = 0; a1 < r1.size; ++a1)
        for (int a2 = 0; a2 < r2.size; ++a2)
            for (int b1 = 0; b1 < r1.size; ++b1)
                for (int b2 = 0; b2 < r2.size; ++b2) {
                    const std::size_t pos =
                        static_cast<std::size_t>(id(a1, a2)) * m + id(b1, b2);
                    r.add_table[pos] = Symbol(id(r1.add(Symbol(a1), Symbol(b1)),
                                                 r2.add(Symbol(a2), Symbol(b2))));
                    r.mul_table[pos] = Symbol(id(r1.mul(Symbol(a1), Symbol(b1)),
                                                 r2.mul(Symbol(a2), Symbol(b2))));
                }
    r.zero = Symbol(id(r1.zero, r2.zero));
    r.one = Symbol(id(r1.one, r2.one));
    for (int a1 = 0; a1 < r1.size; ++a1)
        for (int a2 = 0; a2 < r2.size; ++a2)
            r.element_names.push_back("(" + r1.element_names[a1] + "," +
                                      r2.element_names[a2] + ")");
    fill_neg_table(r);
    validate_ring(r);
    return r;
}

FiniteRing make_r8() {
    // Elements x + y*a with x in Z4, y in Z2; id = 2x + y.
    FiniteRing r;
    r.name = "R8";
    r.size = 8;
    r.add_table.resize(64);
    r.mul_table.resize(64);
    auto id = [](int x, int y) { return 2 * x + y; };
    for (int x1 = 0; x1 < 4; ++x1)
        for (int y1 = 0; y1 < 2; ++y1)
            for (int x2 = 0; x2 < 4; ++x2)
                for (int y2 = 0; y2 < 2; ++y2) {
                    const std::size_t pos =
                        static_cast<std::size_t>(id(x1, y1)) * 8 + id(x2, y2);
                    r.add_table[pos] = Symbol(id((x1 + x2) % 4, (y1 + y2) % 2));
                    // (x1 + y1 a)(x2 + y2 a) = x1 x2 + (x1 y2 + x2 y1) a, using 2a = a^2 = 0
                    r.mul_table[pos] =
                        Symbol(id((x1 * x2) % 4, (x1 * y2 + x2 * y1) % 2));
                }
    r.zero = Symbol(id(0, 0));
    r.one = Symbol(id(1, 0));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 2; ++y) {
            std::string nm;
            if (y == 0) nm = std::to_string(x);
            else if (x == 0) nm = "a";
            else nm = std::to_string(x) + "+a";
            r.element_names.push_back(nm);
        }
    fill_neg_table(r);
    validate_ring(r);
    return r;
}

void validate_ring(const FiniteRing& r) {
    const int m = r.size;
    auto fail = [&](const std::string& what) {
        throw std::logic_error(r.name + ": " + what);
    };
    if (m <= 0 || r.add_table.size() != static_cast<std::size_t>(m) * m ||
        r.mul_table.size() != static_cast<std::size_t>(m) * m)
        fail("malformed tables");
    for (int a = 0; a < m; ++a) {
        if (r.add(r.zero, Symbol(a)) != a) fail("zero is not an additive identity");
        if (r.mul(r.one, Symbol(a)) != a) fail("one is not a multiplicative identity");
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (r.add(Symbol(a), Symbol(b)) != r.add(Symbol(b), Symbol(a)))
                fail("addition is not commutative");
            if (r.mul(Symbol(a), Symbol(b)) != r.mul(Symbol(b), Symbol(a)))
                fail("multiplication is not commutative");
        }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                const Symbol sa = Symbol(a), sb = Symbol(b), sc = Symbol(c);
                if (r.add(r.add(sa, sb), sc) != r.add(sa, r.add(sb, sc)))
                    fail("addition is not associative");
                if (r.mul(r.mul(sa, sb), sc) != r.mul(sa, r.mul(sb, sc)))
                    fail("multiplication is not associative");
                if (r.mul(sa, r.add(sb, sc)) != r.add(r.mul(sa, sb), r.mul(sa, sc)))
                    fail("distributivity fails");
            }
    for (int a = 0; a < m; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < m && !has_inverse; ++b)
            has_inverse = r.add(Symbol(a), Symbol(b)) == r.zero;
        if (!has_inverse) fail("missing additive inverse");
    }
}

bool is_ideal(const FiniteRing& r, const std::vector<Symbol>& members) {
    if (members.empty()) return false;
    std::vector<bool> in(static_cast<std::size_t>(r.size), false);
    for (Symbol s : members) {
        if (s >= r.size) return false;
        in[s] = true;
    }
    if (!in[r.zero]) return false;
    for (Symbol x : members) {
        for (Symbol y : members)
            if (!in[r.add(x, y)]) return false;
        for (int s = 0; s < r.size; ++s)
            if (!in[r.mul(Symbol(s), x)]) return false;
    }
    return true;
}

Ideal principal_ideal(const FiniteRing& r, Symbol a) {
    std::vector<Symbol> members;
    members.reserve(static_cast<std::size_t>(r.size));
    for (int s = 0; s < r.size; ++s) members.push_back(r.mul(Symbol(s), a));
    return Ideal{sorted_unique(std::move(members))};
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& r) {
    if (r.size > 16)
        throw BudgetError("enumerate_ideals: |R| = " + std::to_string(r.size) +
                          " exceeds 16");
    std::set<std::vector<Symbol>> found;
    for (int a = 0; a < r.size; ++a)
        found.insert(principal_ideal(r, Symbol(a)).members);
    // Close under pairwise sums; I + J = {i + j} is again an ideal.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Symbol>> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<Symbol> sum;
                for (Symbol x : snapshot[i])
                    for (Symbol y : snapshot[j]) sum.push_back(r.add(x, y));
                sum = sorted_unique(std::move(sum));
                if (found.insert(sum).second) grew = true;
            }
    }
    std::vector<Ideal> ideals;
    for (const auto& members : found) ideals.push_back(Ideal{members});
    std::sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return ideals;
}

Ideal annihilator(const FiniteRing& r, const Ideal& ideal) {
    if (!is_ideal(r, ideal.members))
        throw std::invalid_argument("annihilator: members do not form an ideal of " +
                                    r.name);
    std::vector<Symbol> members;
    for (int s = 0; s < r.size; ++s) {
        bool kills = true;
        for (Symbol x : ideal.members)
            if (r.mul(Symbol(s), x) != r.zero) {
                kills = false;
                break;
            }
        if (kills) members.push_back(Symbol(s));
    }
    return Ideal{std::move(members)};
}

PropertyPlusResult has_property_plus(const FiniteRing& r) {
    for (const Ideal& ideal : enumerate_ideals(r)) {
        if (static_cast<int>(ideal.members.size()) == r.size) continue;  // I = R
        Ideal ann = annihilator(r, ideal);
        if (ann.members.size() <= 1) return {false, ideal};
    }
    return {true, std::nullopt};
}

bool columns_independent(const FiniteRing& r, const RingMatrix& a) {
    if (a.empty() || a.front().empty())
        throw std::invalid_argument("columns_independent: empty matrix");
    const int t = static_cast<int>(a.front().size());
    for (const Word& row : a)
        if (static_cast<int>(row.size()) != t)
            throw std::invalid_argument("columns_independent: ragged matrix");
    const std::uint64_t total = checked_pow(
        static_cast<std::uint64_t>(r.size), t, kMaxCoefficientScan,
        "columns_independent coefficient scan");
    Word c(static_cast<std::size_t>(t), r.zero);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        // odometer over coefficient vectors, skipping the all-zero one
        int pos = t - 1;
        while (true) {
            c[static_cast<std::size_t>(pos)] =
                Symbol((c[static_cast<std::size_t>(pos)] + 1) % r.size);
            if (c[static_cast<std::size_t>(pos)] != 0) break;
            --pos;
        }
        bool annihilates_all = true;
        for (const Word& row : a) {
            Symbol dot = r.zero;
            for (int j = 0; j < t; ++j)
                dot = r.add(dot, r.mul(row[static_cast<std::size_t>(j)],
                                       c[static_cast<std::size_t>(j)]));
            if (dot != r.zero) {
                annihilates_all = false;
                break;
            }
        }
        if (annihilates_all) return false;
    }
    return true;
}

namespace {

// Submodule closure of `gens` inside R^n: BFS over w -> w + s*g.
std::vector<PackedWord> submodule_closure(const FiniteRing& r, int n,
                                          const std::vector<Word>& gens) {
    checked_pow(static_cast<std::uint64_t>(r.size), n, kMaxAmbientScan,
                "submodule closure ambient module");
    std::unordered_set<PackedWord> seen;
    std::vector<Word> frontier;
    const Word zero_word(static_cast<std::size_t>(n), r.zero);
    seen.insert(pack_word(zero_word, r.size));
    frontier.push_back(zero_word);
    while (!frontier.empty()) {
        Word w = std::move(frontier.back());
        frontier.pop_back();
        for (const Word& g : gens)
            for (int s = 0; s < r.size; ++s) {
                Word next(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    next[static_cast<std::size_t>(i)] =
                        r.add(w[static_cast<std::size_t>(i)],
                              r.mul(Symbol(s), g[static_cast<std::size_t>(i)]));
                if (seen.insert(pack_word(next, r.size)).second)
                    frontier.push_back(std::move(next));
            }
    }
    std::vector<PackedWord> words(seen.begin(), seen.end());
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace

RingCode row_space(const FiniteRing& r, const RingMatrix& a) {
    if (a.empty())
        throw std::invalid_argument("row_space: empty matrix");
    const int t = static_cast<int>(a.front().size());
    return ring_code_from_generators(r, t, a);
}

RingCode ring_code_from_generators(const FiniteRing& r, int n,
                                   const std::vector<Word>& gens) {
    if (n < 1)
        throw std::invalid_argument("ring_code_from_generators: length must be >= 1");
    for (const Word& g : gens) {
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument(
                "ring_code_from_generators: generator length " +
                std::to_string(g.size()) + " != n = " + std::to_string(n));
        for (Symbol s : g)
            if (s >= r.size)
                throw std::invalid_argument(
                    "ring_code_from_generators: element id out of range");
    }
    RingCode c;
    c.ring = r;
    c.n = n;
    c.generators = gens;
    c.words = submodule_closure(r, n, gens);
    return c;
}

bool check_property_star(const FiniteRing& r, const RingMatrix& a) {
    if (!columns_independent(r, a))
        throw std::invalid_argument(
            "check_property_star: columns are not linearly independent");
    const int t = static_cast<int>(a.front().size());
    const std::uint64_t full =
        checked_pow(static_cast<std::uint64_t>(r.size), t, kMaxAmbientScan,
                    "check_property_star row space");
    return row_space(r, a).words.size() == full;
}

RingCode dual_code(const RingCode& c) {
    const FiniteRing& r = c.ring;
    const std::uint64_t total =
        checked_pow(static_cast<std::uint64_t>(r.size), c.n, kMaxAmbientScan,
                    "dual_code ambient scan");
    // Orthogonality to the generators is orthogonality to the whole module.
    std::vector<Word> basis = c.generators;
    if (basis.empty())
        for (PackedWord p : c.words) basis.push_back(unpack_word(p, c.n, r.size));

    std::vector<PackedWord> dual_words;
    Word x(static_cast<std::size_t>(c.n), r.zero);
    for (std::uint64_t idx = 0;; ++idx) {
        bool orthogonal = true;
        for (const Word& g : basis) {
            Symbol dot = r.zero;
            for (int i = 0; i < c.n; ++i)
                dot = r.add(dot, r.mul(x[static_cast<std::size_t>(i)],
                                       g[static_cast<std::size_t>(i)]));
            if (dot != r.zero) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) dual_words.push_back(idx);
        if (idx + 1 == total) break;
        int pos = c.n - 1;
        while (true) {
            x[static_cast<std::size_t>(pos)] =
                Symbol((x[static_cast<std::size_t>(pos)] + 1) % r.size);
            if (x[static_cast<std::size_t>(pos)] != 0) break;
            --pos;
        }
    }

    RingCode d;
    d.ring = r;
    d.n = c.n;
    d.words = std::move(dual_words);
    // The dual is a submodule; re-check closure under addition and scalars.
    std::unordered_set<PackedWord> in(d.words.begin(), d.words.end());
    for (PackedWord p : d.words) {
        Word w = unpack_word(p, c.n, r.size);
        for (int s = 0; s < r.size; ++s) {
            Word sw(static_cast<std::size_t>(c.n));
            for (int i = 0; i < c.n; ++i)
                sw[static_cast<std::size_t>(i)] =
                    r.mul(Symbol(s), w[static_cast<std::size_t>(i)]);
            if (!in.count(pack_word(sw, r.size)))
                throw std::logic_error("dual_code: result not closed under scalars");
        }
    }
    if (static_cast<std::uint64_t>(d.words.size()) *
            static_cast<std::uint64_t>(d.words.size()) <=
        kMaxAmbientScan) {
        for (PackedWord p : d.words) {
            Word u = unpack_word(p, c.n, r.size);
            for (PackedWord q : d.words) {
                Word v = unpack_word(q, c.n, r.size);
                Word sum(static_cast<std::size_t>(c.n));
                for (int i = 0; i < c.n; ++i)
                    sum[static_cast<std::size_t>(i)] =
                        r.add(u[static_cast<std::size_t>(i)],
                              v[static_cast<std::size_t>(i)]);
                if (!in.count(pack_word(sum, r.size)))
                    throw std::logic_error(
                        "dual_code: result not closed under addition");
            }
        }
    }
    return d;
}

std::vector<Word> generating_set(const FiniteRing& r, int n,
                                 const std::vector<PackedWord>& words) {
    std::vector<Word> gens;
    RingCode span = ring_code_from_generators(r, n, {});
    for (PackedWord w : words) {
        if (span.words.size() == words.size()) break;
        if (std::binary_search(span.words.begin(), span.words.end(), w)) continue;
        gens.push_back(unpack_word(w, n, r.size));
        span = ring_code_from_generators(r, n, gens);
    }
    return gens;
}

int min_hamming_weight(const RingCode& c) {
    int best = c.n + 1;  // sentinel: the zero code has no non-zero word
    for (PackedWord p : c.words) {
        Word w = unpack_word(p, c.n, c.ring.size);
        int wt = 0;
        for (Symbol s : w) wt += s != c.ring.zero;
        if (wt > 0 && wt < best) best = wt;
    }
    return best;
}

std::vector<Word> unpacked_words(const RingCode& c) {
    std::vector<Word> rows;
    rows.reserve(c.words.size());
    for (PackedWord p : c.words) rows.push_back(unpack_word(p, c.n, c.ring.size));
    return rows;
}

OaArray to_array(const RingCode& c) {
    return make_array(unpacked_words(c), c.ring.size);
}

}  // namespace z4oa
