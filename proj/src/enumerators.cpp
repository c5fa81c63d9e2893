#include "z4oa/enumerators.hpp"

#include <algorithm>
#include <stdexcept>

namespace z4oa {

namespace mp = boost::multiprecision;

BigInt Enumerator::total() const {
    BigInt t = 0;
    for (const BigInt& c : coefficients) t += c;
    return t;
}

Enumerator Enumerator::normalized() const {
    BigInt g = scale;
    for (const BigInt& c : coefficients) g = mp::gcd(g, mp::abs(c));
    if (g == 0) g = 1;
    Enumerator out;
    out.scale = scale / g;
    out.coefficients.reserve(coefficients.size());
    for (const BigInt& c : coefficients) out.coefficients.push_back(c / g);
    return out;
}

bool enumerators_equal(const Enumerator& a, const Enumerator& b) {
    if (a.coefficients.size() != b.coefficients.size()) return false;
    for (std::size_t i = 0; i < a.coefficients.size(); ++i)
        if (a.coefficients[i] * b.scale != b.coefficients[i] * a.scale)
            return false;
    return true;
}

std::string enumerator_to_string(const Enumerator& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
        if (i) s += ",";
        s += e.coefficients[i].str();
    }
    s += ")";
    if (e.scale != 1) s += "/" + e.scale.str();
    return s;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt krawtchouk(int k, int x, int n, int q) {
    if (n < 0 || k < 0 || k > n || x < 0 || x > n)
        throw std::invalid_argument("krawtchouk: need 0 <= k, x <= n");
    if (q < 2) throw std::invalid_argument("krawtchouk: need q >= 2");
    // (q-1)^{k-j} for j = k down to 0, built incrementally.
    std::vector<BigInt> qpow(static_cast<std::size_t>(k) + 1);
    qpow[0] = 1;
    for (int e = 1; e <= k; ++e) qpow[e] = qpow[e - 1] * (q - 1);
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt term = qpow[k - j] * binomial(x, j) * binomial(n - x, k - j);
        if (j & 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

Enumerator hamming_weight_enumerator(const std::vector<Word>& words, int n) {
    Enumerator e;
    e.coefficients.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Word& w : words) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("word length mismatch in enumerator");
        int wt = 0;
        for (Symbol s : w) wt += s != 0;
        ++e.coefficients[static_cast<std::size_t>(wt)];
    }
    return e;
}

Enumerator hamming_weight_enumerator(const Z4Code& c) {
    Enumerator e;
    e.coefficients.assign(static_cast<std::size_t>(c.n) + 1, 0);
    std::uint64_t lo = z4_lo_mask(c.n);
    for (PackedWord w : c.words)
        ++e.coefficients[static_cast<std::size_t>(z4_hamming_weight(w, lo))];
    return e;
}

Enumerator hamming_weight_enumerator(const BinaryCode& c) {
    Enumerator e;
    e.coefficients.assign(static_cast<std::size_t>(c.m) + 1, 0);
    for (PackedWord w : c.words)
        ++e.coefficients[static_cast<std::size_t>(binary_weight(w))];
    return e;
}

Enumerator hamming_weight_enumerator(const RingCode& c) {
    Enumerator e;
    e.coefficients.assign(static_cast<std::size_t>(c.n) + 1, 0);
    for (PackedWord p : c.words) {
        Word w = unpack_word(p, c.n, c.ring.size);
        int wt = 0;
        for (Symbol s : w) wt += s != c.ring.zero;
        ++e.coefficients[static_cast<std::size_t>(wt)];
    }
    return e;
}

Enumerator lee_weight_enumerator(const Z4Code& c) {
    Enumerator e;
    e.coefficients.assign(static_cast<std::size_t>(2 * c.n) + 1, 0);
    std::uint64_t lo = z4_lo_mask(c.n);
    for (PackedWord w : c.words)
        ++e.coefficients[static_cast<std::size_t>(z4_lee_weight(w, lo))];
    // The Gray map is a Lee->Hamming isometry, so the two routes must agree.
    Enumerator via_gray = hamming_weight_enumerator(gray_image(c));
    if (!enumerators_equal(e, via_gray))
        throw std::logic_error(
            "lee_weight_enumerator disagrees with the Gray-image route");
    return e;
}

namespace {

Enumerator pair_tally_to_enumerator(std::vector<unsigned long long> tally,
                                    std::size_t n_words) {
    Enumerator e;
    e.coefficients.reserve(tally.size());
    for (unsigned long long t : tally) e.coefficients.emplace_back(t);
    e.scale = n_words;
    return e;
}

}  // namespace

Enumerator distance_enumerator(const std::vector<Word>& words, int n,
                               Metric metric) {
    if (words.empty())
        throw std::invalid_argument("distance_enumerator: empty code");
    int max_d = metric == Metric::lee ? 2 * n : n;
    std::vector<unsigned long long> tally(static_cast<std::size_t>(max_d) + 1, 0);
    tally[0] = words.size();
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (static_cast<int>(words[i].size()) != n)
            throw std::invalid_argument("word length mismatch in enumerator");
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            int d = 0;
            if (metric == Metric::lee) {
                d = lee_distance(words[i], words[j]);
            } else {
                for (int t = 0; t < n; ++t) d += words[i][t] != words[j][t];
            }
            tally[static_cast<std::size_t>(d)] += 2;  // ordered pairs
        }
    }
    return pair_tally_to_enumerator(std::move(tally), words.size());
}

Enumerator distance_enumerator(const BinaryCode& c) {
    if (c.words.empty())
        throw std::invalid_argument("distance_enumerator: empty code");
    std::vector<unsigned long long> tally(static_cast<std::size_t>(c.m) + 1, 0);
    tally[0] = c.words.size();
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            tally[static_cast<std::size_t>(
                binary_weight(c.words[i] ^ c.words[j]))] += 2;
    return pair_tally_to_enumerator(std::move(tally), c.words.size());
}

Enumerator distance_enumerator(const Z4Code& c, Metric metric) {
    if (c.words.empty())
        throw std::invalid_argument("distance_enumerator: empty code");
    int max_d = metric == Metric::lee ? 2 * c.n : c.n;
    std::uint64_t lo = z4_lo_mask(c.n);
    std::vector<unsigned long long> tally(static_cast<std::size_t>(max_d) + 1, 0);
    tally[0] = c.words.size();
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j) {
            int d = metric == Metric::lee
                        ? z4_lee_weight(
                              z4_add(c.words[i], z4_neg(c.words[j], lo), lo), lo)
                        : z4_hamming_weight(c.words[i] ^ c.words[j], lo);
            tally[static_cast<std::size_t>(d)] += 2;
        }
    return pair_tally_to_enumerator(std::move(tally), c.words.size());
}

Enumerator distance_enumerator(const OaArray& a, Metric metric) {
    if (metric == Metric::lee && a.alphabet != 4)
        throw std::invalid_argument(
            "Lee distance enumerator requires alphabet 4");
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(a.rows));
    for (int r = 0; r < a.rows; ++r) {
        Word w(static_cast<std::size_t>(a.cols));
        for (int c = 0; c < a.cols; ++c) w[static_cast<std::size_t>(c)] = a.at(r, c);
        rows.push_back(std::move(w));
    }
    return distance_enumerator(rows, a.cols, metric);
}

Enumerator macwilliams_transform(const Enumerator& b, int n, int q,
                                 const BigInt& n_words) {
    if (b.max_index() != n)
        throw std::invalid_argument("macwilliams_transform: enumerator degree " +
                                    std::to_string(b.max_index()) +
                                    " does not match n = " + std::to_string(n));
    if (n_words <= 0)
        throw std::invalid_argument("macwilliams_transform: N must be positive");
    Enumerator out;
    out.coefficients.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        BigInt sum = 0;
        for (int i = 0; i <= n; ++i)
            sum += b.coefficients[static_cast<std::size_t>(i)] *
                   krawtchouk(k, i, n, q);
        out.coefficients[static_cast<std::size_t>(k)] = sum;
    }
    out.scale = b.scale * n_words;
    return out.normalized();
}

bool is_distance_invariant(const std::vector<Word>& words, int n, Metric metric) {
    if (words.size() < 2) return true;
    auto profile = [&](std::size_t i) {
        std::vector<int> d;
        d.reserve(words.size());
        for (const Word& v : words) {
            int dist = 0;
            if (metric == Metric::lee) {
                dist = lee_distance(words[i], v);
            } else {
                if (v.size() != words[i].size())
                    throw std::invalid_argument("word length mismatch");
                for (int t = 0; t < n; ++t) dist += words[i][t] != v[t];
            }
            d.push_back(dist);
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    std::vector<int> first = profile(0);
    for (std::size_t i = 1; i < words.size(); ++i)
        if (profile(i) != first) return false;
    return true;
}

bool is_distance_invariant(const BinaryCode& c) {
    if (c.words.size() < 2) return true;
    auto profile = [&](std::size_t i) {
        std::vector<int> d;
        d.reserve(c.words.size());
        for (PackedWord v : c.words) d.push_back(binary_weight(c.words[i] ^ v));
        std::sort(d.begin(), d.end());
        return d;
    };
    std::vector<int> first = profile(0);
    for (std::size_t i = 1; i < c.words.size(); ++i)
        if (profile(i) != first) return false;
    return true;
}

bool is_distance_invariant(const Z4Code& c, Metric metric) {
    if (c.words.size() < 2) return true;
    std::uint64_t lo = z4_lo_mask(c.n);
    auto profile = [&](std::size_t i) {
        std::vector<int> d;
        d.reserve(c.words.size());
        for (PackedWord v : c.words)
            d.push_back(metric == Metric::lee
                            ? z4_lee_weight(
                                  z4_add(c.words[i], z4_neg(v, lo), lo), lo)
                            : z4_hamming_weight(c.words[i] ^ v, lo));
        std::sort(d.begin(), d.end());
        return d;
    };
    std::vector<int> first = profile(0);
    for (std::size_t i = 1; i < c.words.size(); ++i)
        if (profile(i) != first) return false;
    return true;
}

int dual_distance(const BinaryCode& c) {
    if (!is_distance_invariant(c))
        throw std::invalid_argument(
            "dual_distance requires a distance-invariant code (the distance "
            "multiset must look the same from every codeword)");
    Enumerator b = distance_enumerator(c);
    Enumerator bp =
        macwilliams_transform(b, c.m, 2, BigInt(c.words.size()));
    for (int k = 1; k <= c.m; ++k)
        if (bp.coefficients[static_cast<std::size_t>(k)] != 0) return k;
    return c.m + 1;
}

bool check_lee_macwilliams(const Z4Code& c, std::string* detail) {
    Z4Code dual = z4_dual(c);
    Enumerator lwe = lee_weight_enumerator(c);
    Enumerator lwe_dual = lee_weight_enumerator(dual);
    int deg = 2 * c.n;
    BigInt size_c = c.words.size();

    // |C| * LWE_dual(x, y)  vs  LWE_C(x+y, x-y), coefficient of x^{deg-k} y^k.
    std::vector<BigInt> lhs(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k)
        lhs[static_cast<std::size_t>(k)] =
            size_c * lwe_dual.coefficients[static_cast<std::size_t>(k)];

    std::vector<BigInt> rhs(static_cast<std::size_t>(deg) + 1, 0);
    for (int i = 0; i <= deg; ++i) {
        const BigInt& li = lwe.coefficients[static_cast<std::size_t>(i)];
        if (li == 0) continue;
        // Expand (x+y)^{deg-i} (x-y)^i by convolving binomial rows.
        for (int k = 0; k <= deg; ++k) {
            BigInt coeff = 0;
            for (int j = std::max(0, k - (deg - i)); j <= std::min(i, k); ++j) {
                BigInt term = binomial(i, j) * binomial(deg - i, k - j);
                if (j & 1)
                    coeff -= term;
                else
                    coeff += term;
            }
            rhs[static_cast<std::size_t>(k)] += li * coeff;
        }
    }

    for (int k = 0; k <= deg; ++k) {
        if (lhs[static_cast<std::size_t>(k)] != rhs[static_cast<std::size_t>(k)]) {
            if (detail)
                *detail = "coefficient of x^" + std::to_string(deg - k) + " y^" +
                          std::to_string(k) + ": |C| * LWE_dual gives " +
                          lhs[static_cast<std::size_t>(k)].str() +
                          ", LWE_C(x+y, x-y) gives " +
                          rhs[static_cast<std::size_t>(k)].str();
            return false;
        }
    }
    return true;
}

}  // namespace z4oa
