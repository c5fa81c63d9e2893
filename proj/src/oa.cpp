#include "z4oa/oa.hpp"

#include <algorithm>
#include <stdexcept>

namespace z4oa {

namespace {

// Lexicographic successor of a t-combination out of k columns.
bool next_combination(std::vector<int>& c, int k) {
    const int t = static_cast<int>(c.size());
    for (int i = t - 1; i >= 0; --i) {
        if (c[i] < k - (t - i)) {
            ++c[i];
            for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Tallies the projection of every row onto `cols`; returns lambda on
// uniformity, otherwise fills `fail` with the minimum-count tuple.
std::optional<long long> check_subset(const OaArray& a,
                                      const std::vector<int>& cols,
                                      std::uint64_t cells,
                                      std::vector<long long>& tally,
                                      OaFailure& fail) {
    std::fill(tally.begin(), tally.begin() + static_cast<long long>(cells), 0);
    const int t = static_cast<int>(cols.size());
    for (int r = 0; r < a.rows; ++r) {
        std::uint64_t idx = 0;
        for (int j = 0; j < t; ++j)
            idx = idx * static_cast<std::uint64_t>(a.alphabet) + a.at(r, cols[j]);
        ++tally[idx];
    }
    std::uint64_t min_idx = 0;
    bool uniform = true;
    for (std::uint64_t i = 0; i < cells; ++i) {
        if (tally[i] != tally[0]) uniform = false;
        if (tally[i] < tally[min_idx]) min_idx = i;
    }
    if (uniform) return tally[0];
    fail.columns = cols;
    fail.tuple = unpack_word(min_idx, t, a.alphabet);
    fail.count = tally[min_idx];
    return std::nullopt;
}

}  // namespace

OaArray make_array(const std::vector<Word>& rows, int alphabet) {
    if (rows.empty()) throw std::invalid_argument("make_array: no rows");
    if (alphabet < 1) throw std::invalid_argument("make_array: alphabet must be positive");
    OaArray a;
    a.rows = static_cast<int>(rows.size());
    a.cols = static_cast<int>(rows.front().size());
    a.alphabet = alphabet;
    a.cells.reserve(static_cast<std::size_t>(a.rows) * a.cols);
    for (const Word& w : rows) {
        if (static_cast<int>(w.size()) != a.cols)
            throw std::invalid_argument("make_array: ragged rows");
        for (Symbol s : w) {
            if (s >= alphabet)
                throw std::invalid_argument("make_array: symbol " +
                                            std::to_string(int(s)) +
                                            " outside alphabet of size " +
                                            std::to_string(alphabet));
            a.cells.push_back(s);
        }
    }
    return a;
}

OaCheck is_oa_at(const OaArray& a, int t) {
    if (t < 0 || t > a.cols)
        throw std::invalid_argument("is_oa_at: t = " + std::to_string(t) +
                                    " out of range 0.." + std::to_string(a.cols));
    OaCheck res;
    if (t == 0) {
        res.index = a.rows;
        return res;
    }
    const std::uint64_t cells =
        checked_pow(static_cast<std::uint64_t>(a.alphabet), t, kMaxTallyCells,
                    "is_oa_at tally table");
    std::vector<long long> tally(cells);
    std::vector<int> cols(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) cols[i] = i;
    OaFailure fail;
    long long lambda = 0;
    do {
        std::optional<long long> sub = check_subset(a, cols, cells, tally, fail);
        if (!sub) {
            res.failure = fail;
            return res;
        }
        lambda = *sub;  // identical for every subset once uniform
    } while (next_combination(cols, a.cols));
    res.index = lambda;
    return res;
}

OaReport strength(const OaArray& a) {
    OaReport report;
    report.strength = 0;
    report.index = a.rows;
    for (int t = 1; t <= a.cols; ++t) {
        OaCheck check = is_oa_at(a, t);
        if (!check.ok()) {
            report.failure = check.failure;
            return report;
        }
        report.strength = t;
        report.index = *check.index;
    }
    return report;  // full strength: no failure witness exists
}

long long index_at(const OaArray& a, int s, int t, long long lambda_t) {
    if (s < 0 || s > t)
        throw std::invalid_argument("index_at: need 0 <= s <= t");
    long long expected = lambda_t;
    for (int i = 0; i < t - s; ++i) expected *= a.alphabet;
    OaCheck check = is_oa_at(a, s);
    if (!check.ok())
        throw std::invalid_argument("index_at: array is not an OA of strength " +
                                    std::to_string(s));
    if (*check.index != expected)
        throw std::logic_error("index_at: counted index " +
                               std::to_string(*check.index) +
                               " != f^(t-s)*lambda = " + std::to_string(expected));
    return expected;
}

bool failure_matches(const OaArray& a, const OaFailure& f) {
    const int t = static_cast<int>(f.columns.size());
    if (t < 1 || t > a.cols) return false;
    for (int c : f.columns)
        if (c < 0 || c >= a.cols) return false;
    if (static_cast<int>(f.tuple.size()) != t) return false;
    long long count = 0;
    for (int r = 0; r < a.rows; ++r) {
        bool match = true;
        for (int j = 0; j < t && match; ++j)
            match = a.at(r, f.columns[j]) == f.tuple[j];
        if (match) ++count;
    }
    if (count != f.count) return false;
    // A genuine witness counts strictly below the uniform average N / f^t.
    long long ft = 1;
    for (int j = 0; j < t; ++j) ft *= a.alphabet;
    return count * ft < a.rows;
}

}  // namespace z4oa
